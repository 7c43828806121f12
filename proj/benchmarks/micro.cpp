#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "tst/align/align.hpp"
#include "tst/align/extract.hpp"
#include "tst/apply/apply.hpp"
#include "tst/core/hash.hpp"
#include "tst/engine/engine.hpp"
#include "tst/metrics/sari.hpp"
#include "tst/tagger/stat_tagger.hpp"

namespace {

using namespace tst;

const std::vector<std::string> kWords = {"the", "a", "river", "city", "was", "is", "old", "small",
                                         "of",  "in", "and", "near", "book", "wrote", ",", "."};

std::vector<std::string> random_words(SplitMix64& rng, std::size_t n) {
  std::vector<std::string> out(n);
  for (auto& w : out) w = kWords[rng.below(kWords.size())];
  return out;
}

// A target that shares most of the source with a few edits.
std::vector<std::string> perturb(const std::vector<std::string>& src, SplitMix64& rng) {
  std::vector<std::string> out;
  for (const auto& w : src) {
    const double r = rng.unit();
    if (r < 0.1) continue;
    out.push_back(r < 0.2 ? kWords[rng.below(kWords.size())] : w);
    if (rng.unit() < 0.05) out.push_back(kWords[rng.below(kWords.size())]);
  }
  return out;
}

std::vector<SentencePair> make_pairs(std::size_t count, std::size_t len, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<SentencePair> pairs;
  for (std::size_t i = 0; i < count; ++i) {
    auto src = random_words(rng, len);
    auto tgt = perturb(src, rng);
    pairs.emplace_back(TokenSeq(src), TokenSeq(tgt));
  }
  return pairs;
}

void BM_Align(benchmark::State& state) {
  const auto pairs = make_pairs(64, static_cast<std::size_t>(state.range(0)), 1);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [s, t] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(align(s, t));
  }
}
BENCHMARK(BM_Align)->Arg(10)->Arg(25)->Arg(60);

void BM_ExtractApply(benchmark::State& state) {
  const auto pairs = make_pairs(64, static_cast<std::size_t>(state.range(0)), 2);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [s, t] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(apply_tags(s, extract_tags(s, t)));
  }
}
BENCHMARK(BM_ExtractApply)->Arg(10)->Arg(25)->Arg(60);

void BM_CorpusSari(benchmark::State& state) {
  SplitMix64 rng(3);
  std::vector<EvalRecord> records;
  for (int i = 0; i < state.range(0); ++i) {
    const auto src = random_words(rng, 25);
    auto join = [](const std::vector<std::string>& w) {
      std::string s;
      for (const auto& x : w) s += (s.empty() ? "" : " ") + x;
      return s;
    };
    records.push_back({join(src), join(perturb(src, rng)), {join(perturb(src, rng)), join(perturb(src, rng))}});
  }
  for (auto _ : state) benchmark::DoNotOptimize(sari(records));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CorpusSari)->Arg(100)->Arg(1000);

void BM_StatPredict(benchmark::State& state) {
  const auto pairs = make_pairs(300, 20, 4);
  TagCounts counts;
  for (const auto& [s, t] : pairs) count_tags(s, t, counts);
  const auto vocab = TagVocabulary::from_counts(counts, 5000);
  StatTrainOptions opts;
  opts.epochs = 1;
  const auto model = stat_train(pairs, vocab, opts);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(model.predict(pairs[i++ % pairs.size()].first));
}
BENCHMARK(BM_StatPredict);

}  // namespace

BENCHMARK_MAIN();
