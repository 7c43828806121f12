#include "tst/tune/tune.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <cmath>
#include <ostream>

#include "tst/core/errors.hpp"
#include "tst/core/hash.hpp"
#include "tst/engine/engine.hpp"
#include "tst/metrics/sari.hpp"

namespace tst {

namespace {

double round2(double x) { return std::round(x * 100.0) / 100.0; }

bool better(const TuneSample& a, const TuneSample& b) {
  if (a.dev_sari != b.dev_sari) return a.dev_sari > b.dev_sari;
  if (a.config.max_iterations != b.config.max_iterations) return a.config.max_iterations < b.config.max_iterations;
  return a.config.min_edit_prob > b.config.min_edit_prob;
}

class Search {
 public:
  Search(std::span<const DevExample> dev, const TaggerBackend& backend, const TagVocabulary& vocab,
         const TuneOptions& options)
      : dev_(dev), backend_(backend), vocab_(vocab), options_(options) {}

  bool exhausted() const { return static_cast<int>(result_.log.size()) >= options_.budget; }

  const TuneSample& evaluate(const InferenceConfig& cfg) {
    TuneSample s{result_.log.size(), cfg, dev_sari(dev_, backend_, vocab_, cfg, options_.parallelism)};
    result_.log.push_back(s);
    if (result_.log.size() == 1 || better(s, best_)) best_ = s;
    return result_.log.back();
  }

  const TuneSample& best() const { return best_; }
  TuneResult& result() { return result_; }

 private:
  std::span<const DevExample> dev_;
  const TaggerBackend& backend_;
  const TagVocabulary& vocab_;
  const TuneOptions& options_;
  TuneResult result_;
  TuneSample best_;
};

}  // namespace

double dev_sari(std::span<const DevExample> dev, const TaggerBackend& backend, const TagVocabulary& vocab,
                const InferenceConfig& cfg, std::size_t parallelism) {
  if (dev.empty()) throw EmptyDevSet("dev set is empty");
  std::vector<TokenSeq> sources;
  sources.reserve(dev.size());
  for (const auto& d : dev) sources.push_back(d.source);
  const auto outcomes = simplify_batch(sources, backend, vocab, cfg, parallelism);
  SariAccumulator acc;
  for (std::size_t i = 0; i < dev.size(); ++i) {
    if (!outcomes[i].ok()) {
      throw ProtocolError("dev sentence " + std::to_string(i + 1) + " failed: " + outcomes[i].error);
    }
    acc.add(EvalRecord{detokenize(dev[i].source), detokenize(outcomes[i].result->output), dev[i].references});
  }
  return acc.report().sari;
}

TuneResult tune(std::span<const DevExample> dev, const TaggerBackend& backend, const TagVocabulary& vocab,
                const TuneOptions& options) {
  if (dev.empty()) throw EmptyDevSet("dev set is empty");
  if (options.budget < 1) throw InvalidConfig("tuning budget must be at least 1");
  if (options.sweeps < 0) throw InvalidConfig("sweeps must be non-negative");
  const TuneSpace& box = options.space;

  Search search(dev, backend, vocab, options);
  const int refine_budget = std::min(options.budget / 2, options.sweeps * 8);
  const int random_budget = options.budget - refine_budget;

  search.result().baseline_sari = search.evaluate(InferenceConfig{}).dev_sari;

  SplitMix64 rng(options.seed);
  for (int i = 1; i < random_budget; ++i) {
    InferenceConfig cfg;
    cfg.keep_bias = round2(rng.uniform(box.bias_min, box.bias_max));
    cfg.delete_bias = round2(rng.uniform(box.bias_min, box.bias_max));
    cfg.min_edit_prob = round2(rng.uniform(box.min_edit_prob_min, box.min_edit_prob_max));
    cfg.max_iterations = 1 + static_cast<int>(rng.below(kMaxIterationsLimit));
    search.evaluate(cfg);
  }

  double bias_step = (box.bias_max - box.bias_min) / 6.0;
  double gate_step = (box.min_edit_prob_max - box.min_edit_prob_min) / 5.0;
  for (int sweep = 0; sweep < options.sweeps && !search.exhausted(); ++sweep) {
    for (int coord = 0; coord < 4 && !search.exhausted(); ++coord) {
      const InferenceConfig centre = search.best().config;
      for (int dir : {-1, 1}) {
        if (search.exhausted()) break;
        InferenceConfig cfg = centre;
        switch (coord) {
          case 0:
            cfg.keep_bias = std::clamp(round2(cfg.keep_bias + dir * bias_step), box.bias_min, box.bias_max);
            break;
          case 1:
            cfg.delete_bias = std::clamp(round2(cfg.delete_bias + dir * bias_step), box.bias_min, box.bias_max);
            break;
          case 2:
            cfg.min_edit_prob =
                std::clamp(round2(cfg.min_edit_prob + dir * gate_step), box.min_edit_prob_min, box.min_edit_prob_max);
            break;
          default:
            cfg.max_iterations = std::clamp(cfg.max_iterations + dir, 1, kMaxIterationsLimit);
            break;
        }
        if (cfg == centre) continue;
        search.evaluate(cfg);
      }
    }
    bias_step /= 2.0;
    gate_step /= 2.0;
  }

  TuneResult& result = search.result();
  result.config = search.best().config;
  result.best_sari = search.best().dev_sari;
  return std::move(result);
}

std::string format_params(const InferenceConfig& cfg) {
  return fmt::format("keep_bias={};delete_bias={};min_edit_prob={};max_iterations={}", cfg.keep_bias,
                     cfg.delete_bias, cfg.min_edit_prob, cfg.max_iterations);
}

void write_tune_log(std::ostream& out, const TuneResult& result) {
  fmt::print(out, "sample_id\tparams\tdev_sari\n");
  for (const auto& s : result.log) fmt::print(out, "{}\t{}\t{:.6f}\n", s.id, format_params(s.config), s.dev_sari);
}

}  // namespace tst
