#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "support/sari_oracle.hpp"
#include "support/synthetic.hpp"
#include "tst/core/errors.hpp"
#include "tst/core/hash.hpp"
#include "tst/metrics/evaluate.hpp"
#include "tst/metrics/fkgl.hpp"
#include "tst/metrics/sari.hpp"

namespace tst {
namespace {

testing::OracleRecord to_oracle(const EvalRecord& r) {
  testing::OracleRecord o{split_words(r.source), split_words(r.system), {}};
  for (const auto& ref : r.references) o.references.push_back(split_words(ref));
  return o;
}

testing::OracleSari oracle_of(const std::vector<EvalRecord>& records) {
  std::vector<testing::OracleRecord> o;
  for (const auto& r : records) o.push_back(to_oracle(r));
  return testing::brute_force_sari(o);
}

void expect_matches_oracle(const std::vector<EvalRecord>& records) {
  const auto got = sari(records);
  const auto want = oracle_of(records);
  EXPECT_NEAR(got.sari, want.sari, 1e-9);
  EXPECT_NEAR(got.add_f1, want.add, 1e-9);
  EXPECT_NEAR(got.keep_f1, want.keep, 1e-9);
  EXPECT_NEAR(got.del_f1, want.del, 1e-9);
}

TEST(Sari, PerfectSystem) {
  const std::vector<EvalRecord> r = {{"a b c", "a c d", {"a c d"}}};
  const auto rep = sari(r);
  EXPECT_EQ(rep.sari, 100.0);
  EXPECT_EQ(rep.add_f1, 100.0);
  EXPECT_EQ(rep.keep_f1, 100.0);
  EXPECT_EQ(rep.del_f1, 100.0);
}

TEST(Sari, IdentityEverywhere) {
  const std::vector<EvalRecord> r = {{"a b c", "a b c", {"a b c"}}};
  EXPECT_EQ(sari(r).sari, 100.0);
}

TEST(Sari, ToyRecordMatchesOracle) {
  const std::vector<EvalRecord> r = {{"a b c d", "a b d", {"a b d", "a d"}}};
  expect_matches_oracle(r);
  const auto rep = sari(r);
  EXPECT_GT(rep.sari, 0.0);
  EXPECT_LT(rep.sari, 100.0);
}

TEST(Sari, RandomCorporaMatchOracle) {
  SplitMix64 rng(3);
  const std::vector<std::string> alphabet = {"a", "b", "c", "d"};
  auto sentence = [&] {
    std::string s;
    const auto len = rng.below(7);
    for (std::uint64_t i = 0; i < len; ++i) s += (i ? " " : "") + alphabet[rng.below(4)];
    return s;
  };
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<EvalRecord> corpus(1 + rng.below(4));
    for (auto& r : corpus) {
      r.source = sentence();
      r.system = sentence();
      r.references.resize(1 + rng.below(3));
      for (auto& ref : r.references) ref = sentence();
    }
    expect_matches_oracle(corpus);
  }
}

TEST(Sari, CorpusOrderDoesNotMatter) {
  std::vector<EvalRecord> corpus = {{"a b c", "a c", {"a c", "b c"}},
                                    {"x y", "x y z", {"x z"}},
                                    {"p q r s", "p s", {"p r s"}}};
  const auto base = sari(corpus).sari;
  std::sort(corpus.begin(), corpus.end(), [](const auto& a, const auto& b) { return a.source < b.source; });
  do {
    EXPECT_EQ(sari(corpus).sari, base);
  } while (std::next_permutation(corpus.begin(), corpus.end(),
                                 [](const auto& a, const auto& b) { return a.source < b.source; }));
}

TEST(Sari, Errors) {
  EXPECT_THROW(sari({}), EmptyCorpus);
  SariAccumulator acc;
  EXPECT_THROW(acc.add({"a", "a", {}}), std::invalid_argument);
}

TEST(Syllables, Examples) {
  EXPECT_EQ(syllables("cat"), 1);
  EXPECT_EQ(syllables("simple"), 2);
  EXPECT_EQ(syllables(","), 1);
  EXPECT_EQ(syllables("make"), 1);
  EXPECT_EQ(syllables("the"), 1);
  EXPECT_EQ(syllables("beautiful"), 3);
  EXPECT_EQ(syllables("Table"), 2);
}

TEST(Fkgl, FourMonosyllables) {
  const std::vector<std::string> one = {"a a a a"};
  EXPECT_NEAR(fkgl(one), 0.39 * 4 + 11.8 * 1 - 15.59, 1e-9);
  EXPECT_NEAR(fkgl(one), -2.23, 1e-9);
}

TEST(Fkgl, DuplicationInvariance) {
  std::vector<std::string> corpus = {"the cat sat on the mat .", "a remarkably complicated sentence follows here ."};
  const double base = fkgl(corpus);
  auto twice = corpus;
  twice.insert(twice.end(), corpus.begin(), corpus.end());
  EXPECT_EQ(fkgl(twice), base);
}

TEST(Fkgl, SimplerOutputsScoreLower) {
  std::vector<std::string> sources, targets;
  for (const auto& [s, t] : testing::example_pairs()) {
    sources.push_back(detokenize(s));
    targets.push_back(detokenize(t));
  }
  EXPECT_LT(fkgl(targets), fkgl(sources));
}

TEST(Fkgl, Errors) {
  EXPECT_THROW(fkgl({}), EmptyCorpus);
  const std::vector<std::string> blank = {""};
  EXPECT_THROW(fkgl(blank), NoWords);
}

TEST(Evaluate, MeanLengthAndIdentity) {
  const std::vector<EvalRecord> recs = {{"a b c", "a b", {"a c"}}, {"w x y z", "a b c d", {"w y"}}};
  EXPECT_DOUBLE_EQ(evaluate(recs).mean_output_length, 3.0);

  std::vector<EvalRecord> identity;
  for (const auto& [s, t] : testing::example_pairs()) identity.push_back({detokenize(s), detokenize(s), {detokenize(t)}});
  const auto rep = evaluate(identity).sari;
  EXPECT_GE(rep.keep_f1, rep.add_f1);
  EXPECT_GE(rep.keep_f1, rep.del_f1);
}

TEST(Evaluate, NoFkglWhenDisabled) {
  const std::vector<EvalRecord> recs = {{"a b", "a", {"a"}}};
  EXPECT_FALSE(evaluate(recs, false).fkgl.has_value());
  EXPECT_TRUE(evaluate(recs, true).fkgl.has_value());
}

TEST(Evaluate, ReaderAndTsvReport) {
  std::istringstream in("a b\ta\ta\n\nc d\tc d\tc d\tc\n");
  EvalRecordReader reader(in);
  std::vector<EvalRecord> recs;
  EvalRecord r;
  while (reader.next(r)) recs.push_back(r);
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[1].references.size(), 2u);

  std::istringstream bad("only\ttwo\n");
  EvalRecordReader bad_reader(bad);
  EXPECT_THROW(bad_reader.next(r), MalformedFile);

  std::ostringstream out;
  write_report_tsv(out, evaluate(recs, false));
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "sari\tadd\tdelete\tkeep\tfkgl\tmean_len");
  EXPECT_NE(text.find("\t-\t"), std::string::npos);
}

}  // namespace
}  // namespace tst
