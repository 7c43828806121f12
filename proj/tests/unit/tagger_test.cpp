#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <sstream>

#include "support/synthetic.hpp"
#include "tst/align/extract.hpp"
#include "tst/core/errors.hpp"
#include "tst/tagger/ensemble.hpp"
#include "tst/tagger/noisy.hpp"
#include "tst/tagger/oracle.hpp"
#include "tst/tagger/stat_tagger.hpp"

namespace tst {
namespace {

TagVocabulary vocab_for(const std::vector<SentencePair>& pairs) {
  TagCounts counts;
  for (const auto& [s, t] : pairs) count_tags(s, t, counts, VerbLexicon::builtin(), TagCoverage::kFullChain);
  return TagVocabulary::from_counts(counts, 5000);
}

std::vector<TagId> argmaxes(const TagPrediction& p) {
  std::vector<TagId> out;
  for (std::size_t i = 0; i < p.num_tokens(); ++i) out.push_back(p.argmax(i));
  return out;
}

TagPrediction one_hot(const std::vector<TagId>& ids, std::size_t classes) {
  TagPrediction p(ids.size(), classes);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    p.row(i)[ids[i]] = 1.0;
    p.detect(i) = ids[i] == kKeepId ? 0.0 : 1.0;
  }
  return p;
}

TEST(Prediction, ValidationCatchesBadRows) {
  TagPrediction p = one_hot({0, 1}, 3);
  EXPECT_NO_THROW(validate_prediction(p, 2, 3));
  EXPECT_THROW(validate_prediction(p, 3, 3), ShapeMismatch);
  EXPECT_THROW(validate_prediction(p, 2, 4), ShapeMismatch);
  p.row(0)[0] = 0.5;
  EXPECT_THROW(validate_prediction(p, 2, 3), InvariantViolation);
  p.row(0)[0] = 1.0;
  p.detect(1) = 1.5;
  EXPECT_THROW(validate_prediction(p, 2, 3), InvariantViolation);
}

TEST(Prediction, ArgmaxTiesGoToLowerId) {
  TagPrediction p(1, 3);
  p.row(0)[1] = 0.5;
  p.row(0)[2] = 0.5;
  EXPECT_EQ(p.argmax(0), 1u);
}

TEST(Oracle, IdenticalPairIsAllKeep) {
  const TokenSeq s = tokenize("a b c");
  const auto vocab = TagVocabulary::from_counts({}, 10);
  const auto p = oracle_predict(s, s, vocab);
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(p.detect(i), 0.0);
    EXPECT_EQ(p.row(i)[kKeepId], 1.0);
  }
}

TEST(Oracle, DeletionPair) {
  const auto vocab = TagVocabulary::from_counts({}, 10);
  const auto p = oracle_predict(tokenize("a b"), tokenize("a"), vocab);
  EXPECT_EQ((std::vector<double>(p.detect_all().begin(), p.detect_all().end())), (std::vector<double>{0, 0, 1}));
  EXPECT_EQ(argmaxes(p), (std::vector<TagId>{kKeepId, kKeepId, kDeleteId}));
}

TEST(Oracle, ExampleReplacement) {
  const auto pairs = testing::example_pairs();
  const auto vocab = vocab_for(pairs);
  const auto p = oracle_predict(pairs[0].first, pairs[0].second, vocab);
  // Token 3 is "completed" (sentinel, he, also, completed).
  EXPECT_EQ(pairs[0].first[3].text, "completed");
  EXPECT_EQ(vocab.tag(p.argmax(3)), EditTag::replace("wrote"));
  EXPECT_EQ(p.row(3)[p.argmax(3)], 1.0);
}

TEST(Oracle, BackendFollowsIntermediateStates) {
  const std::vector<SentencePair> pairs = {{tokenize("a"), tokenize("x y a")}};
  const OracleBackend backend(pairs, vocab_for(pairs));
  ASSERT_NE(backend.target_for(tokenize("x a")), nullptr);
  EXPECT_EQ(*backend.target_for(tokenize("x a")), tokenize("x y a"));
  // Unknown sentences are left alone.
  const std::vector<TokenSeq> batch = {tokenize("never seen")};
  EXPECT_EQ(argmaxes(backend.predict_batch(batch)[0]), (std::vector<TagId>{0, 0, 0}));
}

TEST(Noisy, DeterministicAndValid) {
  const auto pairs = testing::synthetic_pairs(50, 2);
  auto oracle = std::make_shared<OracleBackend>(pairs, vocab_for(pairs));
  const NoisyBackend a(oracle, 0.2, 9), b(oracle, 0.2, 9), c(oracle, 0.2, 10);
  std::vector<TokenSeq> batch;
  for (const auto& [s, t] : pairs) batch.push_back(s);
  const auto pa = a.predict_batch(batch);
  EXPECT_EQ(pa, b.predict_batch(batch));
  EXPECT_NE(pa, c.predict_batch(batch));
  for (std::size_t i = 0; i < batch.size(); ++i) validate_prediction(pa[i], batch[i].size(), oracle->num_classes());

  const NoisyBackend silent(oracle, 0.0, 9);
  EXPECT_EQ(silent.predict_batch(batch), oracle->predict_batch(batch));
}

TEST(Ensemble, Examples) {
  const TagPrediction single = one_hot({0, 1, 0}, 2);
  EXPECT_EQ(ensemble_combine(std::vector<TagPrediction>{single}), single);

  const std::vector<TagPrediction> two = {one_hot({0}, 2), one_hot({1}, 2)};
  const auto mean = ensemble_combine(two);
  EXPECT_DOUBLE_EQ(mean.row(0)[0], 0.5);
  EXPECT_DOUBLE_EQ(mean.row(0)[1], 0.5);

  EXPECT_THROW(ensemble_combine(std::vector<TagPrediction>{}), ShapeMismatch);
  EXPECT_THROW(ensemble_combine(std::vector<TagPrediction>{one_hot({0}, 2), one_hot({0, 0}, 2)}), ShapeMismatch);
}

TEST(Ensemble, MajorityOfThreeOneHots) {
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<TagPrediction> votes;
    int ones = 0;
    for (int k = 0; k < 3; ++k) {
      const TagId id = (mask >> k) & 1;
      ones += static_cast<int>(id);
      votes.push_back(one_hot({id}, 2));
    }
    EXPECT_EQ(ensemble_combine(votes).argmax(0), ones >= 2 ? 1u : 0u) << mask;
  }
}

TEST(Ensemble, PermutationInvariantAndIdempotent) {
  std::vector<TagPrediction> preds;
  for (std::uint64_t seed = 0; seed < 4; ++seed) preds.push_back(testing::random_prediction(6, 5, seed));
  const auto base = ensemble_combine(preds);
  std::sort(preds.begin(), preds.end(), [](const TagPrediction& a, const TagPrediction& b) {
    return a.row(0)[0] < b.row(0)[0];
  });
  do {
    EXPECT_EQ(ensemble_combine(preds), base);
  } while (std::next_permutation(preds.begin(), preds.end(), [](const TagPrediction& a, const TagPrediction& b) {
    return a.row(0)[0] < b.row(0)[0];
  }));
  const std::vector<TagPrediction> same(3, preds[0]);
  EXPECT_EQ(ensemble_combine(same), preds[0]);
}

TEST(StatTagger, MemorizesSinglePattern) {
  const std::vector<SentencePair> corpus(200, SentencePair{tokenize("a b"), tokenize("a")});
  const auto vocab = vocab_for(corpus);
  StatTrainReport report;
  const auto model = stat_train(corpus, vocab, {}, &report);
  EXPECT_EQ(argmaxes(model.predict(tokenize("a b"))), (std::vector<TagId>{kKeepId, kKeepId, kDeleteId}));
  ASSERT_EQ(report.epoch_loss.size(), 6u);
  for (std::size_t e = 1; e < report.epoch_loss.size(); ++e) EXPECT_LE(report.epoch_loss[e], report.epoch_loss[e - 1]);
}

TEST(StatTagger, ZeroEpochsIsUniform) {
  const auto pairs = testing::synthetic_pairs(20, 1);
  const auto vocab = vocab_for(pairs);
  StatTrainOptions opts;
  opts.epochs = 0;
  const auto model = stat_train(pairs, vocab, opts);
  const auto p = model.predict(pairs[0].first);
  const double uniform = 1.0 / static_cast<double>(vocab.size());
  for (std::size_t i = 0; i < p.num_tokens(); ++i) {
    for (double v : p.row(i)) EXPECT_NEAR(v, uniform, 1e-6);
  }
}

TEST(StatTagger, SameSeedSameBytes) {
  const auto pairs = testing::synthetic_pairs(60, 4);
  const auto vocab = vocab_for(pairs);
  StatTrainOptions opts;
  opts.epochs = 2;
  opts.hash_bits = 12;
  std::ostringstream a, b;
  stat_train(pairs, vocab, opts).write(a);
  stat_train(pairs, vocab, opts).write(b);
  EXPECT_EQ(a.str(), b.str());

  std::istringstream in(a.str());
  const auto back = StatTaggerModel::read(in);
  EXPECT_EQ(back.vocab_sha256(), vocab.sha256_hex());
  EXPECT_EQ(back.predict(pairs[1].first), stat_train(pairs, vocab, opts).predict(pairs[1].first));
}

TEST(StatTagger, PredictionsAreValid) {
  const auto pairs = testing::synthetic_pairs(40, 8);
  const auto vocab = vocab_for(pairs);
  const auto model = stat_train(pairs, vocab, {});
  for (const auto& [s, t] : pairs) validate_prediction(model.predict(s), s.size(), vocab.size());
  EXPECT_THROW(stat_train({}, vocab, {}), EmptyCorpus);
}

TEST(StatTagger, RejectsCorruptFile) {
  std::istringstream in("not a model");
  EXPECT_THROW(StatTaggerModel::read(in), MalformedFile);
}

}  // namespace
}  // namespace tst
