#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "tst/align/corpus.hpp"
#include "tst/core/vocabulary.hpp"
#include "tst/tagger/backend.hpp"

namespace tst {

struct StatTrainOptions {
  int epochs = 5;
  double learning_rate = 0.1;
  std::uint64_t seed = 1;
  /// Weight tables have 2^hash_bits slots per head.
  std::uint32_t hash_bits = 18;
};

/// Mean per-token loss (classification cross-entropy plus detection log
/// loss) over the corpus: entry 0 before training, entry k after epoch k.
struct StatTrainReport {
  std::vector<double> epoch_loss;
};

/// Desk-scale tagger with the two-head shape of the neural model: a shared
/// bank of hashed context features feeds a binary detection head and a
/// multinomial classification head over the tag vocabulary.
///
/// Features per position: bias, token, lowercased token, tokens at -2..+2,
/// prefixes and suffixes of 1..3 code points, and a sentinel flag. Each
/// feature string is hashed with the model seed; the classification head
/// hashes (feature, class) pairs into its own table. Collisions are accepted.
class StatTaggerModel {
 public:
  /// All-zero weights: uniform distributions and detect = 0.5 everywhere.
  StatTaggerModel(std::size_t num_classes, std::uint32_t hash_bits, std::uint64_t seed,
                  std::string vocab_sha256 = {});

  TagPrediction predict(const TokenSeq& seq) const;

  /// Loss of one sentence against gold tag ids (one per token).
  double loss(const TokenSeq& seq, const std::vector<TagId>& gold) const;

  /// One SGD step per token of the sentence; returns the pre-update loss.
  double sgd_step(const TokenSeq& seq, const std::vector<TagId>& gold, double learning_rate);

  std::size_t num_classes() const noexcept { return num_classes_; }
  std::uint32_t hash_bits() const noexcept { return hash_bits_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::string& vocab_sha256() const noexcept { return vocab_sha256_; }

  /// Binary, little-endian:
  ///   "TSTSTAT1"  magic (8 bytes)
  ///   u32 version (=1), u32 hash_bits, u64 seed, u64 num_classes
  ///   u32 n + n bytes of vocabulary SHA-256 hex
  ///   f32 detect bias, f32[2^hash_bits] detect weights
  ///   f32[num_classes] class biases, f32[2^hash_bits] class weights
  void write(std::ostream& out) const;
  static StatTaggerModel read(std::istream& in);
  void save(const std::filesystem::path& path) const;
  static StatTaggerModel load(const std::filesystem::path& path);

  friend bool operator==(const StatTaggerModel&, const StatTaggerModel&) = default;

 private:
  std::vector<std::uint64_t> features(const TokenSeq& seq, std::size_t i) const;
  void forward(const std::vector<std::uint64_t>& feats, double& detect, std::vector<double>& probs) const;
  std::size_t detect_slot(std::uint64_t f) const noexcept;
  std::size_t class_slot(std::uint64_t f, std::size_t c) const noexcept;

  std::size_t num_classes_;
  std::uint32_t hash_bits_;
  std::uint64_t seed_;
  std::string vocab_sha256_;
  float detect_bias_ = 0.0f;
  std::vector<float> detect_weights_;
  std::vector<float> class_bias_;
  std::vector<float> class_weights_;
};

/// Trains by stochastic gradient descent over the corpus tokens, shuffling
/// sentence order each epoch with a seed-derived stream. Deterministic given
/// the options. Throws EmptyCorpus.
StatTaggerModel stat_train(const std::vector<SentencePair>& corpus, const TagVocabulary& vocab,
                           const StatTrainOptions& options, StatTrainReport* report = nullptr);

class StatBackend final : public TaggerBackend {
 public:
  explicit StatBackend(std::shared_ptr<const StatTaggerModel> model) : model_(std::move(model)) {}

  std::vector<TagPrediction> predict_batch(std::span<const TokenSeq> batch) const override;
  std::size_t num_classes() const override { return model_->num_classes(); }

 private:
  std::shared_ptr<const StatTaggerModel> model_;
};

}  // namespace tst
