#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tst/core/vocabulary.hpp"

namespace tst {

/// Output of the two tagging heads for one sentence: per-token probability
/// that an edit exists, and per-token distribution over vocabulary ids.
class TagPrediction {
 public:
  TagPrediction() = default;
  /// Zero-filled prediction for `num_tokens` positions.
  TagPrediction(std::size_t num_tokens, std::size_t num_classes);

  std::size_t num_tokens() const noexcept { return detect_.size(); }
  std::size_t num_classes() const noexcept { return num_classes_; }

  double detect(std::size_t i) const { return detect_[i]; }
  double& detect(std::size_t i) { return detect_[i]; }
  std::span<const double> detect_all() const noexcept { return detect_; }

  std::span<const double> row(std::size_t i) const {
    return {dist_.data() + i * num_classes_, num_classes_};
  }
  std::span<double> row(std::size_t i) { return {dist_.data() + i * num_classes_, num_classes_}; }

  /// Argmax over a row; ties go to the lower id.
  TagId argmax(std::size_t i) const;

  friend bool operator==(const TagPrediction&, const TagPrediction&) = default;

 private:
  std::vector<double> detect_;
  std::size_t num_classes_ = 0;
  std::vector<double> dist_;
};

inline constexpr double kRowSumTolerance = 1e-6;

/// Throws ShapeMismatch when the prediction does not cover `num_tokens`
/// positions over `num_classes` ids, and InvariantViolation when a detect
/// value leaves [0,1] or a row is not a distribution within `tolerance`.
void validate_prediction(const TagPrediction& pred, std::size_t num_tokens, std::size_t num_classes,
                         double tolerance = kRowSumTolerance);

}  // namespace tst
