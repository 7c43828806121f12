#pragma once

#include <memory>
#include <span>
#include <vector>

#include "tst/tagger/backend.hpp"

namespace tst {

/// Elementwise mean of detect values and of every distribution row. Taking
/// the argmax of the result gives the ensemble's tag per token.
/// Throws ShapeMismatch on an empty list or differing shapes.
TagPrediction ensemble_combine(std::span<const TagPrediction> preds);

/// Averages the predictions of several backends over the same vocabulary.
class EnsembleBackend final : public TaggerBackend {
 public:
  explicit EnsembleBackend(std::vector<std::shared_ptr<const TaggerBackend>> members);

  std::vector<TagPrediction> predict_batch(std::span<const TokenSeq> batch) const override;
  std::size_t num_classes() const override { return members_.front()->num_classes(); }

 private:
  std::vector<std::shared_ptr<const TaggerBackend>> members_;
};

}  // namespace tst
