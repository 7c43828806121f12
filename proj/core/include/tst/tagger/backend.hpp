#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tst/core/token.hpp"
#include "tst/tagger/prediction.hpp"

namespace tst {

/// Anything that tags a batch of sentences with detection and classification
/// outputs. Implementations must be deterministic for a fixed model and must
/// tolerate concurrent predict_batch calls.
class TaggerBackend {
 public:
  virtual ~TaggerBackend() = default;

  /// One prediction per input sentence, in input order. A sentence's
  /// prediction must not depend on the rest of the batch.
  virtual std::vector<TagPrediction> predict_batch(std::span<const TokenSeq> batch) const = 0;

  /// Size of the vocabulary the distributions range over.
  virtual std::size_t num_classes() const = 0;
};

}  // namespace tst
