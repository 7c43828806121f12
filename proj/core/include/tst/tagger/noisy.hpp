#pragma once

#include <cstdint>
#include <memory>

#include "tst/tagger/backend.hpp"

namespace tst {

/// Wraps a backend and, at a fraction `rate` of positions, replaces its output
/// with uniform noise: a distribution drawn uniformly from the simplex and a
/// uniform detect value. Which positions are hit and what they get depends
/// only on (seed, sentence, position), so the wrapper stays deterministic and
/// batch-independent.
class NoisyBackend final : public TaggerBackend {
 public:
  NoisyBackend(std::shared_ptr<const TaggerBackend> inner, double rate, std::uint64_t seed);

  std::vector<TagPrediction> predict_batch(std::span<const TokenSeq> batch) const override;
  std::size_t num_classes() const override { return inner_->num_classes(); }

 private:
  std::shared_ptr<const TaggerBackend> inner_;
  double rate_;
  std::uint64_t seed_;
};

}  // namespace tst
