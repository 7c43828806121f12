#include "tst/tagger/noisy.hpp"

#include <cmath>
#include <stdexcept>

#include "tst/core/hash.hpp"

namespace tst {

NoisyBackend::NoisyBackend(std::shared_ptr<const TaggerBackend> inner, double rate, std::uint64_t seed)
    : inner_(std::move(inner)), rate_(rate), seed_(seed) {
  if (!inner_) throw std::invalid_argument("NoisyBackend needs an inner backend");
  if (!(rate >= 0.0 && rate <= 1.0)) throw std::invalid_argument("noise rate must lie in [0,1]");
}

std::vector<TagPrediction> NoisyBackend::predict_batch(std::span<const TokenSeq> batch) const {
  auto preds = inner_->predict_batch(batch);
  for (std::size_t s = 0; s < batch.size() && s < preds.size(); ++s) {
    const std::uint64_t sentence_hash = fnv1a64(detokenize(batch[s]), seed_);
    TagPrediction& pred = preds[s];
    for (std::size_t i = 0; i < pred.num_tokens(); ++i) {
      SplitMix64 rng(hash_combine(sentence_hash, i));
      if (rng.unit() >= rate_) continue;
      pred.detect(i) = rng.unit();
      auto row = pred.row(i);
      double sum = 0.0;
      for (double& p : row) {
        // Normalized exponentials are a flat Dirichlet draw.
        p = -std::log1p(-rng.unit());
        sum += p;
      }
      if (sum <= 0.0) {
        for (double& p : row) p = 1.0 / static_cast<double>(row.size());
      } else {
        for (double& p : row) p /= sum;
      }
    }
  }
  return preds;
}

}  // namespace tst
