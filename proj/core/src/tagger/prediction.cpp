#include "tst/tagger/prediction.hpp"

#include <cmath>
#include <string>

#include "tst/core/errors.hpp"

namespace tst {

TagPrediction::TagPrediction(std::size_t num_tokens, std::size_t num_classes)
    : detect_(num_tokens, 0.0), num_classes_(num_classes), dist_(num_tokens * num_classes, 0.0) {}

TagId TagPrediction::argmax(std::size_t i) const {
  const auto r = row(i);
  std::size_t best = 0;
  for (std::size_t c = 1; c < r.size(); ++c) {
    if (r[c] > r[best]) best = c;
  }
  return static_cast<TagId>(best);
}

void validate_prediction(const TagPrediction& pred, std::size_t num_tokens, std::size_t num_classes,
                         double tolerance) {
  if (pred.num_tokens() != num_tokens || pred.num_classes() != num_classes) {
    throw ShapeMismatch("prediction is " + std::to_string(pred.num_tokens()) + "x" +
                        std::to_string(pred.num_classes()) + ", expected " + std::to_string(num_tokens) + "x" +
                        std::to_string(num_classes));
  }
  for (std::size_t i = 0; i < num_tokens; ++i) {
    const double d = pred.detect(i);
    if (!(d >= 0.0 && d <= 1.0)) {
      throw InvariantViolation("detect[" + std::to_string(i) + "] = " + std::to_string(d) + " outside [0,1]");
    }
    double sum = 0.0;
    for (double p : pred.row(i)) {
      if (!(p >= 0.0) || !std::isfinite(p)) {
        throw InvariantViolation("row " + std::to_string(i) + " has a negative or non-finite entry");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > tolerance) {
      throw InvariantViolation("row " + std::to_string(i) + " sums to " + std::to_string(sum));
    }
  }
}

}  // namespace tst
