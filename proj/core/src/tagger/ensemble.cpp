#include "tst/tagger/ensemble.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tst/core/errors.hpp"

namespace tst {

TagPrediction ensemble_combine(std::span<const TagPrediction> preds) {
  if (preds.empty()) throw ShapeMismatch("ensemble of zero predictions");
  const std::size_t tokens = preds.front().num_tokens();
  const std::size_t classes = preds.front().num_classes();
  for (const auto& p : preds) {
    if (p.num_tokens() != tokens || p.num_classes() != classes) {
      throw ShapeMismatch("ensemble members disagree on shape (" + std::to_string(p.num_tokens()) + "x" +
                          std::to_string(p.num_classes()) + " vs " + std::to_string(tokens) + "x" +
                          std::to_string(classes) + ")");
    }
  }

  // Each entry is averaged over its values in sorted order, so the result is
  // bit-identical under any permutation of the members; identical members
  // return their common value exactly.
  std::vector<double> vals(preds.size());
  auto average = [&vals]() {
    std::sort(vals.begin(), vals.end());
    if (vals.front() == vals.back()) return vals.front();
    double sum = 0.0;
    for (double v : vals) sum += v;
    return sum / static_cast<double>(vals.size());
  };

  TagPrediction mean(tokens, classes);
  for (std::size_t i = 0; i < tokens; ++i) {
    for (std::size_t k = 0; k < preds.size(); ++k) vals[k] = preds[k].detect(i);
    mean.detect(i) = average();
    auto out = mean.row(i);
    for (std::size_t c = 0; c < classes; ++c) {
      for (std::size_t k = 0; k < preds.size(); ++k) vals[k] = preds[k].row(i)[c];
      out[c] = average();
    }
  }
  return mean;
}

EnsembleBackend::EnsembleBackend(std::vector<std::shared_ptr<const TaggerBackend>> members)
    : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("ensemble needs at least one member");
  for (const auto& m : members_) {
    if (!m) throw std::invalid_argument("null ensemble member");
    if (m->num_classes() != members_.front()->num_classes()) {
      throw ShapeMismatch("ensemble members use different vocabularies");
    }
  }
}

std::vector<TagPrediction> EnsembleBackend::predict_batch(std::span<const TokenSeq> batch) const {
  std::vector<std::vector<TagPrediction>> per_member;
  per_member.reserve(members_.size());
  for (const auto& m : members_) per_member.push_back(m->predict_batch(batch));

  std::vector<TagPrediction> out;
  out.reserve(batch.size());
  std::vector<TagPrediction> column(members_.size());
  for (std::size_t s = 0; s < batch.size(); ++s) {
    for (std::size_t k = 0; k < members_.size(); ++k) column[k] = per_member[k].at(s);
    out.push_back(ensemble_combine(column));
  }
  return out;
}

}  // namespace tst
