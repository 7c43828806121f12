#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tst/core/token.hpp"
#include "tst/core/vocabulary.hpp"
#include "tst/engine/config.hpp"
#include "tst/tagger/backend.hpp"

namespace tst {

struct DevExample {
  TokenSeq source;
  std::vector<std::string> references;
};

/// Search box. The defaults cover every published tuned value.
struct TuneSpace {
  double bias_min = -1.0;
  double bias_max = 0.5;
  double min_edit_prob_min = 0.0;
  double min_edit_prob_max = 0.5;
};

struct TuneOptions {
  /// Total number of config evaluations, zero-tweak baseline included.
  int budget = 50;
  std::uint64_t seed = 1;
  std::size_t parallelism = 1;
  int sweeps = 2;
  TuneSpace space{};
};

struct TuneSample {
  std::size_t id = 0;
  InferenceConfig config;
  double dev_sari = 0.0;
};

struct TuneResult {
  InferenceConfig config;
  double best_sari = 0.0;
  /// Dev SARI of the zero-tweak config (sample 0).
  double baseline_sari = 0.0;
  std::vector<TuneSample> log;
};

/// Corpus SARI of simplify_batch outputs against the references. Throws
/// EmptyDevSet, or ProtocolError if any sentence fails.
double dev_sari(std::span<const DevExample> dev, const TaggerBackend& backend, const TagVocabulary& vocab,
                const InferenceConfig& cfg, std::size_t parallelism = 1);

/// Random search then coordinate descent. Sample 0 is the zero-tweak config.
/// Up to half the budget (at most 8 evaluations per sweep) goes to
/// refinement around the incumbent, halving steps after each sweep. The
/// winner maximizes dev SARI; ties go to fewer iterations, then larger
/// min_edit_prob, then the earlier sample. Deterministic given the seed.
/// Throws EmptyDevSet, InvalidConfig for budget < 1.
TuneResult tune(std::span<const DevExample> dev, const TaggerBackend& backend, const TagVocabulary& vocab,
                const TuneOptions& options = {});

/// "keep_bias=..;delete_bias=..;min_edit_prob=..;max_iterations=.."
std::string format_params(const InferenceConfig& cfg);

/// Header `sample_id params dev_sari`, then one row per evaluated config.
void write_tune_log(std::ostream& out, const TuneResult& result);

}  // namespace tst
