#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tst/core/token.hpp"
#include "tst/core/vocabulary.hpp"
#include "tst/engine/config.hpp"
#include "tst/tagger/backend.hpp"

namespace tst {

enum class BenchEvent { kWarmupBegin, kWarmupEnd, kBatchBegin, kBatchEnd };

/// Called just outside the timed region: kBatchBegin right before the clock
/// starts, kBatchEnd right after it stops.
using BenchHook = std::function<void(BenchEvent event, int iterations, int run, std::size_t batch)>;

struct BenchOptions {
  std::size_t batch_size = 128;
  int runs = 1;
  /// One report row per entry, in this order.
  std::vector<int> iterations{5, 4, 3, 2, 1};
  std::size_t parallelism = 1;
  /// Off by default so every sentence pays for the full iteration count.
  bool early_stop = false;
  BenchHook hook;
};

struct BenchRow {
  int iterations = 0;
  /// Mean over runs of the per-run mean batch time, in seconds.
  double mean_seconds = 0.0;
  /// Median over every timed batch of every run.
  double median_seconds = 0.0;
  std::vector<double> run_means;
  std::size_t batches_per_run = 0;
  /// SHA-256 over the newline-joined outputs of the last run.
  std::string output_sha256;
};

struct BenchReport {
  std::size_t sentences = 0;
  std::size_t batch_size = 0;
  std::size_t parallelism = 1;
  int runs = 0;
  std::vector<BenchRow> rows;
};

/// Times simplify_batch per batch of the in-memory corpus. A single warm-up
/// batch runs first and is not timed. Only tagging, decoding and applying are
/// inside the clock. `base` supplies biases and gate; max_iterations is
/// overridden per row. Throws InvalidConfig for runs < 1, batch_size < 1 or an
/// iteration count outside 1..5, EmptyCorpus for an empty corpus, and
/// ProtocolError if any sentence fails.
BenchReport run_bench(std::span<const TokenSeq> corpus, const TaggerBackend& backend, const TagVocabulary& vocab,
                      const InferenceConfig& base, const BenchOptions& options = {});

/// Rows like "TST, 5 iterations<TAB>0.0123" under a "System / Inference time"
/// header, followed by the median and per-run means.
void write_bench_table(std::ostream& out, const BenchReport& report);

/// Header `iterations mean_s median_s run_means batches output_sha256`.
void write_bench_tsv(std::ostream& out, const BenchReport& report);

}  // namespace tst
