#include "tst/bench/bench.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <ostream>

#include "tst/core/errors.hpp"
#include "tst/engine/engine.hpp"

namespace tst {

namespace {

void notify(const BenchOptions& o, BenchEvent e, int iterations, int run, std::size_t batch) {
  if (o.hook) o.hook(e, iterations, run, batch);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

BenchReport run_bench(std::span<const TokenSeq> corpus, const TaggerBackend& backend, const TagVocabulary& vocab,
                      const InferenceConfig& base, const BenchOptions& options) {
  if (options.runs < 1) throw InvalidConfig("runs must be at least 1");
  if (options.batch_size < 1) throw InvalidConfig("batch size must be at least 1");
  if (options.parallelism < 1) throw InvalidConfig("parallelism must be at least 1");
  if (corpus.empty()) throw EmptyCorpus("nothing to benchmark");
  for (int it : options.iterations) {
    if (it < 1 || it > kMaxIterationsLimit) throw InvalidConfig("iteration count " + std::to_string(it) + " out of range");
  }

  SimplifyOptions simplify_opts;
  simplify_opts.early_stop = options.early_stop;

  std::vector<std::span<const TokenSeq>> batches;
  for (std::size_t b = 0; b < corpus.size(); b += options.batch_size) {
    batches.push_back(corpus.subspan(b, std::min(options.batch_size, corpus.size() - b)));
  }

  auto check = [](const std::vector<BatchOutcome>& outcomes) {
    for (const auto& o : outcomes) {
      if (!o.ok()) throw ProtocolError("benchmark sentence failed: " + o.error);
    }
  };

  BenchReport report;
  report.sentences = corpus.size();
  report.batch_size = options.batch_size;
  report.parallelism = options.parallelism;
  report.runs = options.runs;

  if (!options.iterations.empty()) {
    InferenceConfig warm = base;
    warm.max_iterations = options.iterations.front();
    notify(options, BenchEvent::kWarmupBegin, warm.max_iterations, 0, 0);
    check(simplify_batch(batches.front(), backend, vocab, warm, options.parallelism, simplify_opts));
    notify(options, BenchEvent::kWarmupEnd, warm.max_iterations, 0, 0);
  }

  for (int iterations : options.iterations) {
    InferenceConfig cfg = base;
    cfg.max_iterations = iterations;
    BenchRow row;
    row.iterations = iterations;
    row.batches_per_run = batches.size();
    std::vector<double> all;
    std::string joined;
    for (int run = 0; run < options.runs; ++run) {
      std::vector<double> times;
      const bool last = run + 1 == options.runs;
      for (std::size_t b = 0; b < batches.size(); ++b) {
        notify(options, BenchEvent::kBatchBegin, iterations, run, b);
        const auto start = std::chrono::steady_clock::now();
        auto outcomes = simplify_batch(batches[b], backend, vocab, cfg, options.parallelism, simplify_opts);
        const auto stop = std::chrono::steady_clock::now();
        notify(options, BenchEvent::kBatchEnd, iterations, run, b);
        check(outcomes);
        times.push_back(std::chrono::duration<double>(stop - start).count());
        if (last) {
          for (const auto& o : outcomes) {
            joined += detokenize(o.result->output);
            joined += '\n';
          }
        }
      }
      row.run_means.push_back(std::accumulate(times.begin(), times.end(), 0.0) / static_cast<double>(times.size()));
      all.insert(all.end(), times.begin(), times.end());
    }
    row.mean_seconds =
        std::accumulate(row.run_means.begin(), row.run_means.end(), 0.0) / static_cast<double>(row.run_means.size());
    row.median_seconds = median(std::move(all));
    row.output_sha256 = sha256_hex(joined);
    report.rows.push_back(std::move(row));
  }
  return report;
}

void write_bench_table(std::ostream& out, const BenchReport& report) {
  fmt::print(out, "{} sentences, batch size {}, {} run(s), parallelism {}\n\n", report.sentences, report.batch_size,
             report.runs, report.parallelism);
  fmt::print(out, "{:<22}{:>24}{:>14}\n", "System", "Inference time (sec)", "median");
  for (const auto& r : report.rows) {
    const std::string name = fmt::format("TST, {} iteration{}", r.iterations, r.iterations == 1 ? "" : "s");
    fmt::print(out, "{:<22}{:>24.6f}{:>14.6f}\n", name, r.mean_seconds, r.median_seconds);
  }
  if (report.runs > 1) {
    fmt::print(out, "\nper-run means\n");
    for (const auto& r : report.rows) fmt::print(out, "  {} it: {:.6f}\n", r.iterations, fmt::join(r.run_means, " "));
  }
}

void write_bench_tsv(std::ostream& out, const BenchReport& report) {
  fmt::print(out, "iterations\tmean_s\tmedian_s\trun_means\tbatches\toutput_sha256\n");
  for (const auto& r : report.rows) {
    fmt::print(out, "{}\t{:.9f}\t{:.9f}\t{:.9f}\t{}\t{}\n", r.iterations, r.mean_seconds, r.median_seconds,
               fmt::join(r.run_means, ","), r.batches_per_run, r.output_sha256);
  }
}

}  // namespace tst
