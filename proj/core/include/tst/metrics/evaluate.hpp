#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "tst/metrics/fkgl.hpp"
#include "tst/metrics/sari.hpp"

namespace tst {

struct EvalReport {
  SariReport sari;
  std::optional<double> fkgl;
  /// Mean number of words per system output.
  double mean_output_length = 0.0;
  std::size_t records = 0;
};

/// Streaming evaluation: SARI over all records, FKGL over system outputs.
class Evaluator {
 public:
  explicit Evaluator(bool with_fkgl = true) : with_fkgl_(with_fkgl) {}
  void add(const EvalRecord& record);
  /// Throws EmptyCorpus with no records; NoWords if FKGL is on and every
  /// output is empty.
  EvalReport report() const;

 private:
  bool with_fkgl_;
  SariAccumulator sari_;
  FkglAccumulator fkgl_;
  std::size_t output_words_ = 0;
};

EvalReport evaluate(std::span<const EvalRecord> records, bool with_fkgl = true);

/// Reads one record per line: source<TAB>system<TAB>ref1<TAB>ref2...
/// Throws MalformedFile (with the line number) on lines with fewer than three
/// fields. Blank lines are skipped.
class EvalRecordReader {
 public:
  explicit EvalRecordReader(std::istream& in) : in_(in) {}
  bool next(EvalRecord& record);
  std::size_t line_number() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

/// Two lines: a header `sari add delete keep fkgl mean_len` and the values,
/// tab-separated with four decimals. A missing FKGL is written as "-".
void write_report_tsv(std::ostream& out, const EvalReport& report);

/// Human-readable table including the per-order breakdown.
void write_report_table(std::ostream& out, const EvalReport& report);

}  // namespace tst
