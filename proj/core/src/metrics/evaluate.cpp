#include "tst/metrics/evaluate.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <istream>
#include <ostream>

#include "tst/core/errors.hpp"
#include "tst/core/token.hpp"
#include "tst/core/tsv.hpp"

namespace tst {

void Evaluator::add(const EvalRecord& record) {
  sari_.add(record);
  if (with_fkgl_) fkgl_.add(record.system);
  output_words_ += split_words(record.system).size();
}

EvalReport Evaluator::report() const {
  EvalReport r;
  r.sari = sari_.report();
  r.records = sari_.size();
  if (with_fkgl_) r.fkgl = fkgl_.value();
  r.mean_output_length = static_cast<double>(output_words_) / static_cast<double>(r.records);
  return r;
}

EvalReport evaluate(std::span<const EvalRecord> records, bool with_fkgl) {
  Evaluator ev(with_fkgl);
  for (const auto& r : records) ev.add(r);
  return ev.report();
}

bool EvalRecordReader::next(EvalRecord& record) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    auto fields = split_tsv(line);
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() < 3) {
      throw MalformedFile("line " + std::to_string(line_) + ": expected source, system and at least one reference, got " +
                          std::to_string(fields.size()) + " fields");
    }
    record.source = std::move(fields[0]);
    record.system = std::move(fields[1]);
    record.references.assign(std::make_move_iterator(fields.begin() + 2), std::make_move_iterator(fields.end()));
    return true;
  }
  return false;
}

void write_report_tsv(std::ostream& out, const EvalReport& report) {
  const auto& s = report.sari;
  const std::string fk = report.fkgl ? fmt::format("{:.4f}", *report.fkgl) : std::string("-");
  fmt::print(out, "sari\tadd\tdelete\tkeep\tfkgl\tmean_len\n");
  fmt::print(out, "{:.4f}\t{:.4f}\t{:.4f}\t{:.4f}\t{}\t{:.4f}\n", s.sari, s.add_f1, s.del_f1, s.keep_f1, fk,
             report.mean_output_length);
}

void write_report_table(std::ostream& out, const EvalReport& report) {
  const auto& s = report.sari;
  fmt::print(out, "records    {}\n", report.records);
  fmt::print(out, "SARI       {:8.2f}\n", s.sari);
  fmt::print(out, "  ADD      {:8.2f}\n", s.add_f1);
  fmt::print(out, "  DELETE   {:8.2f}\n", s.del_f1);
  fmt::print(out, "  KEEP     {:8.2f}\n", s.keep_f1);
  if (report.fkgl) fmt::print(out, "FKGL       {:8.2f}\n", *report.fkgl);
  fmt::print(out, "mean len   {:8.2f}\n\n", report.mean_output_length);
  fmt::print(out, "  n   add P/R/F1              keep P/R/F1             delete P/R/F1\n");
  for (std::size_t n = 0; n < s.per_order.size(); ++n) {
    const auto& o = s.per_order[n];
    fmt::print(out, "  {}   {:.3f} {:.3f} {:.3f}   {:.3f} {:.3f} {:.3f}   {:.3f} {:.3f} {:.3f}\n", n + 1,
               o.add.precision, o.add.recall, o.add.f1, o.keep.precision, o.keep.recall, o.keep.f1, o.del.precision,
               o.del.recall, o.del.f1);
  }
}

}  // namespace tst
