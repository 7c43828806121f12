#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace tst {

/// One scored sentence: the input, the system output and its references.
/// Sentences are whitespace-tokenized.
struct EvalRecord {
  std::string source;
  std::string system;
  std::vector<std::string> references;
};

inline constexpr std::size_t kSariMaxOrder = 4;

struct OperationScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// Scores for one n-gram order, all in [0,1].
struct NgramScores {
  OperationScore add;
  OperationScore keep;
  OperationScore del;
};

/// Corpus SARI on a 0..100 scale. The per-operation values are F1 averaged
/// over n = 1..4; sari is the mean of the three.
struct SariReport {
  double sari = 0.0;
  double add_f1 = 0.0;
  double keep_f1 = 0.0;
  double del_f1 = 0.0;
  std::array<NgramScores, kSariMaxOrder> per_order{};
};

/// Streaming corpus-level SARI. Counts are summed over all records before
/// precision and recall are taken.
///
/// Per order n, with I, O the n-gram counts of source and system and R the
/// reference counts summed and divided by the number of references:
///   add:    candidates are n-grams of O not in I, targets n-grams of R not in I (sets)
///   keep:   candidates min(I, O), targets min(I, R)
///   delete: candidates max(I - O, 0), targets max(I - R, 0)
/// correct is the overlap min(candidate, target). A precision or recall with an
/// empty denominator is 0, or 1 when the other side is empty too.
class SariAccumulator {
 public:
  /// Throws std::invalid_argument if the record has no references.
  void add(const EvalRecord& record);
  std::size_t size() const noexcept { return records_; }
  /// Throws EmptyCorpus if nothing was added.
  SariReport report() const;

 private:
  struct Counts {
    double correct = 0.0;
    double candidates = 0.0;
    double targets = 0.0;
  };
  struct OrderCounts {
    Counts add, keep, del;
  };
  static OperationScore score(const Counts& c);

  std::array<OrderCounts, kSariMaxOrder> counts_{};
  std::size_t records_ = 0;
};

SariReport sari(std::span<const EvalRecord> records);

}  // namespace tst
