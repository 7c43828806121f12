#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tst/core/token.hpp"

namespace tst {

enum class AlignKind { kEqual, kSubstitute, kDelete, kInsert };

/// Indices are word positions (the sentinel is excluded and implicitly EQUAL).
struct AlignOp {
  AlignKind kind;
  std::optional<std::size_t> src;
  std::optional<std::size_t> tgt;

  friend bool operator==(const AlignOp&, const AlignOp&) = default;
};

/// Minimum-edit-distance word alignment with unit costs. Backtrace runs from
/// the end and prefers EQUAL/SUBSTITUTE, then DELETE, then INSERT at every
/// tie, so the result is deterministic.
std::vector<AlignOp> align(const TokenSeq& src, const TokenSeq& tgt);

/// Number of non-EQUAL ops, i.e. the word-level Levenshtein distance.
std::size_t alignment_cost(const std::vector<AlignOp>& ops);

/// Longest run of consecutive INSERT ops.
std::size_t longest_insert_run(const std::vector<AlignOp>& ops);

}  // namespace tst
