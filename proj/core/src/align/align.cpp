#include "tst/align/align.hpp"

#include <algorithm>

namespace tst {

std::vector<AlignOp> align(const TokenSeq& src, const TokenSeq& tgt) {
  const std::size_t n = src.num_words();
  const std::size_t m = tgt.num_words();
  auto word = [](const TokenSeq& s, std::size_t i) -> const std::string& { return s[i + 1].text; };

  // dist[i][j]: cost of aligning the first i source words with the first j target words.
  std::vector<std::size_t> dist((n + 1) * (m + 1));
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return dist[i * (m + 1) + j]; };
  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = i;
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t sub = at(i - 1, j - 1) + (word(src, i - 1) == word(tgt, j - 1) ? 0 : 1);
      at(i, j) = std::min({sub, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }

  std::vector<AlignOp> ops;
  ops.reserve(n + m);
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool same = word(src, i - 1) == word(tgt, j - 1);
      if (at(i, j) == at(i - 1, j - 1) + (same ? 0 : 1)) {
        ops.push_back({same ? AlignKind::kEqual : AlignKind::kSubstitute, i - 1, j - 1});
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      ops.push_back({AlignKind::kDelete, i - 1, std::nullopt});
      --i;
      continue;
    }
    ops.push_back({AlignKind::kInsert, std::nullopt, j - 1});
    --j;
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

std::size_t alignment_cost(const std::vector<AlignOp>& ops) {
  return static_cast<std::size_t>(
      std::count_if(ops.begin(), ops.end(), [](const AlignOp& op) { return op.kind != AlignKind::kEqual; }));
}

std::size_t longest_insert_run(const std::vector<AlignOp>& ops) {
  std::size_t best = 0, run = 0;
  for (const auto& op : ops) {
    run = op.kind == AlignKind::kInsert ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

}  // namespace tst
