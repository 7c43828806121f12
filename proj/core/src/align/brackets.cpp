#include "tst/align/brackets.hpp"

#include <vector>

namespace tst {

TokenSeq filter_brackets(const TokenSeq& seq) {
  std::vector<std::string> kept;
  kept.reserve(seq.num_words());
  std::size_t depth = 0;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const std::string& w = seq[i].text;
    if (w == kLeftBracket) {
      ++depth;
    } else if (w == kRightBracket) {
      if (depth > 0) --depth;
    } else if (depth == 0) {
      kept.push_back(w);
    }
  }
  return TokenSeq(kept);
}

}  // namespace tst
