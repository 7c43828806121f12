#pragma once

#include <string_view>

#include "tst/core/token.hpp"

namespace tst {

inline constexpr std::string_view kLeftBracket = "-LRB-";
inline constexpr std::string_view kRightBracket = "-RRB-";

/// Drops every -LRB- ... -RRB- span (inclusive, nesting by depth). An
/// unmatched -LRB- drops everything after it; an unmatched -RRB- is dropped
/// alone.
TokenSeq filter_brackets(const TokenSeq& seq);

}  // namespace tst
