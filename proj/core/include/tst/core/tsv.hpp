#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tst {

/// Splits a line on TAB; strips one trailing CR.
std::vector<std::string> split_tsv(std::string_view line);

std::string join_tsv(const std::vector<std::string>& fields);

}  // namespace tst
