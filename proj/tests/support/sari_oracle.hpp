#pragma once

#include <string>
#include <vector>

namespace tst::testing {

struct OracleRecord {
  std::vector<std::string> source;
  std::vector<std::string> system;
  std::vector<std::vector<std::string>> references;
};

struct OracleSari {
  double sari = 0.0;
  double add = 0.0;
  double keep = 0.0;
  double del = 0.0;
};

/// Brute-force corpus SARI written straight from the metric definition:
/// explicit n-gram lists, linear scans for counts, fractional reference
/// counts as doubles. Slow on purpose; shares no code with the library.
OracleSari brute_force_sari(const std::vector<OracleRecord>& corpus);

}  // namespace tst::testing
