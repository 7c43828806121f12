#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tst {

/// Inference tweaks. The defaults are the untweaked setting: no biases, no
/// detection threshold, five tagging iterations.
struct InferenceConfig {
  /// Added to the KEEP probability before the argmax.
  double keep_bias = 0.0;
  /// Added to the DELETE probability before the argmax.
  double delete_bias = 0.0;
  /// Sentence-level gate on the maximum detection probability.
  double min_edit_prob = 0.0;
  int max_iterations = 5;

  friend bool operator==(const InferenceConfig&, const InferenceConfig&) = default;
};

inline constexpr int kMaxIterationsLimit = 5;

/// Throws InvalidConfig unless 1 <= max_iterations <= 5, min_edit_prob >= 0
/// and every value is finite.
void validate_config(const InferenceConfig& cfg);

/// Reads `key = value` lines; '#' starts a comment. Keys are keep_bias,
/// delete_bias, min_edit_prob, max_iterations, or their tuning-table names
/// keep_conf, del_conf, min_error_probability, iterations. Keys not present
/// keep the value from `base`. Throws InvalidConfig.
InferenceConfig parse_config(std::istream& in, const InferenceConfig& base = {});
InferenceConfig load_config(const std::filesystem::path& path, const InferenceConfig& base = {});

/// Writes the tuning-table layout: del_conf, keep_conf, iterations,
/// min_error_probability, one per line. parse_config reads it back exactly.
void write_config(std::ostream& out, const InferenceConfig& cfg);
std::string format_config(const InferenceConfig& cfg);

/// Published tuning results, named "<dataset>-<seed>" (e.g. "turk-1",
/// "asset-11"), plus "none" for the untweaked row.
struct ConfigPreset {
  std::string_view name;
  InferenceConfig config;
};
const std::vector<ConfigPreset>& config_presets();
std::optional<InferenceConfig> find_preset(std::string_view name);

}  // namespace tst
