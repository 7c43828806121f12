#include "tst/engine/config.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tst/core/errors.hpp"

namespace tst {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view key, std::string_view text) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw InvalidConfig("'" + std::string(key) + "' expects a number, got '" + s + "'");
  }
  return v;
}

int parse_int(std::string_view key, std::string_view text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidConfig("'" + std::string(key) + "' expects an integer, got '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

void validate_config(const InferenceConfig& cfg) {
  if (!std::isfinite(cfg.keep_bias) || !std::isfinite(cfg.delete_bias) || !std::isfinite(cfg.min_edit_prob)) {
    throw InvalidConfig("config values must be finite");
  }
  if (cfg.min_edit_prob < 0.0) throw InvalidConfig("min_edit_prob must be non-negative");
  if (cfg.max_iterations < 1 || cfg.max_iterations > kMaxIterationsLimit) {
    throw InvalidConfig("max_iterations must be in 1..5, got " + std::to_string(cfg.max_iterations));
  }
}

InferenceConfig parse_config(std::istream& in, const InferenceConfig& base) {
  InferenceConfig cfg = base;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw InvalidConfig("line " + std::to_string(lineno) + " lacks '='");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "keep_bias" || key == "keep_conf") {
      cfg.keep_bias = parse_double(key, value);
    } else if (key == "delete_bias" || key == "del_conf") {
      cfg.delete_bias = parse_double(key, value);
    } else if (key == "min_edit_prob" || key == "min_error_probability") {
      cfg.min_edit_prob = parse_double(key, value);
    } else if (key == "max_iterations" || key == "iterations") {
      cfg.max_iterations = parse_int(key, value);
    } else {
      throw InvalidConfig("unknown key '" + std::string(key) + "' on line " + std::to_string(lineno));
    }
  }
  validate_config(cfg);
  return cfg;
}

InferenceConfig load_config(const std::filesystem::path& path, const InferenceConfig& base) {
  std::ifstream in(path);
  if (!in) throw InvalidConfig("cannot open config '" + path.string() + "'");
  return parse_config(in, base);
}

std::string format_config(const InferenceConfig& cfg) {
  return fmt::format("del_conf = {}\nkeep_conf = {}\niterations = {}\nmin_error_probability = {}\n",
                     cfg.delete_bias, cfg.keep_bias, cfg.max_iterations, cfg.min_edit_prob);
}

void write_config(std::ostream& out, const InferenceConfig& cfg) { out << format_config(cfg); }

const std::vector<ConfigPreset>& config_presets() {
  // {keep_bias, delete_bias, min_edit_prob, max_iterations}
  static const std::vector<ConfigPreset> presets = {
      {"none", {0.0, 0.0, 0.0, 5}},
      {"turk-1", {-0.66, -0.84, 0.04, 2}},
      {"turk-2", {-0.51, -0.93, 0.02, 3}},
      {"turk-3", {-0.68, -0.86, 0.03, 2}},
      {"turk-11", {-0.61, -0.88, 0.03, 2}},
      {"asset-1", {-0.9, -0.66, 0.02, 3}},
      {"asset-2", {-0.88, -0.72, 0.02, 3}},
      {"asset-3", {-0.89, -0.52, 0.04, 3}},
      {"asset-11", {-0.91, -0.72, 0.02, 3}},
  };
  return presets;
}

std::optional<InferenceConfig> find_preset(std::string_view name) {
  for (const auto& p : config_presets()) {
    if (p.name == name) return p.config;
  }
  return std::nullopt;
}

}  // namespace tst
