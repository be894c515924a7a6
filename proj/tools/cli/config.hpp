#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "tcat/diffusion.hpp"
#include "tcat/reynolds.hpp"

namespace tcat::cli {

/// Every free parameter of an analyze run. Defaults are the tool defaults;
/// a config file and then command-line flags override them.
struct AnalysisConfig {
  std::string input_path;
  std::string output_dir = ".";
  std::size_t window_n = 8;     ///< momentary transport window N
  std::size_t msd_window = 32;  ///< start points averaged per lag
  std::size_t lag_min = 1;
  std::size_t lag_max = 16;
  std::size_t cluster_gap = 3;
  MsdNormalization msd_normalization = MsdNormalization::literal;
  BifNormalization bif_normalization = BifNormalization::global;
  std::size_t bif_rolling_window = 26;
  std::size_t min_cluster_points = 1;
  std::optional<std::uint64_t> seed;

  /// Directory against which a relative input_path is resolved (the config
  /// file's directory); not itself a parameter.
  std::filesystem::path base_dir;

  /// Throws InvalidArgument naming the offending key.
  void validate() const;
  std::filesystem::path resolved_input() const;

  bool operator==(const AnalysisConfig& other) const;
};

std::string_view to_string(MsdNormalization mode);
std::string_view to_string(BifNormalization mode);
MsdNormalization parse_msd_normalization(std::string_view text);
BifNormalization parse_bif_normalization(std::string_view text);

/// Applies `key = value` to the config. Keys are the long flag names without
/// the leading dashes (window-n, msd-window, ...). Throws InvalidArgument.
void apply_setting(AnalysisConfig& config, std::string_view key, std::string_view value);

/// Flat key-value text: one `key = value` per line, `#` starts a comment.
AnalysisConfig parse_config_text(std::string_view text, AnalysisConfig base = {});
AnalysisConfig read_config_file(const std::filesystem::path& path);
std::string to_config_text(const AnalysisConfig& config);

}  // namespace tcat::cli
