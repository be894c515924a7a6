#include "config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "tcat/error.hpp"

namespace tcat::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_unsigned(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size())
    throw InvalidArgument("config key '" + std::string(key) +
                          "' expects a nonnegative integer, got '" + std::string(value) + "'");
  return out;
}

}  // namespace

std::string_view to_string(MsdNormalization mode) {
  return mode == MsdNormalization::literal ? "literal" : "mean";
}

std::string_view to_string(BifNormalization mode) {
  return mode == BifNormalization::global ? "global" : "rolling";
}

MsdNormalization parse_msd_normalization(std::string_view text) {
  if (text == "literal") return MsdNormalization::literal;
  if (text == "mean") return MsdNormalization::mean;
  throw InvalidArgument("msd-normalization must be 'literal' or 'mean', got '" +
                        std::string(text) + "'");
}

BifNormalization parse_bif_normalization(std::string_view text) {
  if (text == "global") return BifNormalization::global;
  if (text == "rolling") return BifNormalization::rolling;
  throw InvalidArgument("bif-normalization must be 'global' or 'rolling', got '" +
                        std::string(text) + "'");
}

void AnalysisConfig::validate() const {
  if (input_path.empty()) throw InvalidArgument("input: no input file given");
  if (lag_min < 1) throw InvalidArgument("lag-min must be at least 1");
  if (lag_max <= lag_min) throw InvalidArgument("lag-max must exceed lag-min");
  if (lag_max - lag_min + 1 < 3)
    throw InvalidArgument("lag-min..lag-max must span at least 3 lags for a power-law fit");
  if (window_n < 1) throw InvalidArgument("window-n must be at least 1");
  if (msd_window < 8) throw InvalidArgument("msd-window must be at least 8");
  if (cluster_gap < 1) throw InvalidArgument("cluster-gap must be at least 1");
  if (bif_rolling_window < 1) throw InvalidArgument("bif-rolling-window must be at least 1");
  if (min_cluster_points < 1) throw InvalidArgument("min-cluster-points must be at least 1");
}

std::filesystem::path AnalysisConfig::resolved_input() const {
  std::filesystem::path p(input_path);
  if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
  return p.lexically_normal();
}

bool AnalysisConfig::operator==(const AnalysisConfig& o) const {
  return input_path == o.input_path && output_dir == o.output_dir && window_n == o.window_n &&
         msd_window == o.msd_window && lag_min == o.lag_min && lag_max == o.lag_max &&
         cluster_gap == o.cluster_gap && msd_normalization == o.msd_normalization &&
         bif_normalization == o.bif_normalization &&
         bif_rolling_window == o.bif_rolling_window &&
         min_cluster_points == o.min_cluster_points && seed == o.seed;
}

void apply_setting(AnalysisConfig& config, std::string_view key, std::string_view value) {
  if (key == "input") {
    config.input_path = std::string(value);
  } else if (key == "out") {
    config.output_dir = std::string(value);
  } else if (key == "window-n") {
    config.window_n = parse_unsigned<std::size_t>(key, value);
  } else if (key == "msd-window") {
    config.msd_window = parse_unsigned<std::size_t>(key, value);
  } else if (key == "lag-min") {
    config.lag_min = parse_unsigned<std::size_t>(key, value);
  } else if (key == "lag-max") {
    config.lag_max = parse_unsigned<std::size_t>(key, value);
  } else if (key == "cluster-gap") {
    config.cluster_gap = parse_unsigned<std::size_t>(key, value);
  } else if (key == "msd-normalization") {
    config.msd_normalization = parse_msd_normalization(value);
  } else if (key == "bif-normalization") {
    config.bif_normalization = parse_bif_normalization(value);
  } else if (key == "bif-rolling-window") {
    config.bif_rolling_window = parse_unsigned<std::size_t>(key, value);
  } else if (key == "min-cluster-points") {
    config.min_cluster_points = parse_unsigned<std::size_t>(key, value);
  } else if (key == "seed") {
    if (value.empty() || value == "none")
      config.seed.reset();
    else
      config.seed = parse_unsigned<std::uint64_t>(key, value);
  } else {
    throw InvalidArgument("unknown config key '" + std::string(key) + "'");
  }
}

AnalysisConfig parse_config_text(std::string_view text, AnalysisConfig base) {
  AnalysisConfig config = std::move(base);
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw InvalidArgument("config line " + std::to_string(line_no) +
                            ": expected 'key = value'");
    try {
      apply_setting(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return config;
}

AnalysisConfig read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  AnalysisConfig config = parse_config_text(text.str());
  config.base_dir = path.parent_path();
  return config;
}

std::string to_config_text(const AnalysisConfig& c) {
  std::ostringstream out;
  out << "input = " << c.input_path << '\n'
      << "out = " << c.output_dir << '\n'
      << "window-n = " << c.window_n << '\n'
      << "msd-window = " << c.msd_window << '\n'
      << "lag-min = " << c.lag_min << '\n'
      << "lag-max = " << c.lag_max << '\n'
      << "cluster-gap = " << c.cluster_gap << '\n'
      << "msd-normalization = " << to_string(c.msd_normalization) << '\n'
      << "bif-normalization = " << to_string(c.bif_normalization) << '\n'
      << "bif-rolling-window = " << c.bif_rolling_window << '\n'
      << "min-cluster-points = " << c.min_cluster_points << '\n'
      << "seed = " << (c.seed ? std::to_string(*c.seed) : std::string("none")) << '\n';
  return out.str();
}

}  // namespace tcat::cli
