#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "config.hpp"
#include "report.hpp"

namespace tcat::cli {

// Exit-code contract of every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitData = 4;

enum class SynthKind { sbm, fbm };

struct SynthOptions {
  SynthKind kind = SynthKind::fbm;
  double hurst = 0.5;
  std::size_t length = 2048;
  double dt = 1.0;
  double scale = 1.0;
  std::uint64_t seed = 0;
  std::filesystem::path out;
};

/// Writes the path as `date,close` CSV and echoes the options as JSON on `out`.
int cmd_synth(const SynthOptions& options, std::ostream& out, std::ostream& err);

/// Writes report.json, reynolds.csv, transport.csv and hurst.csv into
/// config.output_dir (created if missing).
int cmd_analyze(const AnalysisConfig& config, std::ostream& out, std::ostream& err,
                unsigned threads = 0);

int cmd_report(const std::filesystem::path& report_path, ReportFormat format, std::ostream& out,
               std::ostream& err);

}  // namespace tcat::cli
