#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "tcat/error.hpp"

namespace {

using tcat::cli::AnalysisConfig;

// Flags given on the command line for `analyze`; applied over the config
// file so that flags win.
struct AnalyzeFlags {
  std::string config_path;
  std::map<std::string, std::string> settings;
};

void add_setting_flag(CLI::App& cmd, AnalyzeFlags& flags, const std::string& key,
                      const std::string& help) {
  cmd.add_option_function<std::string>(
         "--" + key, [&flags, key](const std::string& v) { flags.settings[key] = v; }, help)
      ->type_name("VALUE");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transport-catastrophe analysis of time series (R/D analysis)", "tcat"};
  app.require_subcommand(1);

  // synth
  tcat::cli::SynthOptions synth;
  std::string kind;
  std::string synth_out;
  auto* synth_cmd = app.add_subcommand("synth", "Generate an SBM or FBM path as date,close CSV");
  synth_cmd->add_option("kind", kind, "sbm or fbm")
      ->required()
      ->check(CLI::IsMember({"sbm", "fbm"}));
  synth_cmd->add_option("--hurst", synth.hurst, "Hurst exponent in (0,1) (fbm only)");
  synth_cmd->add_option("--length", synth.length, "Number of samples");
  synth_cmd->add_option("--seed", synth.seed, "Random seed");
  synth_cmd->add_option("--dt", synth.dt, "Sampling step");
  synth_cmd->add_option("--scale", synth.scale, "Diffusion amplitude");
  synth_cmd->add_option("--out", synth_out, "Output CSV path")->required();

  // analyze
  AnalyzeFlags flags;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run R-, D- and combined R/D analysis");
  analyze_cmd->add_option("--config", flags.config_path, "Flat key = value config file");
  add_setting_flag(*analyze_cmd, flags, "input", "Input date,close CSV");
  add_setting_flag(*analyze_cmd, flags, "out", "Output directory");
  add_setting_flag(*analyze_cmd, flags, "window-n", "Momentary transport window N");
  add_setting_flag(*analyze_cmd, flags, "msd-window", "Start points averaged per lag");
  add_setting_flag(*analyze_cmd, flags, "lag-min", "Smallest lag of the power-law fit");
  add_setting_flag(*analyze_cmd, flags, "lag-max", "Largest lag of the power-law fit");
  add_setting_flag(*analyze_cmd, flags, "cluster-gap", "Largest index gap inside a cluster");
  add_setting_flag(*analyze_cmd, flags, "msd-normalization", "literal or mean");
  add_setting_flag(*analyze_cmd, flags, "bif-normalization", "global or rolling");
  add_setting_flag(*analyze_cmd, flags, "bif-rolling-window", "Window of rolling Bif scaling");
  add_setting_flag(*analyze_cmd, flags, "min-cluster-points", "Drop smaller clusters");
  add_setting_flag(*analyze_cmd, flags, "seed", "Recorded in the report for provenance");
  unsigned threads = 0;
  analyze_cmd->add_option("--threads", threads, "Worker threads for rolling fits (0 = auto)");

  // report
  std::string report_path;
  std::string format = "text";
  auto* report_cmd = app.add_subcommand("report", "Render report.json as a chronology");
  report_cmd->add_option("report", report_path, "Path to report.json")->required();
  report_cmd->add_option("--format", format, "text or markdown")
      ->check(CLI::IsMember({"text", "markdown"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return tcat::cli::kExitUsage;
  }

  if (synth_cmd->parsed()) {
    synth.kind = kind == "sbm" ? tcat::cli::SynthKind::sbm : tcat::cli::SynthKind::fbm;
    synth.out = synth_out;
    return tcat::cli::cmd_synth(synth, std::cout, std::cerr);
  }

  if (analyze_cmd->parsed()) {
    AnalysisConfig config;
    try {
      if (!flags.config_path.empty()) config = tcat::cli::read_config_file(flags.config_path);
      for (const auto& [key, value] : flags.settings) {
        tcat::cli::apply_setting(config, key, value);
        // A flag-given input is relative to the working directory.
        if (key == "input") config.base_dir.clear();
      }
    } catch (const tcat::IoError& e) {
      std::cerr << "tcat analyze: " << e.what() << '\n';
      return tcat::cli::kExitIo;
    } catch (const tcat::Error& e) {
      std::cerr << "tcat analyze: " << e.what() << '\n';
      return tcat::cli::kExitUsage;
    }
    return tcat::cli::cmd_analyze(config, std::cout, std::cerr, threads);
  }

  const auto fmt =
      format == "markdown" ? tcat::cli::ReportFormat::markdown : tcat::cli::ReportFormat::text;
  return tcat::cli::cmd_report(report_path, fmt, std::cout, std::cerr);
}
