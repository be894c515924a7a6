#include "commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "pipeline.hpp"
#include "tcat/error.hpp"
#include "tcat/synth.hpp"

namespace tcat::cli {

namespace {

int exit_code(const Error& e) {
  switch (e.category()) {
    case Error::Category::invalid_argument:
      return kExitUsage;
    case Error::Category::io:
      return kExitIo;
    case Error::Category::data_shape:
    case Error::Category::numerical:
      return kExitData;
  }
  return kExitData;
}

// Runs body and maps library errors onto the exit-code contract.
template <typename Body>
int guarded(std::ostream& err, const char* command, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "tcat " << command << ": " << e.what() << '\n';
    return exit_code(e);
  } catch (const nlohmann::json::exception& e) {
    err << "tcat " << command << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "tcat " << command << ": " << e.what() << '\n';
    return kExitIo;
  } catch (const std::bad_alloc&) {
    err << "tcat " << command << ": out of memory\n";
    return kExitData;
  }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

template <typename Writer>
std::string render(Writer&& writer) {
  std::ostringstream s;
  writer(s);
  return s.str();
}

}  // namespace

int cmd_synth(const SynthOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, "synth", [&] {
    if (options.out.empty()) throw InvalidArgument("--out is required");
    const bool fbm = options.kind == SynthKind::fbm;
    const UniformSeries path =
        fbm ? gen_fbm({options.hurst, options.length, options.dt, options.scale, options.seed})
            : gen_sbm(options.length, options.dt, options.scale, options.seed);
    write_csv_file(options.out, path);

    nlohmann::ordered_json echo;
    echo["kind"] = fbm ? "fbm" : "sbm";
    echo["hurst"] = fbm ? options.hurst : 0.5;
    echo["length"] = options.length;
    echo["dt"] = options.dt;
    echo["scale"] = options.scale;
    echo["seed"] = options.seed;
    echo["out"] = options.out.string();
    out << echo.dump() << '\n';
    return kExitOk;
  });
}

int cmd_analyze(const AnalysisConfig& config, std::ostream& out, std::ostream& err,
                unsigned threads) {
  return guarded(err, "analyze", [&] {
    config.validate();
    const UniformSeries series = read_csv_file(config.resolved_input());
    const AnalysisResult result = run_analysis(series, config, threads);

    const std::filesystem::path dir(config.output_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());

    write_file(dir / "report.json", build_report(series, config, result).dump(2) + "\n");
    write_file(dir / "reynolds.csv",
               render([&](std::ostream& s) { write_reynolds_csv(s, series, result); }));
    write_file(dir / "transport.csv",
               render([&](std::ostream& s) { write_transport_csv(s, series, result); }));
    write_file(dir / "hurst.csv",
               render([&](std::ostream& s) { write_hurst_csv(s, series, result); }));

    out << "analyzed " << series.size() << " samples: " << result.regimes.r_clusters.size()
        << " R-clusters, " << result.regimes.d_clusters.size() << " D-clusters; wrote "
        << (dir / "report.json").string() << '\n';
    return kExitOk;
  });
}

int cmd_report(const std::filesystem::path& report_path, ReportFormat format, std::ostream& out,
               std::ostream& err) {
  return guarded(err, "report", [&] {
    std::ifstream in(report_path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + report_path.string() + "'");
    nlohmann::json report;
    try {
      report = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidArgument(std::string("<root>: not valid JSON (") + e.what() + ")");
    }
    render_report(out, report, format);
    return kExitOk;
  });
}

}  // namespace tcat::cli
