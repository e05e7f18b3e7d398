#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "jordan/report.hpp"

namespace {

int emit(const jordan::ReportConfig& config, const jordan::CommandResult& result) {
  if (config.out_path) {
    std::ofstream out(*config.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << *config.out_path << "\n";
      return 1;
    }
    out << result.output;
  } else {
    std::cout << result.output;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stratified sinc bounds: tables, minimax constants and sign certificates"};
  app.require_subcommand(1);

  jordan::ReportConfig config;
  std::string format = "markdown";
  std::string out_path;
  app.add_option("--format,-f", format, "Output format: csv, markdown or json")
      ->check(CLI::IsMember({"csv", "markdown", "json"}));
  app.add_option("--tol", config.tol, "Solver tolerance, in (0, 1e-3]");
  app.add_option("--grid-n", config.grid_n, "Scan grid size, in [64, 2^20]");
  app.add_option("--precision", config.precision, "Significant digits in output");
  app.add_option("--out,-o", out_path,
                 "Output file (plot-data: output directory, default ./plot-data)");

  auto* bounds = app.add_subcommand("bounds", "Deviation tables of the classical bounds");
  auto* minimax = app.add_subcommand("minimax", "Solve the six minimax members");
  auto* certify = app.add_subcommand("certify", "Exact sign-lemma certificates");
  auto* verify = app.add_subcommand("verify", "Grid checks of the two-sided sandwiches");
  auto* plot = app.add_subcommand("plot-data", "Write per-family curve files");
  for (auto* sub : {bounds, minimax, certify, verify, plot}) sub->fallthrough();

  std::string interval = "0,8/5";
  bool tamper = false;
  certify->add_option("--interval", interval, "Certification interval as LO,HI rationals");
  certify->add_flag("--tamper", tamper,
                    "Negative control: tamper one truncation degree; must fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : jordan::kExitUsage;
  }

  config.format = format == "csv"    ? jordan::OutputFormat::Csv
                  : format == "json" ? jordan::OutputFormat::Json
                                     : jordan::OutputFormat::Markdown;
  if (!out_path.empty()) config.out_path = out_path;

  try {
    jordan::validate(config);
    if (*bounds) return emit(config, jordan::cmd_bounds(config));
    if (*minimax) return emit(config, jordan::cmd_minimax(config));
    if (*certify) {
      const auto comma = interval.find(',');
      if (comma == std::string::npos) {
        throw std::invalid_argument("--interval needs the form LO,HI");
      }
      const jordan::Rational lo = jordan::parse_rational(interval.substr(0, comma));
      const jordan::Rational hi = jordan::parse_rational(interval.substr(comma + 1));
      return emit(config, jordan::cmd_certify(config, lo, hi, tamper));
    }
    if (*verify) return emit(config, jordan::cmd_verify(config));
    if (*plot) {
      // plot-data consumes --out as its target directory; the command result
      // is a manifest of the files written, which belongs on stdout.
      const jordan::CommandResult result = jordan::cmd_plot_data(config);
      std::cout << result.output;
      return result.exit_code;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return jordan::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return jordan::kExitUsage;
}
