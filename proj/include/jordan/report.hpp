#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jordan/rational.hpp"

namespace jordan {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitCertificate = 2;
inline constexpr int kExitUsage = 3;

enum class OutputFormat { Csv, Markdown, Json };

struct ReportConfig {
  OutputFormat format = OutputFormat::Markdown;
  double tol = 1e-12;
  int grid_n = 1024;
  int precision = 6;
  std::optional<std::string> out_path;  // file for tables, directory for plot data
};

/// Throws std::invalid_argument on an out-of-contract field.
void validate(const ReportConfig& config);

/// Locale-independent %.*g formatting (significant digits).
std::string format_number(double v, int precision);

struct TextTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string render_csv(const std::vector<TextTable>& tables);
std::string render_markdown(const std::vector<TextTable>& tables);
std::string render_json(const std::vector<TextTable>& tables);

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;
};

/// Classical bound deviations against their references.
CommandResult cmd_bounds(const ReportConfig& config);

/// The six minimax solves against their reference constants.
CommandResult cmd_minimax(const ReportConfig& config);

/// The two sign-lemma certificates; `tamper` runs the negative controls
/// instead, which must fail (and therefore exits with the certificate
/// failure code).
CommandResult cmd_certify(const ReportConfig& config, const Rational& lo,
                          const Rational& hi, bool tamper);

/// Grid checks of the two-sided sandwich bounds: the classical exponent
/// pairs plus seeded random pairs in both regimes.
CommandResult cmd_verify(const ReportConfig& config);

/// Writes per-family curve files (CSV, columns x,parameter,value) into the
/// output directory and reports a manifest.
CommandResult cmd_plot_data(const ReportConfig& config);

}  // namespace jordan
