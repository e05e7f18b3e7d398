#include "jordan/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "jordan/certify.hpp"
#include "jordan/minimax.hpp"
#include "jordan/solve.hpp"

namespace jordan {
namespace {

constexpr double kDiffTol = 1e-5;
constexpr double kRelTol = 1e-4;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

std::string family_label(const FamilySpec& spec, int precision) {
  switch (spec.kind) {
    case FamilyKind::AType:
      return "A q=" + format_number(spec.q, precision);
    case FamilyKind::BType:
      return "B q=" + format_number(spec.q, precision);
    case FamilyKind::FixedQ:
      return "fixed q=" + format_number(spec.q, precision) +
             " p=" + format_number(spec.p, precision);
    case FamilyKind::TwoParam:
      return "p=" + format_number(spec.p, precision) +
             " q=" + format_number(spec.q, precision);
  }
  return "";
}

struct MinimaxRef {
  const char* family;
  double exponent;
  double coefficient;
  double deviation;
};

constexpr MinimaxRef kMinimaxRefs[] = {
    {"fixed q=1", 1.0, 0.13323, 0.055187},
    {"fixed q=2", 2.0, 0.036014, 0.0079283},
    {"fixed q=3", 3.0, 0.010441, 0.039635},
    {"fixed q=4", 4.0, 0.0031146, 0.059981},
    {"A", 1.84823, 0.043803, 0.0026604},
    {"B", 1.72287, 0.051415, 0.0061296},
};

double rel_err(double v, double ref) { return std::abs(v - ref) / std::abs(ref); }

}  // namespace

void validate(const ReportConfig& config) {
  if (!(config.tol > 0.0) || config.tol > 1e-3) {
    throw std::invalid_argument("tol must lie in (0, 1e-3]");
  }
  if (config.grid_n < 64 || config.grid_n > (1 << 20)) {
    throw std::invalid_argument("grid-n must lie in [64, 2^20]");
  }
  if (config.precision < 1 || config.precision > 17) {
    throw std::invalid_argument("precision must lie in [1, 17]");
  }
}

std::string format_number(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

std::string render_csv(const std::vector<TextTable>& tables) {
  std::ostringstream out;
  bool first = true;
  for (const auto& t : tables) {
    if (!first) out << "\n";
    first = false;
    out << "# " << t.title << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      out << (i ? "," : "") << csv_escape(t.columns[i]);
    }
    out << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? "," : "") << csv_escape(row[i]);
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string render_markdown(const std::vector<TextTable>& tables) {
  std::ostringstream out;
  bool first = true;
  for (const auto& t : tables) {
    if (!first) out << "\n";
    first = false;
    out << "## " << t.title << "\n\n";
    out << "|";
    for (const auto& c : t.columns) out << " " << c << " |";
    out << "\n|";
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << " --- |";
    out << "\n";
    for (const auto& row : t.rows) {
      out << "|";
      for (const auto& cell : row) out << " " << cell << " |";
      out << "\n";
    }
  }
  return out.str();
}

std::string render_json(const std::vector<TextTable>& tables) {
  nlohmann::json doc;
  doc["tables"] = nlohmann::json::array();
  for (const auto& t : tables) {
    nlohmann::json jt;
    jt["title"] = t.title;
    jt["columns"] = t.columns;
    jt["rows"] = t.rows;
    doc["tables"].push_back(jt);
  }
  return doc.dump(2) + "\n";
}

namespace {

std::string render(const ReportConfig& config, const std::vector<TextTable>& tables) {
  switch (config.format) {
    case OutputFormat::Csv:
      return render_csv(tables);
    case OutputFormat::Markdown:
      return render_markdown(tables);
    case OutputFormat::Json:
      return render_json(tables);
  }
  return "";
}

}  // namespace

CommandResult cmd_bounds(const ReportConfig& config) {
  validate(config);
  const DeviationTables tables = deviation_tables(config.grid_n, config.tol);
  const int prec = config.precision;
  bool all_ok = true;
  const auto to_table = [&](const char* title, const std::vector<DeviationRow>& rows) {
    TextTable t;
    t.title = title;
    t.columns = {"id", "bound (offset 2/pi)", "family", "reference", "computed",
                 "difference", "reference kind"};
    for (const auto& r : rows) {
      const double diff = std::abs(r.computed - r.reference);
      all_ok = all_ok && diff <= kDiffTol;
      t.rows.push_back({r.id, r.expression, family_label(r.spec, prec),
                        format_number(r.reference, prec), format_number(r.computed, prec),
                        format_number(diff, 3), r.reference_exact ? "closed form" : "quoted"});
    }
    return t;
  };
  std::vector<TextTable> out;
  out.push_back(to_table("Upper bound deviations", tables.upper));
  out.push_back(to_table("Lower bound deviations", tables.lower));
  return {all_ok ? kExitOk : kExitMismatch, render(config, out)};
}

CommandResult cmd_minimax(const ReportConfig& config) {
  validate(config);
  std::vector<MinimaxResult> results;
  for (int q = 1; q <= 4; ++q) results.push_back(solve_minimax_fixed_q(q, config.tol));
  results.push_back(solve_minimax_A(config.tol));
  results.push_back(solve_minimax_B(config.tol));

  TextTable t;
  t.title = "Minimax members";
  t.columns = {"family", "exponent",  "coefficient", "deviation",
               "residual", "ref exponent", "ref coefficient", "ref deviation"};
  const int prec = config.precision;
  bool all_ok = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    const auto& ref = kMinimaxRefs[i];
    double exponent, coefficient;
    if (r.family_kind == FamilyKind::FixedQ) {
      exponent = ref.exponent;
      coefficient = r.param0;
    } else {
      exponent = r.param0;
      coefficient = r.family_kind == FamilyKind::AType ? coeff_A(r.param0)
                                                       : coeff_B(r.param0);
    }
    all_ok = all_ok && rel_err(exponent, ref.exponent) <= kRelTol &&
             rel_err(coefficient, ref.coefficient) <= kRelTol &&
             rel_err(r.d0, ref.deviation) <= kRelTol;
    t.rows.push_back({ref.family, format_number(exponent, prec),
                      format_number(coefficient, prec), format_number(r.d0, prec),
                      format_number(r.residual, 3), format_number(ref.exponent, prec),
                      format_number(ref.coefficient, prec),
                      format_number(ref.deviation, prec)});
  }
  return {all_ok ? kExitOk : kExitMismatch, render(config, {t})};
}

CommandResult cmd_certify(const ReportConfig& config, const Rational& lo, const Rational& hi,
                          bool tamper) {
  validate(config);
  if (!(lo >= 0) || !(lo < hi)) {
    throw std::invalid_argument("certification interval needs 0 <= lo < hi");
  }
  std::vector<CertificateBundle> bundles;
  for (const SignLemma lemma : {SignLemma::AFamilyNegative, SignLemma::BFamilyPositive}) {
    bundles.push_back(tamper ? certify_lemma_tampered(lemma, lo, hi)
                             : certify_lemma(lemma, lo, hi));
  }

  TextTable t;
  t.title = tamper ? "Sign-lemma certificates (negative control)" : "Sign-lemma certificates";
  t.columns = {"lemma", "status", "combined", "roots", "factored", "chain", "stage"};
  bool all_valid = true;
  for (const auto& b : bundles) {
    all_valid = all_valid && b.valid;
    t.rows.push_back({b.lemma == SignLemma::AFamilyNegative ? "mtp-a-negative"
                                                            : "mtp-b-positive",
                      b.valid ? "valid" : "invalid", b.combined.text(),
                      b.certificate ? std::to_string(b.certificate->root_count) : "-",
                      b.certificate ? std::to_string(b.certificate->factored_degree) : "-",
                      b.certificate ? std::to_string(b.certificate->chain_length) : "-",
                      b.valid ? "-" : b.failure_stage});
  }
  std::string out = render(config, {t});
  if (config.format != OutputFormat::Csv) {
    for (const auto& b : bundles) {
      out += config.format == OutputFormat::Markdown ? "\n```\n" + serialize(b) + "```\n"
                                                     : "";
    }
    if (config.format == OutputFormat::Json) {
      nlohmann::json doc = nlohmann::json::parse(out);
      auto& arr = doc["serialized"] = nlohmann::json::array();
      for (const auto& b : bundles) arr.push_back(serialize(b));
      out = doc.dump(2) + "\n";
    }
  }
  return {all_valid ? kExitOk : kExitCertificate, out};
}

CommandResult cmd_verify(const ReportConfig& config) {
  validate(config);
  const CriticalConstants cc = critical_constants();
  struct Check {
    std::string name;
    double q1;
    double q2;
  };
  std::vector<Check> checks;
  checks.push_back({"classical pair q=1", 1.0, 1.0});
  for (int q = 2; q <= 6; ++q) {
    checks.push_back({"classical pair q=" + std::to_string(q), static_cast<double>(q),
                      static_cast<double>(q)});
  }
  checks.push_back({"boundary pair", cc.b_upper_q, cc.a_lower_q});
  std::mt19937_64 rng(0x6A0515u);
  std::uniform_real_distribution<double> low_q1(0.05, cc.b_upper_q);
  std::uniform_real_distribution<double> low_q2(0.05, cc.a_lower_q);
  std::uniform_real_distribution<double> high_q1(cc.b_lower_q, cc.b_lower_q + 4.0);
  std::uniform_real_distribution<double> high_q2(2.0, 6.0);
  for (int i = 1; i <= 12; ++i) {
    checks.push_back({"random low-regime " + std::to_string(i), low_q1(rng), low_q2(rng)});
  }
  for (int i = 1; i <= 12; ++i) {
    checks.push_back({"random high-regime " + std::to_string(i), high_q1(rng), high_q2(rng)});
  }

  TextTable t;
  t.title = "Two-sided sandwich checks";
  t.columns = {"check", "q1", "q2", "points", "status"};
  bool all_ok = true;
  for (const auto& c : checks) {
    const bool ok = verify_pair_bounds(c.q1, c.q2, config.grid_n);
    all_ok = all_ok && ok;
    t.rows.push_back({c.name, format_number(c.q1, config.precision),
                      format_number(c.q2, config.precision), std::to_string(config.grid_n),
                      ok ? "pass" : "FAIL"});
  }
  return {all_ok ? kExitOk : kExitMismatch, render(config, {t})};
}

namespace {

struct CurveSet {
  std::string file;
  std::vector<double> params;
  FamilyKind kind;
  int fixed_exponent = 0;
};

void sort_unique(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

CommandResult cmd_plot_data(const ReportConfig& config) {
  validate(config);
  const std::filesystem::path dir = config.out_path.value_or("plot-data");
  std::filesystem::create_directories(dir);
  const CriticalConstants cc = critical_constants();

  std::vector<CurveSet> sets;
  {
    CurveSet a{"a_family.csv", {0.6, 1.0, 1.4, cc.a_lower_q, 1.78,
                                solve_minimax_A(config.tol).param0, 1.90, 1.97,
                                cc.a_upper_q, 2.3, 2.8, 3.5},
               FamilyKind::AType, 0};
    sort_unique(a.params);
    sets.push_back(std::move(a));
  }
  {
    CurveSet b{"b_family.csv", {0.5, 0.9, 1.3, cc.b_upper_q, 1.55, 1.62, 1.70,
                                solve_minimax_B(config.tol).param0, cc.b_lower_q,
                                2.1, 2.6, 3.2},
               FamilyKind::BType, 0};
    sort_unique(b.params);
    sets.push_back(std::move(b));
  }
  for (int q = 1; q <= 4; ++q) {
    const auto& r = cc.p_range[q - 1];
    const double width = r.hi - r.lo;
    CurveSet f{"fixed_q" + std::to_string(q) + ".csv",
               {0.25 * r.lo, 0.55 * r.lo, 0.85 * r.lo, r.lo, r.lo + 0.3 * width,
                solve_minimax_fixed_q(q, config.tol).param0, r.lo + 0.9 * width, r.hi,
                1.3 * r.hi, 1.8 * r.hi, 2.5 * r.hi},
               FamilyKind::FixedQ, q};
    sort_unique(f.params);
    sets.push_back(std::move(f));
  }

  TextTable manifest;
  manifest.title = "Plot data";
  manifest.columns = {"file", "curves", "rows"};
  const int n = config.grid_n;
  for (const auto& set : sets) {
    std::ofstream out(dir / set.file, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot open " + (dir / set.file).string());
    }
    out << "x,parameter,value\n";
    int rows = 0;
    for (const double param : set.params) {
      FamilySpec spec = FamilySpec::two_param(1.0, 1.0);
      switch (set.kind) {
        case FamilyKind::AType:
          spec = FamilySpec::a_type(param);
          break;
        case FamilyKind::BType:
          spec = FamilySpec::b_type(param);
          break;
        case FamilyKind::FixedQ:
          spec = FamilySpec::fixed_q(set.fixed_exponent, param);
          break;
        case FamilyKind::TwoParam:
          break;
      }
      for (int i = 1; i <= n; ++i) {
        const double x = kHalfPi * i / (n + 1);
        out << format_number(x, config.precision) << ","
            << format_number(param, config.precision) << ","
            << format_number(phi(spec, x), config.precision) << "\n";
        ++rows;
      }
    }
    manifest.rows.push_back({(dir / set.file).string(),
                             std::to_string(set.params.size()), std::to_string(rows)});
  }
  return {kExitOk, render(config, {manifest})};
}

}  // namespace jordan
