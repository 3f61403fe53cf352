#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "littlewood/ball_geometry.hpp"
#include "littlewood/error.hpp"
#include "littlewood/lemmata.hpp"
#include "littlewood/norm_oracle.hpp"
#include "report_json.hpp"

namespace littlewood::cli {

using nlohmann::json;

namespace {

constexpr double kOracleGapLimit = 1e-6;

std::vector<double> parse_reals(const std::string& text, std::size_t expected) {
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    double v = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (token.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v)) {
      throw std::invalid_argument("'" + token + "' is not a finite real number");
    }
    values.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) + " comma-separated values, got " +
                                std::to_string(values.size()));
  }
  return values;
}

std::string format17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

FormCoefficients parse_coeffs(const std::string& text, CoeffOrder order) {
  const auto v = parse_reals(text, 4);
  if (order == CoeffOrder::Matrix) return FormCoefficients(v[0], v[2], v[1], v[3]);
  return FormCoefficients(v[0], v[1], v[2], v[3]);
}

std::pair<double, double> parse_box(const std::string& text) {
  const auto v = parse_reals(text, 2);
  return {v[0], v[1]};
}

ScalarField parse_field(const std::string& text) {
  if (text == "real") return ScalarField::Real;
  if (text == "complex") return ScalarField::ComplexRealCoeffs;
  throw std::invalid_argument("field must be 'real' or 'complex'");
}

json cmd_norm(const FormCoefficients& form, ScalarField field, bool oracle, int& exit_code) {
  exit_code = kOk;
  const NormResult result = norm(form, field);
  json payload = to_json(result);
  if (oracle) {
    const double reference =
        field == ScalarField::Real ? oracle_norm_real(form) : oracle_norm_complex(form);
    const double gap = std::abs(reference - result.value);
    payload["oracle"] = reference;
    payload["oracle_gap"] = gap;
    if (gap > kOracleGapLimit) exit_code = kSelfCheck;
  }
  return make_envelope("norm",
                       {{"coeffs", to_json(form)}, {"field", std::string(to_string(field))}, {"oracle", oracle}},
                       payload);
}

json cmd_classify(const FormCoefficients& form, double tol) {
  return make_envelope("classify", {{"coeffs", to_json(form)}, {"tol", tol}}, to_json(classify(form, tol)));
}

json cmd_verify_lemmas(std::size_t samples, std::uint64_t seed, double tol, int& exit_code) {
  const LemmaReport report = verify_lemmas(samples, seed, tol);
  exit_code = report.all_passed() ? kOk : kSelfCheck;
  return make_envelope("verify-lemmas", {{"samples", samples}, {"seed", seed}, {"tol", tol}}, to_json(report));
}

void write_scan_csv(const ScanConfig& cfg, std::ostream& os) {
  const ScanGrid grid(cfg);
  os << "a11,a21,a12,a22,norm,ratio\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const FormCoefficients form = grid.point(i);
    if (form.is_zero() && cfg.exclude_zero_forms) continue;
    double n = 0.0, ratio = 0.0;
    if (!form.is_zero()) {
      const RatioReport r = littlewood_ratio(form, cfg.field);
      n = r.norm_used.value;
      ratio = r.ratio;
    }
    os << format17(form.a11()) << ',' << format17(form.a21()) << ',' << format17(form.a12()) << ','
       << format17(form.a22()) << ',' << format17(n) << ',' << format17(ratio) << '\n';
  }
}

json cmd_scan(const ScanConfig& cfg, const std::string& out_path, const std::string& csv_path,
              int& exit_code) {
  exit_code = kOk;
  const ScanReport report = grid_scan(cfg);
  json inputs = to_json(cfg);
  inputs["out"] = out_path.empty() ? json(nullptr) : json(out_path);
  inputs["csv"] = csv_path.empty() ? json(nullptr) : json(csv_path);
  json envelope = make_envelope("scan", inputs, to_json(report));

  if (!out_path.empty()) {
    std::ofstream os(out_path);
    os << envelope.dump(2) << '\n';
    if (!os) exit_code = kIo;
  }
  if (!csv_path.empty() && exit_code == kOk) {
    std::ofstream os(csv_path);
    if (os) write_scan_csv(cfg, os);
    if (!os) exit_code = kIo;
  }
  return envelope;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Operator norms, unit-ball geometry and Littlewood 4/3 constants for 2x2 bilinear forms"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string coeffs_text;
  std::string field_text = "real";
  std::string order_text = "standard";
  bool oracle = false;
  double tol = kDefaultMatchTol;
  double step = 0.1;
  std::string box_text = "-1,1";
  std::string out_path;
  std::string csv_path;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  double lemma_tol = kLemmaBoundaryBand;

  auto add_coeffs = [&](CLI::App* sub) {
    sub->add_option("--coeffs", coeffs_text, "a11,a21,a12,a22 (or a11,a12,a21,a22 with --order matrix)")
        ->required();
    sub->add_option("--order", order_text, "coefficient order")
        ->check(CLI::IsMember({"standard", "matrix"}));
  };

  auto* norm_cmd = app.add_subcommand("norm", "closed-form norm of a form");
  add_coeffs(norm_cmd);
  norm_cmd->add_option("--field", field_text, "real|complex")->check(CLI::IsMember({"real", "complex"}));
  norm_cmd->add_flag("--oracle", oracle, "cross-check against the brute-force oracle");

  auto* classify_cmd = app.add_subcommand("classify", "extreme-point classification in the real unit ball");
  add_coeffs(classify_cmd);
  classify_cmd->add_option("--tol", tol, "coefficientwise matching tolerance")->check(CLI::NonNegativeNumber);

  auto* scan_cmd = app.add_subcommand("scan", "Littlewood ratio over a grid of [lo,hi]^4");
  scan_cmd->add_option("--step", step, "grid spacing");
  scan_cmd->add_option("--box", box_text, "lo,hi");
  scan_cmd->add_option("--field", field_text, "real|complex")->check(CLI::IsMember({"real", "complex"}));
  scan_cmd->add_option("--out", out_path, "write the report envelope to this file");
  scan_cmd->add_option("--csv", csv_path, "write per-point rows to this file");

  auto* lemma_cmd = app.add_subcommand("verify-lemmas", "seeded property run of the sign lemmas");
  lemma_cmd->add_option("--samples", samples, "number of samples");
  lemma_cmd->add_option("--seed", seed, "64-bit seed");
  lemma_cmd->add_option("--tol", lemma_tol, "boundary band")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  int exit_code = kOk;
  json envelope;
  try {
    const CoeffOrder order = order_text == "matrix" ? CoeffOrder::Matrix : CoeffOrder::Standard;
    if (*norm_cmd) {
      envelope = cmd_norm(parse_coeffs(coeffs_text, order), parse_field(field_text), oracle, exit_code);
    } else if (*classify_cmd) {
      envelope = cmd_classify(parse_coeffs(coeffs_text, order), tol);
    } else if (*scan_cmd) {
      ScanConfig cfg;
      cfg.step = step;
      std::tie(cfg.lo, cfg.hi) = parse_box(box_text);
      cfg.field = parse_field(field_text);
      cfg.validate();
      envelope = cmd_scan(cfg, out_path, csv_path, exit_code);
      if (exit_code == kIo) err << "error: could not write scan output\n";
    } else if (*lemma_cmd) {
      if (samples == 0) throw std::invalid_argument("--samples must be positive");
      envelope = cmd_verify_lemmas(samples, seed, lemma_tol, exit_code);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kUsage;
  }

  out << envelope.dump(2) << '\n';
  return exit_code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("littlewood");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace littlewood::cli
