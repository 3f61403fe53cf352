#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "littlewood/forms.hpp"
#include "littlewood/littlewood_opt.hpp"

namespace littlewood::cli {

// Exit-code contract of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kIo = 3,
  kSelfCheck = 4,
};

enum class CoeffOrder { Standard, Matrix };

// "a11,a21,a12,a22" (Standard) or "a11,a12,a21,a22" (Matrix); throws
// std::invalid_argument on anything but four finite comma-separated reals.
FormCoefficients parse_coeffs(const std::string& text, CoeffOrder order);

// "lo,hi"
std::pair<double, double> parse_box(const std::string& text);

ScalarField parse_field(const std::string& text);

nlohmann::json cmd_norm(const FormCoefficients& form, ScalarField field, bool oracle, int& exit_code);
nlohmann::json cmd_classify(const FormCoefficients& form, double tol);
nlohmann::json cmd_verify_lemmas(std::size_t samples, std::uint64_t seed, double tol, int& exit_code);

// Scan plus optional outputs; exit_code becomes kIo when a file cannot be written.
nlohmann::json cmd_scan(const ScanConfig& cfg, const std::string& out_path,
                        const std::string& csv_path, int& exit_code);

// Writes one CSV row per scanned grid point: a11,a21,a12,a22,norm,ratio.
void write_scan_csv(const ScanConfig& cfg, std::ostream& os);

// Full command line (argv[0] is the program name). Writes the JSON envelope to
// `out`, diagnostics to `err`, and returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace littlewood::cli
