#pragma once

#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

#include "littlewood/forms.hpp"

namespace littlewood {

inline constexpr double kLittlewoodExponent = 4.0 / 3.0;

// (sum |a_ij|^(4/3))^(3/4) / ||T||, the quantity whose supremum is the optimal
// constant of the 4/3 inequality for 2x2 forms. Invariant under T -> lambda T.
struct RatioReport {
  double ratio = 0.0;
  double lp_norm = 0.0;
  ScalarField field = ScalarField::Real;
  NormResult norm_used;
};

// Throws ZeroForm for the zero form.
RatioReport littlewood_ratio(const FormCoefficients& form, ScalarField field);

// Real-field maximizers of the ratio: all |a_ij| equal (relative to the
// largest, within tol), nonzero, and an odd number of negative entries.
bool is_real_optimizer(const FormCoefficients& form, double tol);

// Sign pattern of p = a11 a21 and q = a12 a22, with exact zero tests.
enum class CaseLabel {
  Case1_ZeroProduct,      // p == 0 or q == 0
  Case2_PosPos,           // p > 0, q > 0
  Case3_NegNeg,           // p < 0, q < 0
  Case4_PosNegBalanced,   // p > 0, q < 0, p + q == 0
  Case5_NegPosBalanced,   // p < 0, q > 0, p + q == 0
  Uncovered,              // opposite signs with p + q != 0
};

std::string_view to_string(CaseLabel label) noexcept;

// Relative resolution of the balance test |p + q| <= tol * max(|p|, |q|).
inline constexpr double kBalanceRelTol = 4.0 * std::numeric_limits<double>::epsilon();

CaseLabel classify_complex_case(const FormCoefficients& form);

// Rectangular grid over [lo, hi]^4 with the given spacing.
struct ScanConfig {
  double step = 0.1;
  double lo = -1.0;
  double hi = 1.0;
  ScalarField field = ScalarField::ComplexRealCoeffs;
  bool exclude_zero_forms = true;

  // Throws InvalidConfig unless step > 0, lo < hi and (hi - lo) / step is an
  // integer within 1e-12.
  void validate() const;
};

// Enumerates grid points in lexicographic (a11, a21, a12, a22) index order.
//
// Axis values are computed from an integer index with a single rounding:
// k / (1/step) when 1/step is an integer (so 0.1-grids are the correctly
// rounded decimals), k * step otherwise, and lo + i * step when lo is not
// itself on the step lattice.
class ScanGrid {
 public:
  explicit ScanGrid(const ScanConfig& cfg);

  std::size_t points_per_axis() const noexcept { return axis_.size(); }
  std::size_t size() const noexcept;
  double axis_value(std::size_t i) const noexcept { return axis_[i]; }
  FormCoefficients point(std::size_t index) const;

 private:
  std::vector<double> axis_;
};

struct ArgmaxEntry {
  FormCoefficients form;
  double ratio = 0.0;
};

struct ScanReport {
  double max_ratio = 0.0;
  std::vector<ArgmaxEntry> argmax;  // sorted by coefficients, lexicographically
  std::size_t points_scanned = 0;
  ScanConfig config;
};

inline constexpr double kArgmaxTol = 1e-9;

// Ratio at every grid point (the zero form is skipped when excluded, otherwise
// it is counted with ratio 0). Runs on the worker pool; the report does not
// depend on the number of workers.
ScanReport grid_scan(const ScanConfig& cfg);

struct CaseBoundReport {
  CaseLabel label = CaseLabel::Case1_ZeroProduct;
  double worst_ratio = 0.0;
  FormCoefficients worst_form;
  std::size_t samples = 0;
};

// Draws `samples` forms from [-1,1]^4 conditioned on `label` and returns the
// largest complex-field ratio seen. Cases 4 and 5 draw a11, a21, a12 and solve
// a22 = -a11 a21 / a12, rejecting draws with |a22| > 1.
//
// Throws UncoveredCase for CaseLabel::Uncovered and InvalidConfig for
// samples == 0.
CaseBoundReport verify_case_bound(CaseLabel label, std::size_t samples, std::uint64_t seed);

}  // namespace littlewood
