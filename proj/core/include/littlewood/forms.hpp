#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>

namespace littlewood {

// Coefficients of T(x,y) = a11 x1 y1 + a21 x2 y1 + a12 x1 y2 + a22 x2 y2.
//
// The storage order (a11, a21, a12, a22) is fixed everywhere in the library,
// including serialization and the command line. Construction rejects NaN/Inf,
// so every live FormCoefficients value is finite.
class FormCoefficients {
 public:
  static constexpr std::size_t size = 4;

  FormCoefficients() = default;
  FormCoefficients(double a11, double a21, double a12, double a22);
  explicit FormCoefficients(const std::array<double, 4>& coeffs);

  double a11() const noexcept { return c_[0]; }
  double a21() const noexcept { return c_[1]; }
  double a12() const noexcept { return c_[2]; }
  double a22() const noexcept { return c_[3]; }

  double operator[](std::size_t i) const noexcept { return c_[i]; }
  const std::array<double, 4>& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept {
    return c_[0] == 0.0 && c_[1] == 0.0 && c_[2] == 0.0 && c_[3] == 0.0;
  }

  FormCoefficients scaled(double lambda) const;

  friend bool operator==(const FormCoefficients&, const FormCoefficients&) = default;
  friend auto operator<=>(const FormCoefficients&, const FormCoefficients&) = default;

 private:
  std::array<double, 4> c_{0.0, 0.0, 0.0, 0.0};
};

enum class ScalarField { Real, ComplexRealCoeffs };

std::string_view to_string(ScalarField field) noexcept;

// Which candidate of the closed-form norm attained the maximum.
//   VertexPlus       |a11+a21| + |a12+a22|  (phase difference t = 0)
//   VertexMinus      |a11-a21| + |a12-a22|  (t = pi)
//   InteriorCritical interior stationary point of the boundary profile
enum class NormBranch { VertexPlus, VertexMinus, InteriorCritical };

std::string_view to_string(NormBranch branch) noexcept;

struct NormResult {
  double value = 0.0;
  NormBranch branch = NormBranch::VertexPlus;
  std::optional<double> critical_cos;  // set iff branch == InteriorCritical
};

struct BoundaryProfilePoint {
  double t = 0.0;
  double f_of_t = 0.0;
};

using Vec2 = std::pair<double, double>;

FormCoefficients make_form(double a11, double a21, double a12, double a22);

double evaluate_real(const FormCoefficients& form, Vec2 x, Vec2 y) noexcept;

// |a11+a21| + |a12+a22| and |a11-a21| + |a12-a22|.
double vertex_plus(const FormCoefficients& form) noexcept;
double vertex_minus(const FormCoefficients& form) noexcept;

NormResult norm_real(const FormCoefficients& form) noexcept;

// Norm over complex arguments of a form with real coefficients.
//
// With r = a11 a21 / (a12 a22), the interior candidate only exists when all
// four coefficients are nonzero, r < 0 and |N| <= |D| for
//   N = r^2 (a12^2 + a22^2) - (a11^2 + a21^2),
//   D = 2 a11 a21 (1 - r),
// in which case cos t0 = N / D and the candidate is the boundary profile at t0.
// Otherwise the maximum is attained at one of the two vertices.
NormResult norm_complex_real_coeffs(const FormCoefficients& form);

NormResult norm(const FormCoefficients& form, ScalarField field);

// f(t) = sqrt(a11^2 + a21^2 + 2 a11 a21 cos t) + sqrt(a12^2 + a22^2 + 2 a12 a22 cos t)
//
// Radicands that round below zero are clamped to 0 as long as the dip is
// below 1e-12 relative to the radicand's scale; larger dips throw
// NegativeRadicand (they cannot occur for finite input).
BoundaryProfilePoint boundary_profile(const FormCoefficients& form, double t);

// Same formula, parameterized by c = cos t.
double boundary_profile_at_cos(const FormCoefficients& form, double cos_t);

// (sum |a_ij|^p)^(1/p); throws InvalidExponent when p < 1.
double coeff_lp_norm(const FormCoefficients& form, double p);

}  // namespace littlewood
