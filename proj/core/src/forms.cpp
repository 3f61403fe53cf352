#include "littlewood/forms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "littlewood/error.hpp"

namespace littlewood {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonFiniteInput: return "NonFiniteInput";
    case ErrorKind::InvalidExponent: return "InvalidExponent";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::NegativeRadicand: return "NegativeRadicand";
    case ErrorKind::IsExtreme: return "IsExtreme";
    case ErrorKind::OutsideBall: return "OutsideBall";
    case ErrorKind::NotExtremePoint: return "NotExtremePoint";
    case ErrorKind::ZeroForm: return "ZeroForm";
    case ErrorKind::UncoveredCase: return "UncoveredCase";
    case ErrorKind::InvalidRegion: return "InvalidRegion";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
  }
  return "Unknown";
}

FormCoefficients::FormCoefficients(double a11, double a21, double a12, double a22)
    : c_{a11, a21, a12, a22} {
  for (double v : c_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::NonFiniteInput, "form coefficients must be finite");
    }
  }
}

FormCoefficients::FormCoefficients(const std::array<double, 4>& coeffs)
    : FormCoefficients(coeffs[0], coeffs[1], coeffs[2], coeffs[3]) {}

FormCoefficients FormCoefficients::scaled(double lambda) const {
  return FormCoefficients(lambda * c_[0], lambda * c_[1], lambda * c_[2], lambda * c_[3]);
}

std::string_view to_string(ScalarField field) noexcept {
  return field == ScalarField::Real ? "real" : "complex";
}

std::string_view to_string(NormBranch branch) noexcept {
  switch (branch) {
    case NormBranch::VertexPlus: return "VertexPlus";
    case NormBranch::VertexMinus: return "VertexMinus";
    case NormBranch::InteriorCritical: return "InteriorCritical";
  }
  return "Unknown";
}

FormCoefficients make_form(double a11, double a21, double a12, double a22) {
  return FormCoefficients(a11, a21, a12, a22);
}

double evaluate_real(const FormCoefficients& form, Vec2 x, Vec2 y) noexcept {
  return form.a11() * x.first * y.first + form.a21() * x.second * y.first +
         form.a12() * x.first * y.second + form.a22() * x.second * y.second;
}

double vertex_plus(const FormCoefficients& form) noexcept {
  return std::abs(form.a11() + form.a21()) + std::abs(form.a12() + form.a22());
}

double vertex_minus(const FormCoefficients& form) noexcept {
  return std::abs(form.a11() - form.a21()) + std::abs(form.a12() - form.a22());
}

NormResult norm_real(const FormCoefficients& form) noexcept {
  const double plus = vertex_plus(form);
  const double minus = vertex_minus(form);
  if (minus > plus) return {minus, NormBranch::VertexMinus, std::nullopt};
  return {plus, NormBranch::VertexPlus, std::nullopt};
}

namespace {

double clamped_sqrt(double radicand, double scale) {
  if (radicand >= 0.0) return std::sqrt(radicand);
  if (radicand < -1e-12 * scale) {
    throw Error(ErrorKind::NegativeRadicand,
                "boundary profile radicand " + std::to_string(radicand) + " below rounding band");
  }
  return 0.0;
}

}  // namespace

double boundary_profile_at_cos(const FormCoefficients& form, double cos_t) {
  const double a11 = form.a11(), a21 = form.a21(), a12 = form.a12(), a22 = form.a22();
  const double s1 = a11 * a11 + a21 * a21;
  const double s2 = a12 * a12 + a22 * a22;
  return clamped_sqrt(s1 + 2.0 * a11 * a21 * cos_t, s1) +
         clamped_sqrt(s2 + 2.0 * a12 * a22 * cos_t, s2);
}

BoundaryProfilePoint boundary_profile(const FormCoefficients& form, double t) {
  if (!std::isfinite(t)) {
    throw Error(ErrorKind::NonFiniteInput, "profile phase must be finite");
  }
  // cos(0) and cos(pi) are not exactly +-1 for every libm; pin the vertices so
  // that f(0) and f(pi) reproduce the vertex candidates bit for bit.
  if (t == 0.0) return {t, vertex_plus(form)};
  if (std::abs(t) == M_PI) return {t, vertex_minus(form)};
  return {t, boundary_profile_at_cos(form, std::cos(t))};
}

NormResult norm_complex_real_coeffs(const FormCoefficients& form) {
  NormResult best = norm_real(form);

  const double a11 = form.a11(), a21 = form.a21(), a12 = form.a12(), a22 = form.a22();
  if (a11 == 0.0 || a21 == 0.0 || a12 == 0.0 || a22 == 0.0) return best;

  const double p1 = a11 * a21;
  const double p2 = a12 * a22;
  const double r = p1 / p2;
  if (!(r < 0.0)) return best;

  const double numer = r * r * (a12 * a12 + a22 * a22) - (a11 * a11 + a21 * a21);
  const double denom = 2.0 * p1 * (1.0 - r);
  // r < 0 keeps 1 - r > 1 and p1 != 0, so denom never vanishes here.
  if (std::abs(numer) > std::abs(denom)) return best;

  const double c = std::clamp(numer / denom, -1.0, 1.0);
  const double interior = boundary_profile_at_cos(form, c);
  if (interior > best.value) {
    best = NormResult{interior, NormBranch::InteriorCritical, c};
  }
  return best;
}

NormResult norm(const FormCoefficients& form, ScalarField field) {
  return field == ScalarField::Real ? norm_real(form) : norm_complex_real_coeffs(form);
}

double coeff_lp_norm(const FormCoefficients& form, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw Error(ErrorKind::InvalidExponent, "lp exponent must be a finite p >= 1");
  }
  if (p == 1.0) {
    double sum = 0.0;
    for (double v : form.coeffs()) sum += std::abs(v);
    return sum;
  }
  // Factor out the largest magnitude so the powers neither overflow nor underflow.
  double scale = 0.0;
  for (double v : form.coeffs()) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (double v : form.coeffs()) sum += std::pow(std::abs(v) / scale, p);
  return scale * std::pow(sum, 1.0 / p);
}

}  // namespace littlewood
