#include "littlewood/ball_geometry.hpp"

#include <algorithm>
#include <cmath>

#include "littlewood/error.hpp"

namespace littlewood {

std::string_view to_string(ExtremeKind kind) noexcept {
  return kind == ExtremeKind::Monomial ? "Monomial" : "HalfForm";
}

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::Extreme: return "Extreme";
    case Verdict::NotExtreme: return "NotExtreme";
    case Verdict::OutsideBall: return "OutsideBall";
  }
  return "Unknown";
}

namespace {

using Direction = std::array<double, 4>;

std::vector<ExtremePoint> build_extreme_points() {
  std::vector<ExtremePoint> points;
  points.reserve(16);
  for (std::size_t slot = 0; slot < 4; ++slot) {
    for (int sign : {1, -1}) {
      std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};
      c[slot] = sign;
      std::array<int, 4> pattern{1, 1, 1, 1};
      pattern[slot] = sign;
      points.push_back({FormCoefficients(c), ExtremeKind::Monomial, pattern});
    }
  }
  for (int mask = 0; mask < 16; ++mask) {
    // Bit 3 is the leading slot; a set bit means +1, so mask order is
    // lexicographic order with -1 < +1.
    std::array<int, 4> pattern{};
    int parity = 1;
    for (int slot = 0; slot < 4; ++slot) {
      pattern[slot] = (mask >> (3 - slot)) & 1 ? 1 : -1;
      parity *= pattern[slot];
    }
    if (parity != -1) continue;
    points.push_back({FormCoefficients(0.5 * pattern[0], 0.5 * pattern[1], 0.5 * pattern[2],
                                       0.5 * pattern[3]),
                      ExtremeKind::HalfForm, pattern});
  }
  return points;
}

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

double ball_radius(const FormCoefficients& form) { return std::max(1.0, norm_real(form).value); }

// A = T + eps v, B = T - eps v, with B = 2T - A as a second attempt when the
// plain midpoint does not reproduce T bit for bit.
std::optional<SplitWitness> try_direction(const FormCoefficients& form, const Direction& v,
                                          double eps) {
  if (!(eps > 0.0)) return std::nullopt;
  std::array<double, 4> a{}, b{}, b_alt{};
  for (std::size_t i = 0; i < 4; ++i) {
    a[i] = form[i] + eps * v[i];
    b[i] = form[i] - eps * v[i];
    b_alt[i] = 2.0 * form[i] - a[i];
  }
  SplitWitness w{FormCoefficients(a), FormCoefficients(b), eps};
  if (is_valid_witness(w, form)) return w;
  w.b = FormCoefficients(b_alt);
  if (is_valid_witness(w, form)) return w;
  return std::nullopt;
}

// Facet normals of the real unit ball: ||T|| = max_s |s . a| over these four.
constexpr std::array<Direction, 4> kFacets{{
    {1.0, 1.0, 1.0, 1.0},
    {1.0, 1.0, -1.0, -1.0},
    {1.0, -1.0, 1.0, -1.0},
    {1.0, -1.0, -1.0, 1.0},
}};

// Largest t with T +- t v inside the ball of the given radius.
double max_feasible_step(const FormCoefficients& form, const Direction& v, double radius) {
  double step = INFINITY;
  for (const auto& s : kFacets) {
    double sv = 0.0, st = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      sv += s[i] * v[i];
      st += s[i] * form[i];
    }
    if (sv != 0.0) step = std::min(step, (radius - std::abs(st)) / std::abs(sv));
  }
  return step;
}

// Steps shorter than this are rounding noise on an active facet, not room to move.
constexpr double kMinStep = 1e-13;

// eps is capped at half the exact feasible step and then halved until the
// witness verifies bit for bit; the norm slack only absorbs rounding.
std::optional<SplitWitness> witness_along(const FormCoefficients& form, const Direction& v,
                                          double eps, double radius) {
  const double step = max_feasible_step(form, v, radius);
  if (!(step > kMinStep * radius)) return std::nullopt;
  eps = std::min(eps, step / 2.0);
  for (int halvings = 0; halvings <= 60; ++halvings, eps *= 0.5) {
    if (auto w = try_direction(form, v, eps)) return w;
  }
  return std::nullopt;
}

Direction unit(std::size_t i, double s = 1.0) {
  Direction v{0.0, 0.0, 0.0, 0.0};
  v[i] = s;
  return v;
}

// Perturbation chosen from the zero/sign pattern of the form.
std::optional<std::pair<Direction, double>> case_direction(const FormCoefficients& form,
                                                           double radius) {
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < 4; ++i)
    if (form[i] != 0.0) nonzero.push_back(i);

  switch (nonzero.size()) {
    case 0:
      return std::pair{unit(0), radius / 2.0};
    case 1: {
      const std::size_t i = nonzero[0];
      return std::pair{unit(i), (radius - std::abs(form[i])) / 2.0};
    }
    case 2: {
      const std::size_t i = nonzero[0], j = nonzero[1];
      Direction v{0.0, 0.0, 0.0, 0.0};
      v[i] = sgn(form[i]);
      v[j] = -sgn(form[j]);
      return std::pair{v, std::min(std::abs(form[i]), std::abs(form[j])) / 2.0};
    }
    default:
      break;
  }

  if (nonzero.size() == 4) {
    const double m = std::abs(form[0]);
    const bool equal = std::all_of(form.coeffs().begin(), form.coeffs().end(),
                                   [m](double v) { return std::abs(v) == m; });
    const bool odd = sgn(form[0]) * sgn(form[1]) * sgn(form[2]) * sgn(form[3]) < 0.0;
    if (equal && odd) {
      const double bound = radius / 2.0 - m;
      if (!(bound > 0.0)) return std::nullopt;
      return std::pair{Direction{sgn(form[0]), sgn(form[1]), sgn(form[2]), sgn(form[3])},
                       bound / 2.0};
    }
  }

  // Perturb the complete pair (a11, a21) unless one of them is zero, in which
  // case (a12, a22) is complete. An opposite-sign move inside the pair leaves
  // |a11 + a21| + |a12 + a22| fixed and moves only |a11 - a21| + |a12 - a22|
  // (and vice versa), so the smaller candidate has room to grow.
  const bool first_pair = form[0] != 0.0 && form[1] != 0.0;
  const std::size_t p = first_pair ? 0 : 2;
  const double plus = vertex_plus(form);
  const double minus = vertex_minus(form);
  Direction v{0.0, 0.0, 0.0, 0.0};
  if (minus <= plus) {
    if (!(minus < radius)) return std::nullopt;
    v[p] = 1.0;
    v[p + 1] = -1.0;
    return std::pair{v, (radius - minus) / 4.0};
  }
  if (!(plus < radius)) return std::nullopt;
  v[p] = 1.0;
  v[p + 1] = 1.0;
  return std::pair{v, (radius - plus) / 4.0};
}

std::vector<Direction> fallback_directions() {
  std::vector<Direction> dirs;
  for (const auto& e : extreme_points()) {
    if (e.kind == ExtremeKind::HalfForm) {
      dirs.push_back({1.0 * e.sign_pattern[0], 1.0 * e.sign_pattern[1], 1.0 * e.sign_pattern[2],
                      1.0 * e.sign_pattern[3]});
    }
  }
  // The facet normals are mutually orthogonal, so whenever fewer than four
  // facets are active one of the inactive normals is a feasible direction.
  for (const auto& s : kFacets) dirs.push_back(s);
  for (std::size_t i = 0; i < 4; ++i) dirs.push_back(unit(i));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      for (double s : {1.0, -1.0}) {
        Direction v = unit(i);
        v[j] = s;
        dirs.push_back(v);
      }
    }
  }
  return dirs;
}

}  // namespace

const std::vector<ExtremePoint>& extreme_points() {
  static const std::vector<ExtremePoint> points = build_extreme_points();
  return points;
}

std::optional<ExtremePoint> match_extreme_point(const FormCoefficients& form, double tol) {
  for (const auto& e : extreme_points()) {
    bool close = true;
    for (std::size_t i = 0; i < 4 && close; ++i) close = std::abs(form[i] - e.coeffs[i]) <= tol;
    if (close) return e;
  }
  return std::nullopt;
}

bool is_valid_witness(const SplitWitness& witness, const FormCoefficients& form) {
  if (witness.a == witness.b) return false;
  for (std::size_t i = 0; i < 4; ++i) {
    if ((witness.a[i] + witness.b[i]) * 0.5 != form[i]) return false;
  }
  const double limit = ball_radius(form) + kWitnessNormSlack;
  return norm_real(witness.a).value <= limit && norm_real(witness.b).value <= limit;
}

SplitWitness split_witness(const FormCoefficients& form) {
  const double n = norm_real(form).value;
  if (n > 1.0 + kWitnessNormSlack) {
    throw Error(ErrorKind::OutsideBall, "form lies outside the closed unit ball");
  }
  if (match_extreme_point(form, 0.0)) {
    throw Error(ErrorKind::IsExtreme, "form is an extreme point of the unit ball");
  }
  const double radius = std::max(1.0, n);

  if (auto step = case_direction(form, radius)) {
    if (auto w = witness_along(form, step->first, step->second, radius)) return *w;
  }
  static const std::vector<Direction> fallback = fallback_directions();
  for (const auto& v : fallback) {
    if (auto w = witness_along(form, v, INFINITY, radius)) return *w;
  }
  throw Error(ErrorKind::IsExtreme, "no splitting direction exists for this form");
}

ClassificationResult classify(const FormCoefficients& form, double tol) {
  if (!(tol >= 0.0)) throw Error(ErrorKind::InvalidConfig, "tolerance must be >= 0");
  ClassificationResult result;
  result.norm = norm_real(form).value;
  if (result.norm > 1.0 + tol) {
    result.verdict = Verdict::OutsideBall;
    return result;
  }
  if (auto e = match_extreme_point(form, tol)) {
    result.verdict = Verdict::Extreme;
    result.matched = *e;
    return result;
  }
  result.verdict = Verdict::NotExtreme;
  result.witness = split_witness(form);
  return result;
}

DualFunctional::DualFunctional(const std::array<double, 4>& coeffs)
    : c_(coeffs), dual_norm_(littlewood::dual_norm(coeffs)) {}

double DualFunctional::operator()(const FormCoefficients& form) const noexcept {
  return c_[0] * form[0] + c_[1] * form[1] + c_[2] * form[2] + c_[3] * form[3];
}

double dual_norm(const std::array<double, 4>& functional) {
  double best = 0.0;
  for (const auto& e : extreme_points()) {
    double v = 0.0;
    for (std::size_t i = 0; i < 4; ++i) v += functional[i] * e.coeffs[i];
    best = std::max(best, std::abs(v));
  }
  return best;
}

DualFunctional exposing_functional(const ExtremePoint& point) {
  const auto match = match_extreme_point(point.coeffs, 0.0);
  if (!match || match->kind != point.kind || match->sign_pattern != point.sign_pattern) {
    throw Error(ErrorKind::NotExtremePoint, "not one of the 16 extreme points");
  }
  std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};
  if (point.kind == ExtremeKind::Monomial) {
    for (std::size_t i = 0; i < 4; ++i) c[i] = point.coeffs[i];  // +-1 in the monomial's slot
  } else {
    for (std::size_t i = 0; i < 4; ++i) c[i] = 0.5 * point.sign_pattern[i];
  }
  return DualFunctional(c);
}

}  // namespace littlewood
