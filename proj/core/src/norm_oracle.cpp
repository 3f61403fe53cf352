#include "littlewood/norm_oracle.hpp"

#include <array>
#include <cmath>

#include "littlewood/error.hpp"

namespace littlewood {

void PhaseGridConfig::validate() const {
  if (coarse_points < 8) throw Error(ErrorKind::InvalidConfig, "coarse_points must be >= 8");
  if (refine_iters < 0) throw Error(ErrorKind::InvalidConfig, "refine_iters must be >= 0");
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidConfig, "tol must be > 0");
}

double oracle_norm_real(const FormCoefficients& form) noexcept {
  constexpr std::array<double, 2> signs{1.0, -1.0};
  double best = 0.0;
  for (double x1 : signs)
    for (double x2 : signs)
      for (double y1 : signs)
        for (double y2 : signs)
          best = std::max(best, std::abs(evaluate_real(form, {x1, x2}, {y1, y2})));
  return best;
}

double oracle_norm_complex(const FormCoefficients& form, const PhaseGridConfig& cfg) {
  cfg.validate();
  const double two_pi = 2.0 * M_PI;
  const double cell = two_pi / cfg.coarse_points;
  auto f = [&](double t) { return boundary_profile(form, t).f_of_t; };

  // Strict '>' keeps the smallest t on ties.
  double best_t = 0.0;
  double best = f(0.0);
  for (int k = 1; k < cfg.coarse_points; ++k) {
    const double t = cell * k;
    const double v = f(t);
    if (v > best) {
      best = v;
      best_t = t;
    }
  }

  // Golden-section search for the maximum on [best_t - cell, best_t + cell].
  // Every evaluated point is a lower bound for the norm, so keep the largest.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_t - cell;
  double hi = best_t + cell;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  best = std::max({best, fc, fd});
  for (int it = 0; it < cfg.refine_iters && (hi - lo) >= cfg.tol; ++it) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
      best = std::max(best, fc);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
      best = std::max(best, fd);
    }
  }
  return best;
}

}  // namespace littlewood
