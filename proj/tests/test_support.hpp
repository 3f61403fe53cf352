#pragma once

// Test-only reference computations. Nothing here calls the closed forms under
// test, so agreement is evidence rather than tautology.

#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "littlewood/forms.hpp"

namespace littlewood::testing {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double unif(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

inline FormCoefficients random_form(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
  return FormCoefficients(unif(rng, lo, hi), unif(rng, lo, hi), unif(rng, lo, hi), unif(rng, lo, hi));
}

// sup |T(x, y)| over the corners of the real square, written as the raw sum.
inline double brute_real_norm(const FormCoefficients& t) {
  double best = 0.0;
  for (int mask = 0; mask < 16; ++mask) {
    const double x1 = mask & 1 ? -1 : 1, x2 = mask & 2 ? -1 : 1;
    const double y1 = mask & 4 ? -1 : 1, y2 = mask & 8 ? -1 : 1;
    best = std::max(best, std::abs(t.a11() * x1 * y1 + t.a21() * x2 * y1 + t.a12() * x1 * y2 +
                                   t.a22() * x2 * y2));
  }
  return best;
}

// |a11 + a21 e^{i theta}| + |a12 + a22 e^{i theta}| via std::complex.
inline double phase_value(const FormCoefficients& t, double theta) {
  const std::complex<double> u = std::polar(1.0, theta);
  return std::abs(t.a11() + t.a21() * u) + std::abs(t.a12() + t.a22() * u);
}

// Dense scan in theta followed by ternary refinement in the best cell.
inline double brute_complex_norm(const FormCoefficients& t, int samples = 20000) {
  const double h = 2.0 * M_PI / samples;
  int best_k = 0;
  double best = phase_value(t, 0.0);
  for (int k = 1; k < samples; ++k) {
    const double v = phase_value(t, h * k);
    if (v > best) {
      best = v;
      best_k = k;
    }
  }
  double lo = h * (best_k - 1), hi = h * (best_k + 1);
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (phase_value(t, m1) < phase_value(t, m2)) lo = m1; else hi = m2;
  }
  return std::max(best, phase_value(t, 0.5 * (lo + hi)));
}

// Full two-phase sup of |T(z, w)| with |z_i| = |w_j| = 1 on a coarse grid;
// only used as a lower-bound sanity check against the one-phase reduction.
inline double two_phase_lower_bound(const FormCoefficients& t, int samples = 256) {
  double best = 0.0;
  for (int i = 0; i < samples; ++i) {
    const std::complex<double> z2 = std::polar(1.0, 2.0 * M_PI * i / samples);
    for (int j = 0; j < samples; ++j) {
      const std::complex<double> w2 = std::polar(1.0, 2.0 * M_PI * j / samples);
      best = std::max(best, std::abs(t.a11() + t.a21() * z2 + t.a12() * w2 + t.a22() * z2 * w2));
    }
  }
  return best;
}

inline double lp_4_3(const FormCoefficients& t) {
  double s = 0.0;
  for (double v : t.coeffs()) s += std::pow(std::abs(v), 4.0 / 3.0);
  return std::pow(s, 0.75);
}

}  // namespace littlewood::testing
