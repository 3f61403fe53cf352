#include "littlewood/lemmata.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>

#include "littlewood/error.hpp"
#include "littlewood/parallel.hpp"

namespace littlewood {

SignedQuadruple::SignedQuadruple(double a, double b, double c, double d)
    : a_(a), b_(b), c_(c), d_(d) {
  for (double v : {a, b, c, d}) {
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidRegion, "quadruple must be finite");
  }
  if (!(a > 0.0 && b > 0.0 && c > 0.0 && d < 0.0)) {
    throw Error(ErrorKind::InvalidRegion, "requires a, b, c > 0 and d < 0");
  }
}

Equivalence maxpos_equiv(const SignedQuadruple& q) {
  const double a = q.a(), b = q.b(), c = q.c(), d = q.d();
  return {a + b + std::abs(c + d) >= std::abs(a - b) + c - d,
          (a >= -d && b >= -d && c >= -d) || (a >= c && b >= c && -d >= c)};
}

Equivalence maxneg_equiv(const SignedQuadruple& q) {
  const double a = q.a(), b = q.b(), c = q.c(), d = q.d();
  return {std::abs(a - b) + c - d >= a + b + std::abs(c + d),
          (a >= b && c >= b && -d >= b) || (b >= a && c >= a && -d >= a)};
}

bool maxig_check(const SignedQuadruple& q) {
  const double a = q.a(), b = q.b(), c = q.c(), d = q.d();
  const double lhs = std::abs(a + b) + std::abs(c + d);
  const double rhs = std::abs(a - b) + std::abs(c - d);
  if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, lhs) || a == b) {
    throw Error(ErrorKind::HypothesisNotMet, "maxig needs |a+b|+|c+d| = |a-b|+|c-d| and a != b");
  }
  return std::abs(b + d) <= 1e-9 || std::abs(a + d) <= 1e-9;
}

namespace {

constexpr int kMonomaxGrid = 10000;
static_assert(kMonomaxGrid % 4 == 0);

// Exact -1 and +1 at the ends.
const std::array<double, kMonomaxGrid>& monomax_grid() {
  static const auto grid = [] {
    std::array<double, kMonomaxGrid> t{};
    constexpr double denom = kMonomaxGrid - 1;
    for (int i = 0; i < kMonomaxGrid; ++i) t[i] = (2.0 * i - denom) / denom;
    return t;
  }();
  return grid;
}

}  // namespace

bool monomax_check(double a, double b, double c, double d) {
  const auto& grid = monomax_grid();
  // Four independent running maxima; a single accumulator serializes the loop.
  double m0 = 0.0, m1 = 0.0, m2 = 0.0, m3 = 0.0;
  for (int i = 0; i < kMonomaxGrid; i += 4) {
    const double f0 = std::abs(a + b * grid[i]) + std::abs(c + d * grid[i]);
    const double f1 = std::abs(a + b * grid[i + 1]) + std::abs(c + d * grid[i + 1]);
    const double f2 = std::abs(a + b * grid[i + 2]) + std::abs(c + d * grid[i + 2]);
    const double f3 = std::abs(a + b * grid[i + 3]) + std::abs(c + d * grid[i + 3]);
    m0 = f0 > m0 ? f0 : m0;
    m1 = f1 > m1 ? f1 : m1;
    m2 = f2 > m2 ? f2 : m2;
    m3 = f3 > m3 ? f3 : m3;
  }
  const double best = std::max(std::max(m0, m1), std::max(m2, m3));
  const double ends = std::max(std::abs(a - b) + std::abs(c - d), std::abs(a + b) + std::abs(c + d));
  return best <= ends + 1e-12;
}

Equivalence tec01_equiv(const SignedQuadruple& q) {
  const double a = q.a(), b = q.b(), c = q.c(), d = q.d();
  const double k = (a * b) / (c * d);
  const bool lhs = std::abs(k * k * (c * c + d * d) - (a * a + b * b)) <= 2.0 * a * b * (1.0 - k);
  const bool rhs = std::abs((c * d) / (a * b) * (a - b)) <= c - d && std::abs(k * (c + d)) <= a + b;
  return {lhs, rhs};
}

namespace {

double rel_gap(double x, double y, double scale) {
  return scale > 0.0 ? std::abs(x - y) / scale : 0.0;
}

double pairwise_gap(std::initializer_list<std::pair<double, double>> pairs) {
  double gap = INFINITY;
  for (const auto& [x, y] : pairs) gap = std::min(gap, rel_gap(x, y, std::max(std::abs(x), std::abs(y))));
  return gap;
}

}  // namespace

double maxpos_boundary_gap(const SignedQuadruple& q) {
  const double a = q.a(), b = q.b(), c = q.c(), d = q.d();
  const double ineq = rel_gap(a + b + std::abs(c + d), std::abs(a - b) + c - d, a + b + c - d);
  return std::min(ineq, pairwise_gap({{a, -d}, {b, -d}, {c, -d}, {a, c}, {b, c}}));
}

double maxneg_boundary_gap(const SignedQuadruple& q) {
  const double a = q.a(), b = q.b(), c = q.c(), d = q.d();
  const double ineq = rel_gap(std::abs(a - b) + c - d, a + b + std::abs(c + d), a + b + c - d);
  return std::min(ineq, pairwise_gap({{a, b}, {c, b}, {-d, b}, {c, a}, {-d, a}}));
}

double tec01_boundary_gap(const SignedQuadruple& q) {
  const double a = q.a(), b = q.b(), c = q.c(), d = q.d();
  const double k = (a * b) / (c * d);
  const double big = k * k * (c * c + d * d);
  const double small = a * a + b * b;
  const double bound = 2.0 * a * b * (1.0 - k);
  const double g1 = rel_gap(std::abs(big - small), bound, std::max({big, small, bound}));
  const double r1 = std::abs((c * d) / (a * b)) * std::max(a, b);
  const double g2 = rel_gap(std::abs((c * d) / (a * b) * (a - b)), c - d, std::max(r1, c - d));
  const double r2 = std::abs(k) * std::max(c, -d);
  const double g3 = rel_gap(std::abs(k * (c + d)), a + b, std::max(r2, a + b));
  return std::min({g1, g2, g3});
}

bool LemmaReport::all_passed() const noexcept {
  return std::all_of(lemmas.begin(), lemmas.end(), [](const LemmaTally& t) { return t.failed() == 0; });
}

namespace {

constexpr std::size_t kMaxCounterexamples = 10;
enum Slot { kMaxpos, kMaxneg, kCoverage, kTec01, kMaxig, kMonomax, kSlots };

double log_uniform(std::mt19937_64& rng) { return std::pow(10.0, uniform(rng, -3.0, 3.0)); }

double sign_draw(std::mt19937_64& rng) { return (rng() >> 63) ? -1.0 : 1.0; }

void record(LemmaTally& tally, bool ok, std::initializer_list<double> sample) {
  ++tally.checked;
  if (ok) {
    ++tally.passed;
  } else if (tally.counterexamples.size() < kMaxCounterexamples) {
    tally.counterexamples.emplace_back(sample);
  }
}

std::vector<LemmaTally> empty_tallies() {
  std::vector<LemmaTally> t(kSlots);
  t[kMaxpos].name = "maxpos";
  t[kMaxneg].name = "maxneg";
  t[kCoverage].name = "maxpos_or_maxneg";
  t[kTec01].name = "tec01";
  t[kTec01].note =
      "multiplier read as 1 - ab/(cd); rhs compares against c - d, which is positive since d < 0";
  t[kMaxig].name = "maxig";
  t[kMaxig].note = "sampled on the c >= -d branch; outside it the conclusion can fail, e.g. (2, 1, 1, -5)";
  t[kMonomax].name = "monomax";
  return t;
}

}  // namespace

LemmaReport verify_lemmas(std::size_t samples, std::uint64_t seed, double band) {
  if (samples == 0) throw Error(ErrorKind::InvalidConfig, "samples must be > 0");

  auto partials = run_blocks(samples, 64, [&](const BlockRange& range) {
    auto rng = block_stream(seed, range.index);
    std::vector<LemmaTally> t = empty_tallies();
    for (std::size_t i = range.begin; i < range.end; ++i) {
      const SignedQuadruple q(log_uniform(rng), log_uniform(rng), log_uniform(rng), -log_uniform(rng));
      const auto sample = {q.a(), q.b(), q.c(), q.d()};

      const Equivalence pos = maxpos_equiv(q);
      const Equivalence neg = maxneg_equiv(q);
      record(t[kCoverage], pos.lhs || neg.lhs, sample);
      if (maxpos_boundary_gap(q) < band) ++t[kMaxpos].excluded;
      else record(t[kMaxpos], pos.holds(), sample);
      if (maxneg_boundary_gap(q) < band) ++t[kMaxneg].excluded;
      else record(t[kMaxneg], neg.holds(), sample);
      if (tec01_boundary_gap(q) < band) ++t[kTec01].excluded;
      else record(t[kTec01], tec01_equiv(q).holds(), sample);

      // maxig: smallest draw plays -d and min(a, b); the rest fill the other
      // of a, b and c in random order, so c >= -d.
      std::array<double, 3> m{log_uniform(rng), log_uniform(rng), log_uniform(rng)};
      std::sort(m.begin(), m.end());
      const bool swap_ab = rng() >> 63;
      const bool swap_rest = rng() >> 63;
      const double other = swap_rest ? m[2] : m[1];
      const double c = swap_rest ? m[1] : m[2];
      const double a = swap_ab ? other : m[0];
      const double b = swap_ab ? m[0] : other;
      try {
        const SignedQuadruple g(a, b, c, -m[0]);
        record(t[kMaxig], maxig_check(g), {a, b, c, -m[0]});
      } catch (const Error&) {
        ++t[kMaxig].excluded;
      }

      const double ma = sign_draw(rng) * log_uniform(rng);
      const double mb = sign_draw(rng) * log_uniform(rng);
      const double mc = sign_draw(rng) * log_uniform(rng);
      const double md = sign_draw(rng) * log_uniform(rng);
      record(t[kMonomax], monomax_check(ma, mb, mc, md), {ma, mb, mc, md});
    }
    return t;
  });

  LemmaReport report;
  report.samples = samples;
  report.seed = seed;
  report.band = band;
  report.lemmas = empty_tallies();
  for (const auto& part : partials) {
    for (std::size_t s = 0; s < kSlots; ++s) {
      auto& dst = report.lemmas[s];
      const auto& src = part[s];
      dst.checked += src.checked;
      dst.passed += src.passed;
      dst.excluded += src.excluded;
      for (const auto& ce : src.counterexamples) {
        if (dst.counterexamples.size() < kMaxCounterexamples) dst.counterexamples.push_back(ce);
      }
    }
  }
  return report;
}

}  // namespace littlewood
