#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace littlewood {

// a, b, c > 0 and d < 0, the common hypothesis of the sign lemmas.
class SignedQuadruple {
 public:
  // Throws InvalidRegion when a sign constraint (or finiteness) fails.
  SignedQuadruple(double a, double b, double c, double d);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }

 private:
  double a_, b_, c_, d_;
};

struct Equivalence {
  bool lhs = false;
  bool rhs = false;

  bool holds() const noexcept { return lhs == rhs; }
};

// lhs: a + b + |c + d| >= |a - b| + c - d
// rhs: (a >= -d, b >= -d, c >= -d) or (a >= c, b >= c, -d >= c)
Equivalence maxpos_equiv(const SignedQuadruple& q);

// lhs: |a - b| + c - d >= a + b + |c + d|
// rhs: (a >= b, c >= b, -d >= b) or (b >= a, c >= a, -d >= a)
Equivalence maxneg_equiv(const SignedQuadruple& q);

// Under |a + b| + |c + d| = |a - b| + |c - d| (relative 1e-12) and a != b,
// returns whether b = -d or a = -d (within 1e-9). Throws HypothesisNotMet
// otherwise.
//
// The conclusion requires c >= min(a, b): for c = min(a, b) < -d the equality
// holds for every such d, e.g. (2, 1, 1, -5), and the check returns false.
bool maxig_check(const SignedQuadruple& q);

// Endpoint attainment for f(t) = |a + b t| + |c + d t| on [-1, 1]: true iff the
// maximum over a 10^4-point grid does not exceed max(f(-1), f(1)) + 1e-12.
bool monomax_check(double a, double b, double c, double d);

// With k = ab / (cd):
// lhs: |k^2 (c^2 + d^2) - (a^2 + b^2)| <= 2ab (1 - k)
// rhs: |(cd / ab)(a - b)| <= c - d  and  |k (c + d)| <= a + b
Equivalence tec01_equiv(const SignedQuadruple& q);

// Smallest relative gap among the comparisons a biconditional evaluates; a
// sample whose gap is below the boundary band is excluded from the check.
double maxpos_boundary_gap(const SignedQuadruple& q);
double maxneg_boundary_gap(const SignedQuadruple& q);
double tec01_boundary_gap(const SignedQuadruple& q);

struct LemmaTally {
  std::string name;
  std::string note;  // reading of the statement being checked, if not literal
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t excluded = 0;  // inside the boundary band / hypothesis not met
  std::vector<std::vector<double>> counterexamples;  // first few, as (a, b, c, d)

  std::size_t failed() const noexcept { return checked - passed; }
};

struct LemmaReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double band = 0.0;
  std::vector<LemmaTally> lemmas;  // maxpos, maxneg, maxpos_or_maxneg, tec01, maxig, monomax

  bool all_passed() const noexcept;
};

inline constexpr double kLemmaBoundaryBand = 1e-9;

// Seeded property run: quadruples with log-uniform magnitudes in [1e-3, 1e3];
// maxig samples are constructed on its hypothesis (c >= -d branch) and
// monomax samples carry random signs. Throws InvalidConfig for samples == 0.
LemmaReport verify_lemmas(std::size_t samples, std::uint64_t seed,
                          double band = kLemmaBoundaryBand);

}  // namespace littlewood
