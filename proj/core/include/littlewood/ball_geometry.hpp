#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "littlewood/forms.hpp"

namespace littlewood {

enum class ExtremeKind { Monomial, HalfForm };

std::string_view to_string(ExtremeKind kind) noexcept;

// One of the 16 extreme points of the closed real unit ball.
//
// Monomials carry the sign of their single nonzero slot and +1 elsewhere.
// Half-forms are (1/2) * sign_pattern with an odd number of minus signs.
struct ExtremePoint {
  FormCoefficients coeffs;
  ExtremeKind kind = ExtremeKind::Monomial;
  std::array<int, 4> sign_pattern{1, 1, 1, 1};
};

// (A + B) / 2 == T coefficientwise, A != B, both A and B in the ball.
struct SplitWitness {
  FormCoefficients a;
  FormCoefficients b;
  double epsilon = 0.0;
};

enum class Verdict { Extreme, NotExtreme, OutsideBall };

std::string_view to_string(Verdict verdict) noexcept;

struct ClassificationResult {
  Verdict verdict = Verdict::OutsideBall;
  double norm = 0.0;
  std::optional<ExtremePoint> matched;
  std::optional<SplitWitness> witness;
};

// Linear functional f(T) = c11 a11 + c21 a21 + c12 a12 + c22 a22 on coefficient
// space, together with its norm as a functional on the real unit ball.
class DualFunctional {
 public:
  explicit DualFunctional(const std::array<double, 4>& coeffs);

  const std::array<double, 4>& coeffs() const noexcept { return c_; }
  double dual_norm() const noexcept { return dual_norm_; }
  double operator()(const FormCoefficients& form) const noexcept;

 private:
  std::array<double, 4> c_;
  double dual_norm_;
};

inline constexpr double kDefaultMatchTol = 1e-9;
inline constexpr double kWitnessNormSlack = 1e-12;

// The 16 extreme points: 8 monomials (slot order a11, a21, a12, a22, plus sign
// first) followed by the 8 odd-parity half-forms in lexicographic sign order.
const std::vector<ExtremePoint>& extreme_points();

// First extreme point within `tol` of `form` in every coefficient, if any.
std::optional<ExtremePoint> match_extreme_point(const FormCoefficients& form, double tol);

ClassificationResult classify(const FormCoefficients& form, double tol = kDefaultMatchTol);

// Explicit pair (A, B) splitting a non-extreme form of the unit ball.
//
// The perturbation direction follows the zero/sign pattern of the form:
//   one nonzero slot     move that slot, eps = (1 - |a|) / 2
//   two nonzero slots    trade mass between them, eps = min(|a|, |b|) / 2
//   three or four slots  perturb a complete pair so that only the smaller
//                        vertex candidate moves, eps = half its slack / 2
//   equal magnitudes, odd parity, below 1/2
//                        scale along the sign pattern, eps = (1/2 - |a|) / 2
// When none of these apply (or a candidate fails verification) the half-form,
// facet-normal, unit and pair directions are searched in that order, with eps
// capped at half the exact feasible step and halved until the midpoint
// identity holds bit for bit. Forms whose norm
// lies in (1, 1 + 1e-12] are treated as members of the ball of radius ||T||.
//
// Throws OutsideBall when ||T|| > 1 + 1e-12 and IsExtreme when T equals an
// extreme point (or no splitting direction exists).
SplitWitness split_witness(const FormCoefficients& form);

// True iff the witness satisfies its invariants for `form` with ball radius
// max(1, ||form||) and slack kWitnessNormSlack.
bool is_valid_witness(const SplitWitness& witness, const FormCoefficients& form);

// Throws NotExtremePoint unless `point` is one of the 16 (exact match).
DualFunctional exposing_functional(const ExtremePoint& point);

// max over the 16 extreme points E of |f(E)|.
double dual_norm(const std::array<double, 4>& functional);

}  // namespace littlewood
