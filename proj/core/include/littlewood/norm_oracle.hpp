#pragma once

#include "littlewood/forms.hpp"

namespace littlewood {

// Sampling plan for the phase oracle: a uniform coarse grid on [0, 2pi)
// followed by golden-section refinement inside the best coarse cell.
struct PhaseGridConfig {
  int coarse_points = 4096;
  int refine_iters = 60;
  double tol = 1e-10;

  // Throws InvalidConfig unless coarse_points >= 8, refine_iters >= 0, tol > 0.
  void validate() const;
};

// Max of |T(x,y)| over the 16 vertex pairs x, y in {-1,1}^2.
double oracle_norm_real(const FormCoefficients& form) noexcept;

// Max of the boundary profile found by sampling; never exceeds the true norm
// beyond rounding.
double oracle_norm_complex(const FormCoefficients& form, const PhaseGridConfig& cfg = {});

}  // namespace littlewood
