#include "littlewood/littlewood_opt.hpp"

#include <algorithm>
#include <cmath>

#include "littlewood/error.hpp"
#include "littlewood/parallel.hpp"

namespace littlewood {

std::string_view to_string(CaseLabel label) noexcept {
  switch (label) {
    case CaseLabel::Case1_ZeroProduct: return "Case1_ZeroProduct";
    case CaseLabel::Case2_PosPos: return "Case2_PosPos";
    case CaseLabel::Case3_NegNeg: return "Case3_NegNeg";
    case CaseLabel::Case4_PosNegBalanced: return "Case4_PosNegBalanced";
    case CaseLabel::Case5_NegPosBalanced: return "Case5_NegPosBalanced";
    case CaseLabel::Uncovered: return "Uncovered";
  }
  return "Unknown";
}

RatioReport littlewood_ratio(const FormCoefficients& form, ScalarField field) {
  if (form.is_zero()) throw Error(ErrorKind::ZeroForm, "ratio is undefined for the zero form");
  RatioReport report;
  report.field = field;
  report.norm_used = norm(form, field);
  report.lp_norm = coeff_lp_norm(form, kLittlewoodExponent);
  report.ratio = report.lp_norm / report.norm_used.value;
  return report;
}

bool is_real_optimizer(const FormCoefficients& form, double tol) {
  double largest = 0.0;
  for (double v : form.coeffs()) largest = std::max(largest, std::abs(v));
  if (largest == 0.0) return false;
  int negatives = 0;
  for (double v : form.coeffs()) {
    if (v == 0.0) return false;
    if (std::abs(largest - std::abs(v)) > tol * largest) return false;
    if (v < 0.0) ++negatives;
  }
  return negatives % 2 == 1;
}

CaseLabel classify_complex_case(const FormCoefficients& form) {
  const double p = form.a11() * form.a21();
  const double q = form.a12() * form.a22();
  if (p == 0.0 || q == 0.0) return CaseLabel::Case1_ZeroProduct;
  if (p > 0.0 && q > 0.0) return CaseLabel::Case2_PosPos;
  if (p < 0.0 && q < 0.0) return CaseLabel::Case3_NegNeg;
  // A fourth coefficient solved from the other three balances the products
  // only up to a few ulps, so "p + q == 0" is read at that resolution.
  if (std::abs(p + q) <= kBalanceRelTol * std::max(std::abs(p), std::abs(q))) return p > 0.0 ? CaseLabel::Case4_PosNegBalanced : CaseLabel::Case5_NegPosBalanced;
  return CaseLabel::Uncovered;
}

void ScanConfig::validate() const {
  if (!std::isfinite(step) || !(step > 0.0)) throw Error(ErrorKind::InvalidConfig, "step must be > 0");
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw Error(ErrorKind::InvalidConfig, "box requires lo < hi");
  }
  const double cells = (hi - lo) / step;
  if (std::abs(cells - std::round(cells)) > 1e-12 * std::max(1.0, cells)) {
    throw Error(ErrorKind::InvalidConfig, "step must divide the box width");
  }
  if (std::round(cells) > 4096.0) {
    throw Error(ErrorKind::InvalidConfig, "grid is too fine (more than 4097 points per axis)");
  }
}

ScanGrid::ScanGrid(const ScanConfig& cfg) {
  cfg.validate();
  const auto cells = static_cast<long>(std::round((cfg.hi - cfg.lo) / cfg.step));
  const double inv = 1.0 / cfg.step;
  const bool integral_inv = std::abs(inv - std::round(inv)) <= 1e-9 * inv;
  const double lo_index = cfg.lo / cfg.step;
  const bool on_lattice = std::abs(lo_index - std::round(lo_index)) <= 1e-9 * std::max(1.0, std::abs(lo_index));

  axis_.reserve(static_cast<std::size_t>(cells) + 1);
  for (long i = 0; i <= cells; ++i) {
    if (on_lattice) {
      const double k = std::round(lo_index) + static_cast<double>(i);
      axis_.push_back(integral_inv ? k / std::round(inv) : k * cfg.step);
    } else {
      axis_.push_back(cfg.lo + static_cast<double>(i) * cfg.step);
    }
  }
}

std::size_t ScanGrid::size() const noexcept {
  const std::size_t n = axis_.size();
  return n * n * n * n;
}

FormCoefficients ScanGrid::point(std::size_t index) const {
  const std::size_t n = axis_.size();
  const std::size_t i22 = index % n;
  index /= n;
  const std::size_t i12 = index % n;
  index /= n;
  const std::size_t i21 = index % n;
  const std::size_t i11 = index / n;
  return FormCoefficients(axis_[i11], axis_[i21], axis_[i12], axis_[i22]);
}

namespace {

struct ScanPartial {
  double max_ratio = -1.0;
  std::vector<ArgmaxEntry> argmax;
  std::size_t scanned = 0;
};

void offer(ScanPartial& part, const FormCoefficients& form, double ratio) {
  if (ratio > part.max_ratio) {
    part.max_ratio = ratio;
    std::erase_if(part.argmax, [&](const ArgmaxEntry& e) { return e.ratio < ratio - kArgmaxTol; });
  }
  if (ratio >= part.max_ratio - kArgmaxTol) part.argmax.push_back({form, ratio});
}

}  // namespace

ScanReport grid_scan(const ScanConfig& cfg) {
  const ScanGrid grid(cfg);
  auto partials = run_blocks(grid.size(), 256, [&](const BlockRange& range) {
    ScanPartial part;
    for (std::size_t i = range.begin; i < range.end; ++i) {
      const FormCoefficients form = grid.point(i);
      if (form.is_zero()) {
        if (cfg.exclude_zero_forms) continue;
        ++part.scanned;
        offer(part, form, 0.0);
        continue;
      }
      ++part.scanned;
      offer(part, form, littlewood_ratio(form, cfg.field).ratio);
    }
    return part;
  });

  ScanReport report;
  report.config = cfg;
  double best = -1.0;
  for (const auto& p : partials) {
    report.points_scanned += p.scanned;
    best = std::max(best, p.max_ratio);
  }
  report.max_ratio = std::max(best, 0.0);
  for (const auto& p : partials) {
    for (const auto& e : p.argmax) {
      if (e.ratio >= best - kArgmaxTol) report.argmax.push_back(e);
    }
  }
  std::sort(report.argmax.begin(), report.argmax.end(),
            [](const ArgmaxEntry& x, const ArgmaxEntry& y) { return x.form < y.form; });
  return report;
}

namespace {

double magnitude(std::mt19937_64& rng) { return 1.0 - uniform01(rng); }  // (0, 1]

double sign(std::mt19937_64& rng) { return (rng() >> 63) ? -1.0 : 1.0; }

FormCoefficients sample_case(CaseLabel label, std::mt19937_64& rng) {
  switch (label) {
    case CaseLabel::Case1_ZeroProduct: {
      std::array<double, 4> c{};
      for (double& v : c) v = uniform(rng, -1.0, 1.0);
      c[rng() % 4] = 0.0;
      return FormCoefficients(c);
    }
    case CaseLabel::Case2_PosPos: {
      const double s1 = sign(rng), s2 = sign(rng);
      return FormCoefficients(s1 * magnitude(rng), s1 * magnitude(rng), s2 * magnitude(rng),
                              s2 * magnitude(rng));
    }
    case CaseLabel::Case3_NegNeg: {
      const double s1 = sign(rng), s2 = sign(rng);
      return FormCoefficients(s1 * magnitude(rng), -s1 * magnitude(rng), s2 * magnitude(rng),
                              -s2 * magnitude(rng));
    }
    case CaseLabel::Case4_PosNegBalanced:
    case CaseLabel::Case5_NegPosBalanced: {
      const double pair_sign = label == CaseLabel::Case4_PosNegBalanced ? 1.0 : -1.0;
      for (;;) {
        const double s1 = sign(rng);
        const double a11 = s1 * magnitude(rng);
        const double a21 = pair_sign * s1 * magnitude(rng);
        const double a12 = sign(rng) * magnitude(rng);
        const double a22 = -(a11 * a21) / a12;
        const FormCoefficients form(a11, a21, a12, a22);
        if (std::abs(a22) <= 1.0 && classify_complex_case(form) == label) return form;
      }
    }
    case CaseLabel::Uncovered:
      break;
  }
  throw Error(ErrorKind::UncoveredCase, "no sampler for the uncovered region");
}

}  // namespace

CaseBoundReport verify_case_bound(CaseLabel label, std::size_t samples, std::uint64_t seed) {
  if (label == CaseLabel::Uncovered) {
    throw Error(ErrorKind::UncoveredCase, "the uncovered region has no proven bound");
  }
  if (samples == 0) throw Error(ErrorKind::InvalidConfig, "samples must be > 0");

  const std::uint64_t case_seed = seed ^ (static_cast<std::uint64_t>(label) << 56);
  auto partials = run_blocks(samples, 64, [&](const BlockRange& range) {
    auto rng = block_stream(case_seed, range.index);
    CaseBoundReport part;
    part.worst_ratio = -1.0;
    for (std::size_t i = range.begin; i < range.end; ++i) {
      const FormCoefficients form = sample_case(label, rng);
      const double r = littlewood_ratio(form, ScalarField::ComplexRealCoeffs).ratio;
      if (r > part.worst_ratio) {
        part.worst_ratio = r;
        part.worst_form = form;
      }
      ++part.samples;
    }
    return part;
  });

  CaseBoundReport report;
  report.label = label;
  report.worst_ratio = -1.0;
  for (const auto& p : partials) {
    report.samples += p.samples;
    if (p.samples > 0 && p.worst_ratio > report.worst_ratio) {
      report.worst_ratio = p.worst_ratio;
      report.worst_form = p.worst_form;
    }
  }
  return report;
}

}  // namespace littlewood
