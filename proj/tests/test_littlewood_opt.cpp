#include <gtest/gtest.h>

#include <cmath>

#include "littlewood/error.hpp"
#include "littlewood/littlewood_opt.hpp"
#include "test_support.hpp"

using namespace littlewood;
using littlewood::testing::make_rng;
using littlewood::testing::random_form;

TEST(Ratio, Examples) {
  EXPECT_NEAR(littlewood_ratio(make_form(1, 1, 1, -1), ScalarField::Real).ratio, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(littlewood_ratio(make_form(1, 1, 1, -1), ScalarField::ComplexRealCoeffs).ratio, 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(littlewood_ratio(make_form(1, 0, 0, 0), ScalarField::Real).ratio, 1.0);
  const auto r = littlewood_ratio(make_form(1, 1, 1, 1), ScalarField::Real);
  EXPECT_NEAR(r.ratio, 2.0 * std::sqrt(2.0) / 4.0, 1e-12);
  EXPECT_DOUBLE_EQ(r.norm_used.value, 4.0);
}

TEST(Ratio, RejectsZeroForm) {
  try {
    littlewood_ratio(make_form(0, 0, 0, 0), ScalarField::Real);
    FAIL() << "expected throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroForm);
  }
}

TEST(Ratio, BoundedAndScaleInvariant) {
  auto rng = make_rng(41);
  for (int i = 0; i < 50000; ++i) {
    const auto t = random_form(rng);
    const double real = littlewood_ratio(t, ScalarField::Real).ratio;
    const double cplx = littlewood_ratio(t, ScalarField::ComplexRealCoeffs).ratio;
    EXPECT_LE(real, std::sqrt(2.0) + 1e-12);
    EXPECT_LE(cplx, real + 1e-12);
    EXPECT_NEAR(littlewood_ratio(t.scaled(-3.5), ScalarField::Real).ratio, real, 1e-12);
  }
}

TEST(Optimizer, Examples) {
  EXPECT_TRUE(is_real_optimizer(make_form(0.3, 0.3, 0.3, -0.3), 1e-12));
  EXPECT_FALSE(is_real_optimizer(make_form(1, 1, 1, 1), 1e-12));
  EXPECT_FALSE(is_real_optimizer(make_form(1, 1, 1, -0.999), 1e-6));
  EXPECT_FALSE(is_real_optimizer(make_form(0, 0, 0, 0), 1e-12));
  EXPECT_TRUE(is_real_optimizer(make_form(-2, 2, 2, 2), 1e-12));
}

TEST(Optimizer, OptimizersAttainSqrtTwo) {
  for (int mask = 0; mask < 16; ++mask) {
    std::array<double, 4> c{};
    for (int k = 0; k < 4; ++k) c[k] = mask >> k & 1 ? -0.7 : 0.7;
    const FormCoefficients t(c);
    const double ratio = littlewood_ratio(t, ScalarField::Real).ratio;
    if (is_real_optimizer(t, 1e-12)) {
      EXPECT_NEAR(ratio, std::sqrt(2.0), 1e-12);
    } else {
      EXPECT_LT(ratio, 1.0);
    }
  }
}

TEST(CaseLabel, Examples) {
  EXPECT_EQ(classify_complex_case(make_form(1, 1, 1, -1)), CaseLabel::Case4_PosNegBalanced);
  EXPECT_EQ(classify_complex_case(make_form(0, 1, 1, 1)), CaseLabel::Case1_ZeroProduct);
  EXPECT_EQ(classify_complex_case(make_form(1, 1, 1, -2)), CaseLabel::Uncovered);
  EXPECT_EQ(classify_complex_case(make_form(1, 2, 3, 4)), CaseLabel::Case2_PosPos);
  EXPECT_EQ(classify_complex_case(make_form(1, -2, 3, -4)), CaseLabel::Case3_NegNeg);
  EXPECT_EQ(classify_complex_case(make_form(1, -1, 1, 1)), CaseLabel::Case5_NegPosBalanced);
}

TEST(CaseLabel, BalanceIsTestedAtUlpResolution) {
  EXPECT_EQ(classify_complex_case(make_form(0.3, 0.7, 0.9, -0.3 * 0.7 / 0.9)), CaseLabel::Case4_PosNegBalanced);
  EXPECT_EQ(classify_complex_case(make_form(1, 1, 1, -1 - 1e-12)), CaseLabel::Uncovered);
}

TEST(CaseBound, EachCoveredCaseStaysBelowOne) {
  for (auto label : {CaseLabel::Case1_ZeroProduct, CaseLabel::Case2_PosPos, CaseLabel::Case3_NegNeg,
                     CaseLabel::Case4_PosNegBalanced, CaseLabel::Case5_NegPosBalanced}) {
    const auto r = verify_case_bound(label, 20000, 5);
    EXPECT_EQ(r.label, label);
    EXPECT_EQ(r.samples, 20000u);
    EXPECT_LE(r.worst_ratio, 1.0 + 1e-12) << to_string(label);
    EXPECT_GT(r.worst_ratio, 0.5);
    EXPECT_EQ(classify_complex_case(r.worst_form), label);
  }
}

TEST(CaseBound, Errors) {
  EXPECT_THROW(verify_case_bound(CaseLabel::Uncovered, 10, 1), Error);
  EXPECT_THROW(verify_case_bound(CaseLabel::Case2_PosPos, 0, 1), Error);
}

TEST(CaseBound, Deterministic) {
  const auto a = verify_case_bound(CaseLabel::Case4_PosNegBalanced, 5000, 9);
  const auto b = verify_case_bound(CaseLabel::Case4_PosNegBalanced, 5000, 9);
  EXPECT_EQ(a.worst_ratio, b.worst_ratio);
  EXPECT_EQ(a.worst_form, b.worst_form);
}

TEST(ScanGrid, AxisAndOrdering) {
  ScanConfig cfg;
  cfg.step = 0.1;
  const ScanGrid g(cfg);
  EXPECT_EQ(g.points_per_axis(), 21u);
  EXPECT_EQ(g.size(), 194481u);
  EXPECT_EQ(g.axis_value(0), -1.0);
  EXPECT_EQ(g.axis_value(10), 0.0);
  EXPECT_EQ(g.axis_value(13), 0.3);
  EXPECT_EQ(g.axis_value(20), 1.0);
  EXPECT_EQ(g.point(0), make_form(-1, -1, -1, -1));
  EXPECT_EQ(g.point(1), make_form(-1, -1, -1, -0.9));
  EXPECT_EQ(g.point(g.size() - 1), make_form(1, 1, 1, 1));
}

TEST(ScanConfig, Validation) {
  ScanConfig cfg;
  cfg.step = 0.0;
  EXPECT_THROW(cfg.validate(), Error);
  cfg.step = 0.3;
  EXPECT_THROW(cfg.validate(), Error);
  cfg = {};
  cfg.lo = 1.0;
  cfg.hi = -1.0;
  EXPECT_THROW(cfg.validate(), Error);
  cfg = {};
  EXPECT_NO_THROW(cfg.validate());
}

TEST(GridScan, UnitStepRealEnumeration) {
  ScanConfig cfg;
  cfg.step = 1.0;
  cfg.field = ScalarField::Real;
  const auto r = grid_scan(cfg);
  EXPECT_EQ(r.points_scanned, 80u);
  EXPECT_NEAR(r.max_ratio, std::sqrt(2.0), 1e-12);
  ASSERT_EQ(r.argmax.size(), 8u);
  for (const auto& a : r.argmax) {
    int prod = 1;
    for (double v : a.form.coeffs()) {
      EXPECT_EQ(std::abs(v), 1.0);
      prod *= v < 0 ? -1 : 1;
    }
    EXPECT_EQ(prod, -1);
  }
  for (std::size_t i = 1; i < r.argmax.size(); ++i) EXPECT_LT(r.argmax[i - 1].form, r.argmax[i].form);
}

TEST(GridScan, HalfStepBothFields) {
  ScanConfig cfg;
  cfg.step = 0.5;
  cfg.field = ScalarField::Real;
  const auto real = grid_scan(cfg);
  EXPECT_EQ(real.points_scanned, 624u);
  EXPECT_NEAR(real.max_ratio, std::sqrt(2.0), 1e-12);
  EXPECT_EQ(real.argmax.size(), 16u);  // 8 sign patterns x magnitudes {0.5, 1}
  cfg.field = ScalarField::ComplexRealCoeffs;
  const auto cplx = grid_scan(cfg);
  EXPECT_NEAR(cplx.max_ratio, 1.0, 1e-12);
}

TEST(GridScan, ZeroFormIncludedWhenAsked) {
  ScanConfig cfg;
  cfg.step = 1.0;
  cfg.exclude_zero_forms = false;
  EXPECT_EQ(grid_scan(cfg).points_scanned, 81u);
}

TEST(GridScan, Deterministic) {
  ScanConfig cfg;
  cfg.step = 0.25;
  const auto a = grid_scan(cfg);
  const auto b = grid_scan(cfg);
  EXPECT_EQ(a.max_ratio, b.max_ratio);
  ASSERT_EQ(a.argmax.size(), b.argmax.size());
  for (std::size_t i = 0; i < a.argmax.size(); ++i) EXPECT_EQ(a.argmax[i].form, b.argmax[i].form);
}

// Balanced positive/negative products with an interior maximum have norm
// sqrt(2) times the Euclidean norm of the coefficients.
TEST(CaseBound, BalancedInteriorNormIsScaledEuclidean) {
  auto rng = make_rng(42);
  int seen = 0;
  for (int i = 0; i < 20000 && seen < 500; ++i) {
    const double a11 = littlewood::testing::unif(rng, 0.05, 1.0);
    const double a21 = littlewood::testing::unif(rng, 0.05, 1.0);
    const double a12 = littlewood::testing::unif(rng, -1.0, 1.0);
    if (std::abs(a12) < 0.05) continue;
    const auto t = make_form(a11, a21, a12, -a11 * a21 / a12);
    ASSERT_EQ(classify_complex_case(t), CaseLabel::Case4_PosNegBalanced);
    const auto n = norm_complex_real_coeffs(t);
    if (n.branch != NormBranch::InteriorCritical) continue;
    ++seen;
    double sq = 0.0;
    for (double v : t.coeffs()) sq += v * v;
    EXPECT_NEAR(n.value, std::sqrt(2.0 * sq), 1e-8 * std::max(1.0, n.value));
    EXPECT_NEAR(littlewood::testing::brute_complex_norm(t), n.value, 1e-8 * std::max(1.0, n.value));
  }
  EXPECT_GT(seen, 100);
}
