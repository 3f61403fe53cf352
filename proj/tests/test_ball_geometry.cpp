#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "littlewood/ball_geometry.hpp"
#include "littlewood/error.hpp"
#include "test_support.hpp"

using namespace littlewood;
using littlewood::testing::make_rng;
using littlewood::testing::unif;

namespace {

// Uniform draw from the real unit ball by rejection from the box [-1,1]^4,
// with an occasional push onto the sphere so boundary forms are covered.
FormCoefficients random_ball_form(std::mt19937_64& rng) {
  while (true) {
    const auto t = littlewood::testing::random_form(rng);
    const double n = norm_real(t).value;
    if (n == 0.0) continue;
    if (rng() % 4 == 0) return t.scaled(1.0 / n);
    if (n <= 1.0) return t;
  }
}

void expect_valid(const SplitWitness& w, const FormCoefficients& t) {
  EXPECT_NE(w.a, w.b);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ((w.a[i] + w.b[i]) * 0.5, t[i]);
  EXPECT_LE(norm_real(w.a).value, 1.0 + 1e-12);
  EXPECT_LE(norm_real(w.b).value, 1.0 + 1e-12);
  EXPECT_GT(w.epsilon, 0.0);
}

}  // namespace

TEST(ExtremePoints, SixteenDistinctUnitNormPoints) {
  const auto& pts = extreme_points();
  ASSERT_EQ(pts.size(), 16u);
  std::set<std::array<double, 4>> seen;
  int monomials = 0;
  for (const auto& e : pts) {
    EXPECT_EQ(norm_real(e.coeffs).value, 1.0);
    seen.insert(e.coeffs.coeffs());
    if (e.kind == ExtremeKind::Monomial) ++monomials;
  }
  EXPECT_EQ(seen.size(), 16u);
  EXPECT_EQ(monomials, 8);
  EXPECT_TRUE(seen.count({0.5, 0.5, 0.5, -0.5}));
  EXPECT_TRUE(seen.count({-1.0, 0.0, 0.0, 0.0}));
}

TEST(ExtremePoints, HalfFormsHaveOddParity) {
  for (const auto& e : extreme_points()) {
    if (e.kind != ExtremeKind::HalfForm) continue;
    int prod = 1;
    for (int i = 0; i < 4; ++i) {
      prod *= e.sign_pattern[i];
      EXPECT_EQ(e.coeffs[i], 0.5 * e.sign_pattern[i]);
    }
    EXPECT_EQ(prod, -1);
  }
}

// Every form with all four facets active is one of the 16 listed points.
TEST(ExtremePoints, ListIsCompleteAgainstFacetEnumeration) {
  const std::array<std::array<double, 4>, 4> h{{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}};
  int found = 0;
  for (int mask = 0; mask < 16; ++mask) {
    // Solve H a = 0.25-scaled signs; H is symmetric with H H = 4 I.
    std::array<double, 4> rhs{}, a{};
    for (int k = 0; k < 4; ++k) rhs[k] = mask >> k & 1 ? -1.0 : 1.0;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) a[i] += 0.25 * h[k][i] * rhs[k];
    EXPECT_TRUE(match_extreme_point(FormCoefficients(a), 0.0).has_value());
    ++found;
  }
  EXPECT_EQ(found, 16);
}

TEST(Classify, Examples) {
  const auto m = classify(make_form(1, 0, 0, 0), 1e-12);
  EXPECT_EQ(m.verdict, Verdict::Extreme);
  ASSERT_TRUE(m.matched.has_value());
  EXPECT_EQ(m.matched->kind, ExtremeKind::Monomial);

  const auto n = classify(make_form(0.5, 0.5, 0, 0), 1e-12);
  EXPECT_EQ(n.verdict, Verdict::NotExtreme);
  ASSERT_TRUE(n.witness.has_value());
  expect_valid(*n.witness, make_form(0.5, 0.5, 0, 0));

  const auto o = classify(make_form(2, 0, 0, 0), 1e-12);
  EXPECT_EQ(o.verdict, Verdict::OutsideBall);
  EXPECT_DOUBLE_EQ(o.norm, 2.0);

  const auto h = classify(make_form(0.5, 0.5, 0.5, -0.5), 1e-12);
  EXPECT_EQ(h.verdict, Verdict::Extreme);
  EXPECT_EQ(h.matched->kind, ExtremeKind::HalfForm);
}

TEST(Classify, MatchesPerturbedExtremePoints) {
  auto rng = make_rng(31);
  for (const auto& e : extreme_points()) {
    EXPECT_EQ(classify(e.coeffs, 1e-9).verdict, Verdict::Extreme);
    for (int k = 0; k < 20; ++k) {
      std::array<double, 4> c = e.coeffs.coeffs();
      for (auto& v : c) v += unif(rng, -1e-12, 1e-12);
      const auto r = classify(FormCoefficients(c), 1e-9);
      ASSERT_EQ(r.verdict, Verdict::Extreme);
      EXPECT_EQ(r.matched->coeffs, e.coeffs);
    }
  }
}

TEST(Classify, RejectsNegativeTolerance) {
  EXPECT_THROW(classify(make_form(0, 0, 0, 0), -1.0), Error);
}

TEST(SplitWitness, Examples) {
  const auto w1 = split_witness(make_form(0.5, 0, 0, 0));
  EXPECT_EQ(w1.a, make_form(0.75, 0, 0, 0));
  EXPECT_EQ(w1.b, make_form(0.25, 0, 0, 0));
  EXPECT_EQ(w1.epsilon, 0.25);

  const auto w2 = split_witness(make_form(0.5, 0.5, 0, 0));
  EXPECT_EQ(w2.a, make_form(0.75, 0.25, 0, 0));
  EXPECT_EQ(w2.b, make_form(0.25, 0.75, 0, 0));
  EXPECT_EQ(w2.epsilon, 0.25);

  const auto w3 = split_witness(make_form(0.25, 0.25, 0.25, -0.25));
  EXPECT_EQ(w3.epsilon, 0.125);
  EXPECT_EQ(w3.a, make_form(0.375, 0.375, 0.375, -0.375));
  EXPECT_EQ(w3.b, make_form(0.125, 0.125, 0.125, -0.125));
}

TEST(SplitWitness, ZeroFormAndThreeActiveFacets) {
  expect_valid(split_witness(make_form(0, 0, 0, 0)), make_form(0, 0, 0, 0));
  expect_valid(split_witness(make_form(0.8, 0.2, 0.2, -0.2)), make_form(0.8, 0.2, 0.2, -0.2));
  expect_valid(split_witness(make_form(0.4, 0.2, 0.6, -0.2)), make_form(0.4, 0.2, 0.6, -0.2));
}

TEST(SplitWitness, Errors) {
  try {
    split_witness(make_form(0.5, 0.5, 0.5, -0.5));
    FAIL() << "expected throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IsExtreme);
  }
  try {
    split_witness(make_form(2, 0, 0, 0));
    FAIL() << "expected throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutsideBall);
  }
}

TEST(SplitWitness, RandomBallForms) {
  auto rng = make_rng(32);
  for (int i = 0; i < 20000; ++i) {
    const auto t = random_ball_form(rng);
    const auto w = split_witness(t);
    ASSERT_TRUE(is_valid_witness(w, t)) << i;
  }
}

// Random points on the faces between extreme points: convex combinations of
// two or three of the 16, which are never extreme themselves.
TEST(SplitWitness, FaceCombinations) {
  auto rng = make_rng(33);
  const auto& pts = extreme_points();
  for (int i = 0; i < 5000; ++i) {
    const auto& e1 = pts[rng() % 16];
    const auto& e2 = pts[rng() % 16];
    if (e1.coeffs == e2.coeffs) continue;
    const double s = unif(rng, 0.05, 0.95);
    std::array<double, 4> c{};
    for (int k = 0; k < 4; ++k) c[k] = s * e1.coeffs[k] + (1 - s) * e2.coeffs[k];
    const FormCoefficients t(c);
    if (norm_real(t).value > 1.0 + 1e-12 || match_extreme_point(t, 0.0)) continue;
    ASSERT_TRUE(is_valid_witness(split_witness(t), t)) << i;
  }
}

TEST(Exposing, Examples) {
  const auto& pts = extreme_points();
  const auto f = exposing_functional(pts[0]);
  EXPECT_EQ(f.coeffs(), (std::array<double, 4>{1, 0, 0, 0}));
  EXPECT_EQ(f.dual_norm(), 1.0);
  EXPECT_EQ(f(pts[0].coeffs), 1.0);

  for (const auto& e : pts) {
    if (e.coeffs == make_form(0.5, 0.5, 0.5, -0.5)) {
      const auto g = exposing_functional(e);
      EXPECT_EQ(g.coeffs(), (std::array<double, 4>{0.5, 0.5, 0.5, -0.5}));
      EXPECT_EQ(g(e.coeffs), 1.0);
    }
  }
}

TEST(Exposing, EachPointIsUniquelyExposed) {
  auto rng = make_rng(34);
  const auto& pts = extreme_points();
  for (const auto& e : pts) {
    const auto f = exposing_functional(e);
    EXPECT_EQ(f(e.coeffs), 1.0);
    EXPECT_EQ(f.dual_norm(), 1.0);
    for (const auto& other : pts) {
      if (other.coeffs != e.coeffs) EXPECT_LE(f(other.coeffs), 0.5);
    }
    for (int i = 0; i < 1000; ++i) {
      const auto s = random_ball_form(rng);
      EXPECT_LT(f(s), 1.0);
    }
  }
}

TEST(Exposing, RejectsNonExtreme) {
  ExtremePoint fake{make_form(0.5, 0, 0, 0), ExtremeKind::Monomial, {1, 1, 1, 1}};
  try {
    exposing_functional(fake);
    FAIL() << "expected throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotExtremePoint);
  }
}

TEST(DualNorm, Examples) {
  EXPECT_EQ(dual_norm({1, 0, 0, 0}), 1.0);
  EXPECT_EQ(dual_norm({0.5, 0.5, 0.5, -0.5}), 1.0);
  EXPECT_EQ(dual_norm({0, 0, 0, 0}), 0.0);
}

// The dual norm bounds |f(T)| / ||T|| and is attained on the ball.
TEST(DualNorm, BoundsFunctionalOnBall) {
  auto rng = make_rng(35);
  for (int i = 0; i < 500; ++i) {
    std::array<double, 4> c{unif(rng, -1, 1), unif(rng, -1, 1), unif(rng, -1, 1), unif(rng, -1, 1)};
    const DualFunctional f(c);
    for (int k = 0; k < 50; ++k) EXPECT_LE(std::abs(f(random_ball_form(rng))), f.dual_norm() + 1e-12);
  }
}
