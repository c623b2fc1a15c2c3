#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "soscert/assumption.hpp"
#include "soscert/groebner.hpp"

using namespace soscert;
using soscert::testing::P;

TEST(CheckAtInfinity, ReferenceSystemsHold) {
  EXPECT_TRUE(check_at_infinity(soscert::testing::example31(2, 3)).resultant_nonzero);
  EXPECT_TRUE(check_at_infinity(soscert::testing::example32(2, 3)).resultant_nonzero);
  EXPECT_TRUE(check_at_infinity(soscert::testing::example33()).resultant_nonzero);
  for (std::size_t n = 1; n <= 5; ++n) {
    auto r = check_at_infinity(soscert::testing::binary(n));
    EXPECT_TRUE(r.resultant_nonzero) << n;
    EXPECT_FALSE(r.witness.has_value());
    EXPECT_EQ(r.bezout_product, 1u << n);
  }
}

TEST(CheckAtInfinity, Example32WithAZeroHasWitnessAlongX2) {
  auto g = soscert::testing::example32(0, 3);
  // top forms vanish on x1 = 0
  ComplexVector axis{{0, 0}, {1, 0}};
  for (const auto& gi : g) EXPECT_EQ(eval_complex(top_form(gi), axis), Complex(0, 0));
  auto r = check_at_infinity(g);
  EXPECT_FALSE(r.resultant_nonzero);
  ASSERT_TRUE(r.witness.has_value());
  const auto& w = *r.witness;
  EXPECT_NEAR(std::abs(w[0]), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(w[1]), 1.0, 1e-10);
}

TEST(CheckAtInfinity, RejectsNonSquare) {
  try {
    check_at_infinity({P("x1^2 - 1")});
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "square system required");
  }
}

TEST(CheckAtInfinity, PositiveDimensionalTopVariety) {
  // top forms x1 x2 and x1 x3 share the line x1 = 0 and the point (1, 0, 0)
  std::vector<std::string> names{"x1", "x2", "x3"};
  std::vector<Polynomial> g{parse_polynomial("x1*x2 - 1", names), parse_polynomial("x1*x3 + x2", names),
                            parse_polynomial("x1^2 + x2^2 + x3^2 - 4", names)};
  auto r = check_at_infinity(g);
  EXPECT_FALSE(r.resultant_nonzero);
  ASSERT_TRUE(r.witness.has_value());
  double norm = 0;
  for (const auto& c : *r.witness) norm += std::norm(c);
  EXPECT_NEAR(norm, 1.0, 1e-12);
  for (const auto& gi : g) EXPECT_LT(std::abs(eval_complex(top_form(gi), *r.witness)), 1e-8);
}

TEST(CheckBezout, Examples) {
  auto b31 = check_bezout(soscert::testing::example31(2, 3));
  EXPECT_EQ(b31.dim, 4u);
  EXPECT_EQ(b31.product, 4u);
  EXPECT_TRUE(b31.equal);
  auto b32 = check_bezout(soscert::testing::example32(2, 3));
  EXPECT_EQ(b32.dim, 4u);
  EXPECT_TRUE(b32.equal);
  auto b = check_bezout({P("x1*x2"), P("x1 + x2")});
  EXPECT_EQ(b.dim, 2u);
  EXPECT_EQ(b.product, 2u);
  EXPECT_TRUE(b.equal);
  EXPECT_THROW(check_bezout({P("x1*x2"), P("x1^2")}), std::invalid_argument);
}

TEST(SingularOptimizers, Examples) {
  auto g32 = soscert::testing::example32(2, 3);
  auto pts32 = solve_variety(quotient_algebra(buchberger(g32)), g32);
  auto s = check_singular_optimizers(P("x1 - x2"), pts32, -1.0);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_NEAR(s[0].coords[0].real(), 0.0, 1e-9);
  EXPECT_NEAR(s[0].coords[1].real(), 1.0, 1e-9);

  auto g31 = soscert::testing::example31(2, 3);
  auto pts31 = solve_variety(quotient_algebra(buchberger(g31)), g31);
  EXPECT_TRUE(check_singular_optimizers(P("x1 + x2"), pts31, 0.0).empty());

  auto gb = soscert::testing::binary(2);
  auto ptsb = solve_variety(quotient_algebra(buchberger(gb)), gb);
  for (const auto& p : ptsb) EXPECT_FALSE(p.singular);
  EXPECT_TRUE(check_singular_optimizers(P("x1*x2"), ptsb, -1.0).empty());
}

TEST(RealMinimum, EnumeratesRealPoints) {
  auto g32 = soscert::testing::example32(2, 3);
  auto pts = solve_variety(quotient_algebra(buchberger(g32)), g32);
  auto m = minimize_over_real_points(P("x1 - x2"), pts);
  ASSERT_TRUE(m);
  ASSERT_TRUE(m->exact);
  EXPECT_EQ(*m->exact, -1);
  EXPECT_EQ(m->minimizers.size(), 1u);
}

class BezoutAgreement : public ::testing::TestWithParam<int> {};

TEST_P(BezoutAgreement, AtInfinityMatchesDimensionCount) {
  std::mt19937_64 rng(GetParam());
  const std::size_t n = 1 + GetParam() % 3;
  std::uniform_int_distribution<int> deg(1, 3);
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back(soscert::testing::random_polynomial(rng, n, deg(rng)));
  auto r = check_at_infinity(g);
  QuotientAlgebra qa = quotient_algebra(buchberger(g));
  if (!qa.dim) {
    EXPECT_FALSE(r.resultant_nonzero);
    return;
  }
  EXPECT_EQ(r.resultant_nonzero, *qa.dim == r.bezout_product);
  // scaling invariance
  std::vector<Polynomial> scaled;
  for (std::size_t i = 0; i < n; ++i) scaled.push_back(g[i] * Rational(parse_rational(std::to_string(i + 2) + "/3")));
  EXPECT_EQ(check_at_infinity(scaled).resultant_nonzero, r.resultant_nonzero);
}

INSTANTIATE_TEST_SUITE_P(Random, BezoutAgreement, ::testing::Range(0, 30));
