#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "soscert/degbound.hpp"
#include "soscert/sdp.hpp"

using namespace soscert;
using soscert::testing::P;

namespace {

std::size_t choose(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// min of f over {-1, 1}^n, by brute force
double grid_minimum(const Polynomial& f) {
  const std::size_t n = f.nvars();
  double best = 1e300;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i) & 1 ? 1 : -1;
    best = std::min(best, f.evaluate<Rational>(std::span<const Rational>(x)).get_d());
  }
  return best;
}

}  // namespace

TEST(BuildRelaxation, MomentMatrixSize) {
  EXPECT_EQ(build_relaxation(P("x1"), soscert::testing::binary(2), 2).moment_matrix_size, 6u);
  EXPECT_EQ(build_relaxation(P("x1", 1), soscert::testing::binary(1), 1).moment_matrix_size, 2u);
  EXPECT_EQ(build_relaxation(P("x1", 3), soscert::testing::binary(3), 2).moment_matrix_size, 10u);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 3; ++d) {
      auto p = build_relaxation(Polynomial::variable(n, 0), soscert::testing::binary(n), d);
      EXPECT_EQ(p.moment_matrix_size, choose(n + static_cast<std::size_t>(d), static_cast<std::size_t>(d)));
      EXPECT_EQ(p.gram_basis.size(), p.moment_matrix_size);
    }
  }
}

TEST(BuildRelaxation, OrderBelowFloor) {
  EXPECT_THROW(build_relaxation(P("x1"), {P("x1^3 - 1"), P("x2^2")}, 1), std::invalid_argument);
  EXPECT_NO_THROW(build_relaxation(P("x1"), {P("x1^3 - 1"), P("x2^2")}, 2));
}

TEST(BuildRelaxation, SymmetricConstraints) {
  auto p = build_relaxation(P("x1 + x2"), soscert::testing::example31(2, 3), 2);
  EXPECT_LT((p.objective - p.objective.transpose()).norm(), 1e-14);
  for (const auto& a : p.constraint_matrices) EXPECT_LT((a - a.transpose()).norm(), 1e-14);
  EXPECT_EQ(p.localizing_blocks.size(), 2u);
  // 6 Gram monomials minus the two quadrics
  EXPECT_EQ(p.reduced_size(), 4u);
}

TEST(BuildRelaxation, UnitIdeal) {
  auto s = solve(build_relaxation(P("x1", 1), {P("x1^2 + 1", 1), P("x1^2", 1)}, 1));
  // x^2 + 1 - x^2 = 1 lies in the degree-2 span
  EXPECT_EQ(s.status, SdpStatus::infeasible);
  EXPECT_TRUE(std::isinf(s.fd) && s.fd > 0);
}

TEST(Solve, BinaryOneVariable) {
  auto s = solve(build_relaxation(P("x1", 1), soscert::testing::binary(1), 1));
  EXPECT_EQ(s.status, SdpStatus::optimal);
  EXPECT_NEAR(s.fd, -1.0, 1e-6);
  EXPECT_LE(s.duality_gap, 1e-8);
  EXPECT_FALSE(s.gram_trace_growth);
}

TEST(Solve, Example32SingularOptimizer) {
  auto s = solve(build_relaxation(P("x1 - x2"), soscert::testing::example32(2, 3), 2));
  EXPECT_NEAR(s.fd, -1.0, 1e-6);
}

TEST(Solve, UnattainedBound) {
  auto s = solve(build_relaxation(P("x1", 1), {P("x1^2", 1)}, 1));
  EXPECT_NEAR(s.fd, 0.0, 1e-4);
  EXPECT_TRUE(s.gram_trace_growth);
}

TEST(Solve, Unconstrained) {
  auto s = solve(build_relaxation(P("x1^2 - 2*x1 + 3", 1), {}, 1));
  EXPECT_EQ(s.status, SdpStatus::optimal);
  EXPECT_NEAR(s.fd, 2.0, 1e-7);
}

TEST(Solve, OddDegreeUnbounded) {
  auto s = solve(build_relaxation(P("x1^3", 1), {}, 2));
  EXPECT_EQ(s.status, SdpStatus::unbounded_below);
}

TEST(Solve, GramIsPsd) {
  auto s = solve(build_relaxation(P("x1 + x2"), soscert::testing::example31(2, 3), 2));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s.gram);
  EXPECT_GE(es.eigenvalues().minCoeff(), -1e-8);
}

TEST(HierarchySweep, BinaryProduct) {
  auto sweep = hierarchy_sweep(P("x1*x2"), soscert::testing::binary(2), 1, 2);
  ASSERT_EQ(sweep.size(), 2u);
  EXPECT_LE(sweep[0].fd, sweep[1].fd + 2e-8);
  EXPECT_NEAR(sweep[1].fd, -1.0, 1e-6);
}

TEST(HierarchySweep, Example31) {
  auto sweep = hierarchy_sweep(P("x1 + x2"), soscert::testing::example31(2, 3), 2, 2);
  ASSERT_EQ(sweep.size(), 1u);
  EXPECT_NEAR(sweep[0].fd, 0.0, 1e-6);
}

TEST(ExtractSos, Identity) {
  std::vector<Monomial> basis{Monomial{0}, Monomial{1}};
  auto sq = extract_sos(Eigen::Matrix2d::Identity(), basis);
  ASSERT_EQ(sq.size(), 2u);
  RealPolynomial sum(1);
  for (const auto& s : sq) sum += s * s;
  EXPECT_NEAR(sum.coefficient(Monomial{0}), 1.0, 1e-12);
  EXPECT_NEAR(sum.coefficient(Monomial{2}), 1.0, 1e-12);
  EXPECT_NEAR(sum.coefficient(Monomial{1}), 0.0, 1e-12);
}

TEST(ExtractSos, RankOne) {
  std::vector<Monomial> basis{Monomial{0}, Monomial{1}};
  Eigen::Matrix2d g;
  g << 0.5, 0.5, 0.5, 0.5;
  auto sq = extract_sos(g, basis);
  ASSERT_EQ(sq.size(), 1u);
  RealPolynomial s = sq[0] * sq[0];
  EXPECT_NEAR(s.coefficient(Monomial{1}), 1.0, 1e-12);
  EXPECT_NEAR(s.coefficient(Monomial{2}), 0.5, 1e-12);
}

TEST(ExtractSos, RejectsIndefinite) {
  std::vector<Monomial> basis{Monomial{0}, Monomial{1}};
  Eigen::Matrix2d g;
  g << 1, 2, 2, 1;
  try {
    extract_sos(g, basis);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "Gram not PSD");
  }
}

TEST(GramCertificate, Example31) {
  auto gens = soscert::testing::example31(2, 3);
  Polynomial f = P("x1 + x2");
  auto s = solve(build_relaxation(f, gens, 2));
  Certificate cert = gram_certificate(f, gens, s);
  EXPECT_LE(cert.residual, 1e-6);
  EXPECT_TRUE(cert.degree_contract_met);

  // squares from the Gram matrix reproduce sigma
  auto squares = extract_sos(s.gram, s.gram_basis, 1e-12);
  RealPolynomial sigma(2), from_gram(2);
  for (const auto& q : squares) sigma += q * q;
  for (std::size_t a = 0; a < s.gram_basis.size(); ++a) {
    for (std::size_t b = 0; b < s.gram_basis.size(); ++b) {
      from_gram.add_term(s.gram_basis[a] * s.gram_basis[b], s.gram(static_cast<long>(a), static_cast<long>(b)));
    }
  }
  EXPECT_LE(max_abs_coefficient(sigma - from_gram), 1e-5);
}

TEST(WriteSdp, Header) {
  auto p = build_relaxation(P("x1", 1), soscert::testing::binary(1), 1);
  std::ostringstream os;
  write_sdp(os, p);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line[0], '*');
  std::getline(in, line);
  std::size_t m = 0, blocks = 0, size = 0;
  in >> m >> blocks >> size;
  EXPECT_EQ(m, p.constraint_matrices.size());
  EXPECT_EQ(blocks, 1u);
  EXPECT_EQ(size, p.reduced_size());
}

class TightnessProperty : public ::testing::TestWithParam<int> {};

TEST_P(TightnessProperty, BinaryBoundIsTightAndMonotone) {
  std::mt19937_64 rng(GetParam());
  const std::size_t n = 1 + static_cast<std::size_t>(GetParam()) % 3;
  const int deg = 1 + GetParam() % 3;
  Polynomial f = soscert::testing::random_polynomial(rng, n, deg);
  auto gens = soscert::testing::binary(n);
  const int dstar = sos_order(f, gens).sos_order;
  auto sweep = hierarchy_sweep(f, gens, 1, dstar);
  const double fstar = grid_minimum(f);
  for (std::size_t i = 0; i + 1 < sweep.size(); ++i) EXPECT_LE(sweep[i].fd, sweep[i + 1].fd + 2e-8);
  for (const auto& s : sweep) EXPECT_LE(s.fd, fstar + 1e-6);
  EXPECT_NEAR(sweep.back().fd, fstar, 1e-6);
}

INSTANTIATE_TEST_SUITE_P(Random, TightnessProperty, ::testing::Range(0, 24));
