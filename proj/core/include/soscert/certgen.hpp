#pragma once

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "soscert/groebner.hpp"
#include "soscert/polynomial.hpp"
#include "soscert/variety.hpp"

namespace soscert {

/// q with q^2 - p in <x_1..x_n>^k, given b0 with b0^2 = p(0) != 0.
/// Degree-by-degree: the degree-d part of q is the degree-d part of p - q^2 over 2 b0.
template <class C>
BasicPolynomial<C> sqrt_mod_power_with_root(const BasicPolynomial<C>& p, int k, const C& b0) {
  if (k < 1) throw std::invalid_argument("sqrt_mod_power needs k >= 1");
  if (b0 == C(0)) throw std::invalid_argument("no unit square root");
  const std::size_t n = p.nvars();
  BasicPolynomial<C> q = BasicPolynomial<C>::constant(n, b0);
  const C inv = C(1) / (C(2) * b0);
  for (int d = 1; d < k; ++d) {
    BasicPolynomial<C> sq(n);
    for (const auto& [m1, c1] : q.terms()) {
      for (const auto& [m2, c2] : q.terms()) {
        if (m1.degree() + m2.degree() == d) sq.add_term(m1 * m2, C(c1 * c2));
      }
    }
    BasicPolynomial<C> corr = p.homogeneous_component(d) - sq;
    q.add_scaled(corr, inv, Monomial(n));
  }
  return q;
}

/// Exact version: p(0) must be the square of a positive rational; b0 is its positive root.
/// Throws std::invalid_argument("no unit square root") otherwise.
Polynomial sqrt_mod_power(const Polynomial& p, int k);

/// Complex version with the principal root of p(0).
ComplexPolynomial sqrt_mod_power(const ComplexPolynomial& p, int k);

/// Raised when the hypotheses of the quotient square root fail at a point.
class QuotientSqrtError : public std::runtime_error {
 public:
  QuotientSqrtError(const std::string& what, std::size_t point) : std::runtime_error(what), point_(point) {}
  std::size_t point() const { return point_; }

 private:
  std::size_t point_;
};

/// h = rational + sqrt(radicand) * radical, both parts with rational coefficients.
struct QuadraticSqrt {
  Integer radicand = 1;
  Polynomial rational;
  Polynomial radical;
};

/// Exact square root of p modulo the ideal when every point is rational and the
/// positive values p(x_j) share one square class. Returns nullopt when this
/// representation does not exist (irrational points or two radicands).
/// Output lives in the span of the standard monomials.
/// Throws QuotientSqrtError when p < 0 at a real point or p = 0 at a point of multiplicity > 1.
std::optional<QuadraticSqrt> quotient_sqrt_exact(const Polynomial& p, const QuotientAlgebra& qa,
                                                 const std::vector<VarietyPoint>& points);

struct NumericSqrtOptions {
  double residual_target = 1e-30;
  unsigned rounding_bits = 128;
  int max_newton_steps = 60;
};

/// Rational approximation of a square root of p in the quotient: seeded from
/// complex interpolation at the (simple) points and refined by exact-rational
/// Newton steps. Requires every point to have multiplicity 1.
Polynomial quotient_sqrt_numeric(const Polynomial& p, const QuotientAlgebra& qa, const std::vector<VarietyPoint>& points,
                                 const NumericSqrtOptions& options = {});

/// Exact when possible, otherwise the Newton-refined approximation packed as a
/// rational part with radicand 1.
QuadraticSqrt quotient_sqrt(const Polynomial& p, const QuotientAlgebra& qa, const std::vector<VarietyPoint>& points);

/// Certificate for f - fstar = sum_i lambda_i g_i + h^2 (or + sigma from a Gram matrix).
struct Certificate {
  enum class Kind { exact, numeric, gram };
  Kind kind = Kind::exact;

  Rational fstar = 0;
  // h = h + sqrt(radicand) * h_radical, lambda_i = multipliers[i] + sqrt(radicand) * multipliers_radical[i]
  Integer radicand = 1;
  Polynomial h;
  Polynomial h_radical;
  std::vector<Polynomial> multipliers;
  std::vector<Polynomial> multipliers_radical;

  // Gram kind: sigma = v^T gram v over gram_basis, float multipliers.
  double fstar_value = 0.0;
  Eigen::MatrixXd gram;
  std::vector<Monomial> gram_basis;
  std::vector<RealPolynomial> numeric_multipliers;

  double residual = 0.0;
  bool degree_contract_met = false;
  std::vector<std::string> notes;
};

struct VerificationReport {
  double residual = 0.0;       // max coefficient magnitude of the defect
  bool exact_zero = false;     // defect identically zero in exact arithmetic
  bool h_degree_ok = false;    // deg h <= frak_n (or Gram basis degree <= frak_n)
  bool multiplier_degree_ok = false;  // deg(lambda_i g_i) <= max(2 frak_n, deg f)
  int h_degree = kZeroPolynomialDegree;
  int max_multiplier_product_degree = kZeroPolynomialDegree;
};

/// Recomputes f - fstar - sum lambda_i g_i - h^2 (or - sigma) and the degree contracts.
VerificationReport verify_certificate(const Polynomial& f, const std::vector<Polynomial>& gens,
                                      const Certificate& cert);

struct CertificateOptions {
  std::uint64_t seed = 1;
  bool allow_numeric = true;
  /// Set when the caller has verified that the top forms share no nontrivial zero.
  bool assumption_verified = false;
};

/// Builds the representation for a given exact fstar. The exact path is tried
/// first; the numeric one is used when it does not apply and allow_numeric is set.
Certificate build_certificate(const Polynomial& f, const std::vector<Polynomial>& gens, const Rational& fstar,
                              const CertificateOptions& options = {});

/// Same, with fstar taken as the minimum of f over the real points of V(g).
/// When that minimum is irrational it is rounded down and the certificate is numeric.
Certificate build_certificate(const Polynomial& f, const std::vector<Polynomial>& gens,
                              const CertificateOptions& options = {});

}  // namespace soscert
