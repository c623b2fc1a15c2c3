#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "soscert/polynomial.hpp"
#include "soscert/qmatrix.hpp"

namespace soscert {

/// Reduced, monic Gröbner basis. When built with cofactor tracking,
/// generators[k] == sum_i cofactors[k][i] * source[i] holds exactly.
struct GroebnerBasis {
  std::size_t nvars = 0;
  MonomialOrder order = MonomialOrder::grevlex;
  std::vector<Polynomial> generators;
  std::vector<Polynomial> source;
  std::vector<std::vector<Polynomial>> cofactors;

  bool is_unit() const { return generators.size() == 1 && generators.front().degree() == 0; }
  bool tracks_cofactors() const { return !cofactors.empty() || generators.empty(); }
  std::vector<Monomial> leading_monomials() const;
};

struct BuchbergerOptions {
  MonomialOrder order = MonomialOrder::grevlex;
  bool track_cofactors = false;
};

/// Leading monomial/coefficient under `order`. Requires p nonzero.
const Monomial& leading_monomial(const Polynomial& p, MonomialOrder order);
const Rational& leading_coefficient(const Polynomial& p, MonomialOrder order);

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first, ties broken by pair index) and the product and chain criteria.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const BuchbergerOptions& options = {});

/// Remainder of p under full multivariate division by the basis.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

struct DivisionResult {
  std::vector<Polynomial> quotients;  // one per divisor
  Polynomial remainder;
};

/// p = sum_k quotients[k] * divisors[k] + remainder, no term of remainder
/// divisible by a leading monomial of a divisor.
DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& divisors, MonomialOrder order);

/// True iff every S-polynomial of the generators reduces to zero.
bool is_groebner_basis(const std::vector<Polynomial>& gens, MonomialOrder order);

/// Standard-monomial quotient R[x]/I. `dim` is empty when the quotient is infinite-dimensional.
struct QuotientAlgebra {
  GroebnerBasis gb;
  std::optional<std::size_t> dim;
  std::vector<Monomial> basis;  // ascending grevlex; basis[0] == 1 when dim >= 1
  std::vector<QMatrix> multiplication;  // one per variable

  bool finite() const { return dim.has_value(); }
  /// Coordinates of NF(p) in `basis`.
  QVector coordinates(const Polynomial& p) const;
  Polynomial element(const QVector& coords) const;
  /// Matrix of multiplication by p on the quotient.
  QMatrix multiplication_by(const Polynomial& p) const;
};

QuotientAlgebra quotient_algebra(const GroebnerBasis& gb);

struct LiftResult {
  std::vector<Polynomial> multipliers;  // h == sum_i multipliers[i] * gens[i]
  /// deg(multipliers[i]) <= deg(h) - deg(gens[i]) for every nonzero multiplier.
  bool degree_contract_met = false;
  /// True when the multipliers came from the homogenized ideal, where the
  /// degree contract is guaranteed; false for the affine fallback.
  bool homogeneous_route = false;
};

/// Writes an ideal member h as sum_i lambda_i g_i. The homogenization of h is
/// divided by a Groebner basis of the homogenized generators and the quotients
/// are dehomogenized, which keeps deg(lambda_i) <= deg(h) - deg(g_i) whenever
/// the top forms of the generators have no common nontrivial zero. If that
/// route fails the affine Groebner basis is used and the contract is only
/// checked, not guaranteed. Throws std::invalid_argument("not a member") when
/// h is outside the ideal, and std::logic_error when `assumption_verified` is
/// set but the homogeneous route breaks the contract.
LiftResult lift_membership(const Polynomial& h, const std::vector<Polynomial>& gens, bool assumption_verified = false);

/// Number of degree-d monomials outside the leading-term ideal of a
/// homogeneous Gröbner basis, i.e. dim S_d / I_d.
std::size_t graded_piece_dimension(const GroebnerBasis& homogeneous_gb, int d);

}  // namespace soscert
