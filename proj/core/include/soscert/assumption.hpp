#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "soscert/polynomial.hpp"
#include "soscert/variety.hpp"

namespace soscert {

/// Outcome of the checks on a square system g_1..g_n.
///
/// `resultant_nonzero` is the predicate Res(g_1^inf, ..., g_n^inf) != 0. It is
/// decided by a Groebner test on the top forms; no resultant value is computed.
struct AssumptionReport {
  bool resultant_nonzero = false;
  /// Unit-norm common zero of the top forms, present when the predicate fails.
  std::optional<ComplexVector> witness;
  std::optional<std::size_t> bezout_dim;  // empty when the affine ideal is not zero-dimensional
  std::uint64_t bezout_product = 0;
  std::vector<VarietyPoint> singular_optimizers;

  bool holds_at_infinity() const { return resultant_nonzero; }
};

struct AssumptionOptions {
  std::uint64_t seed = 1;
  double witness_tolerance = 1e-8;
};

/// Product of the generator degrees.
std::uint64_t degree_product(const std::vector<Polynomial>& gens);

/// True iff the top forms share no nontrivial complex zero, i.e. the
/// homogeneous ideal of top forms has a finite-dimensional quotient.
/// Fills resultant_nonzero, witness and bezout_product.
/// Throws std::invalid_argument("square system required") unless there are
/// exactly n nonzero generators in n variables.
AssumptionReport check_at_infinity(const std::vector<Polynomial>& gens, const AssumptionOptions& options = {});

struct BezoutCheck {
  std::size_t dim = 0;
  std::uint64_t product = 0;
  bool equal = false;
};

/// dim of R[x]/<g> against prod deg g_i. Throws std::invalid_argument when the
/// ideal is not zero-dimensional.
BezoutCheck check_bezout(const std::vector<Polynomial>& gens);

/// Singular points with |f(x) - fstar| <= value_tolerance (complex comparison).
std::vector<VarietyPoint> check_singular_optimizers(const Polynomial& f, const std::vector<VarietyPoint>& points,
                                                    double fstar, double value_tolerance = 1e-6);

/// Minimum of f over the real points of V(g), with the minimizers.
struct RealMinimum {
  double value = 0.0;
  std::optional<Rational> exact;  // when every minimizer candidate is a rational point
  std::vector<VarietyPoint> minimizers;
};

/// Enumerates V_R(g); nullopt when there are no real points.
std::optional<RealMinimum> minimize_over_real_points(const Polynomial& f, const std::vector<VarietyPoint>& points,
                                                     double value_tolerance = 1e-9);

}  // namespace soscert
