#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "soscert/groebner.hpp"
#include "soscert/polynomial.hpp"
#include "soscert/upoly.hpp"

namespace soscert {

/// A point of V(g) with its local multiplicity (dimension of the local algebra).
struct VarietyPoint {
  ComplexVector coords;
  int multiplicity = 1;
  bool singular = false;  // Jacobian of the generators has numerical rank < n
  bool real = false;
  /// Exact coordinates when the point is rational.
  std::optional<std::vector<Rational>> exact;
};

struct VarietyOptions {
  std::uint64_t seed = 1;
  double rank_tolerance = 1e-8;  // relative to the largest singular value
  double real_tolerance = 1e-8;
  int max_attempts = 8;
};

/// Raised when no separating linear form was found or roots could not be resolved.
class VarietyError : public std::runtime_error {
 public:
  VarietyError(const std::string& what, double condition)
      : std::runtime_error(what + " (condition estimate " + std::to_string(condition) + ")"),
        condition_(condition) {}
  double condition() const { return condition_; }

 private:
  double condition_;
};

/// Rational univariate representation of a zero-dimensional quotient:
/// the points are x_i = coordinate[i](t) at the roots t of factors[k-1],
/// each root of factors[k-1] carrying multiplicity k.
struct UnivariateRepresentation {
  std::vector<Rational> separating_form;  // t = sum_i c_i x_i
  std::vector<UPoly> factors;
  std::vector<UPoly> coordinates;
  std::size_t distinct_points = 0;
};

/// Characteristic polynomial via Faddeev-LeVerrier (exact).
UPoly characteristic_polynomial(const QMatrix& a);

/// Number of distinct complex points: rank of the trace form Tr(M_{b_j b_k}).
std::size_t count_distinct_points(const QuotientAlgebra& qa);

UnivariateRepresentation univariate_representation(const QuotientAlgebra& qa, const VarietyOptions& options = {});

/// All distinct points of V(gens) with multiplicities summing to dim, each
/// classified real/complex and singular/nonsingular.
std::vector<VarietyPoint> solve_variety(const QuotientAlgebra& qa, const std::vector<Polynomial>& gens,
                                        const VarietyOptions& options = {});

/// Numerical rank of the Jacobian [dg_i/dx_j] at z.
std::size_t jacobian_rank(const std::vector<Polynomial>& gens, const ComplexVector& z, double relative_tolerance);

}  // namespace soscert
