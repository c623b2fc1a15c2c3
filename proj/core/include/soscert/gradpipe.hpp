#pragma once

#include <string>
#include <vector>

#include "soscert/assumption.hpp"
#include "soscert/qmatrix.hpp"
#include "soscert/sdp.hpp"

namespace soscert {

struct GradientProblem {
  Polynomial F;
  std::vector<Polynomial> partials;
  int bound = 0;                  // max(n (deg F - 2), ceil(deg F / 2))
  AssumptionReport assumption;    // on the partials of the top form of F
};

GradientProblem gradient_problem(const Polynomial& F, const AssumptionOptions& options = {});

/// F_d of minimize F subject to grad F = 0, with deg lambda_i <= 2d - deg F + 1.
/// Throws std::invalid_argument when d < ceil(deg F / 2).
SdpSolution gradient_relaxation(const Polynomial& F, int d, const SolverOptions& options = {});

/// check_at_infinity on the partials of the top form of F. An identically zero
/// partial d/dx_i gives false with witness e_i.
AssumptionReport check_gradient_assumption(const Polynomial& F, const AssumptionOptions& options = {});

struct MinorReport {
  bool all_nonzero = true;
  std::vector<std::size_t> vanishing;   // first index set (1-based) with zero determinant
  std::size_t checked = 0;              // number of minors evaluated
};

/// Exact determinants of the principal submatrices, by size then lexicographically,
/// stopping at the first zero. Refuses n > 20.
MinorReport principal_minors_nonzero(const QMatrix& m);

enum class CopositivityVerdict { copositive, not_copositive, inconclusive };

std::string to_string(CopositivityVerdict verdict);
CopositivityVerdict copositivity_verdict_from_string(const std::string& text);

struct CopositivityInstance {
  QMatrix P;
  Rational lambda = 1;
  Polynomial F_lambda;
  CopositivityVerdict verdict = CopositivityVerdict::inconclusive;
  double certified_value = 0.0;         // F_{lambda,d} at the order used
  int order = 0;
  SdpStatus status = SdpStatus::max_iter;
  MinorReport minors;
  std::vector<Rational> tried_lambdas;
  std::vector<std::string> notes;
};

struct CopositivityOptions {
  SolverOptions solver;
  double value_tolerance = 1e-6;
  /// Relaxation order; 0 uses max(n (deg F - 2), 2) = 2n.
  int order = 0;
};

/// sum_ij x_i^2 x_j^2 P_ij + lambda (x_1^2 + ... + x_n^2 - 1)^2
Polynomial copositivity_polynomial(const QMatrix& P, const Rational& lambda);

/// Single lambda. Verdict copositive iff F_{lambda,d} >= -value_tolerance. A negative value
/// is inconclusive when a principal minor of P + lambda 11^T vanishes or the solver stalls.
CopositivityInstance certify_copositivity(const QMatrix& P, const Rational& lambda,
                                          const CopositivityOptions& options = {});

/// lambda = 1, 4, 16, ... up to 2^20 until two consecutive verdicts agree.
CopositivityInstance certify_copositivity(const QMatrix& P, const CopositivityOptions& options = {});

}  // namespace soscert
