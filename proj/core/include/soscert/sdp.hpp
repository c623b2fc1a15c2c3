#pragma once

#include <Eigen/Dense>

#include <iosfwd>
#include <string>
#include <vector>

#include "soscert/certgen.hpp"
#include "soscert/polynomial.hpp"

namespace soscert {

/// Multiplier columns x^beta g_i of one constraint inside the coefficient-matching system.
struct LocalizingBlock {
  std::size_t constraint = 0;
  int degree_cap = 0;                  // deg lambda_i <= degree_cap
  std::vector<Monomial> monomials;     // the beta's, ascending grevlex
  std::size_t first_column = 0;        // offset into ideal_columns
};

struct RelaxationOptions {
  /// Per-constraint caps on deg lambda_i. Empty means 2d - deg g_i.
  std::vector<int> multiplier_degree_caps;
  /// Restrict the Gram matrix to the orthogonal complement of the degree-d ideal members.
  bool facial_reduction = true;
};

/// Order-d SOS program
///   maximize c  s.t.  f - c = sum_i lambda_i g_i + v^T X v,  X >= 0
/// reduced to the standard form  min <C, Y>  s.t.  <A_k, Y> = b_k,  Y >= 0,
/// with X = face * Y * face^T and c = objective_offset - <C, Y>.
struct SdpProblem {
  std::size_t nvars = 0;
  int order = 0;
  std::size_t moment_matrix_size = 0;        // C(n+d, d)
  std::vector<Monomial> gram_basis;          // degree <= d, ascending grevlex
  std::vector<Monomial> coefficient_basis;   // degree <= max(2d, deg f)
  std::vector<LocalizingBlock> localizing_blocks;

  Eigen::VectorXd f_coefficients;            // f in coefficient_basis
  double coefficient_scale = 1.0;            // max(1, max |f coefficient|)
  Eigen::MatrixXd ideal_columns;             // x^beta g_i in coefficient_basis
  Eigen::MatrixXd face;                      // N x r, orthonormal columns

  std::vector<Eigen::MatrixXd> constraint_matrices;  // r x r, symmetric
  Eigen::VectorXd rhs;
  Eigen::MatrixXd objective;                 // r x r, symmetric
  double objective_offset = 0.0;

  bool unit_in_ideal = false;                // 1 lies in the truncated ideal: f_d = +inf
  bool inconsistent = false;                 // no Gram matrix matches: f_d = -inf

  std::size_t reduced_size() const { return static_cast<std::size_t>(face.cols()); }
};

enum class SdpStatus { optimal, infeasible, unbounded_below, max_iter };

std::string to_string(SdpStatus status);
SdpStatus sdp_status_from_string(const std::string& text);

struct SolverOptions {
  double gap_tolerance = 1e-8;
  double feasibility_tolerance = 1e-8;
  int max_iterations = 200;
  double step_fraction = 0.98;
  /// Gram trace growth between gap 1e-3 and the end that counts as divergence.
  double trace_growth_factor = 10.0;
  /// tr(X) <= trace_bound * max(1, max |f coefficient|) on the Gram matrix; 0 disables the bound.
  double trace_bound = 1e4;
};

struct SdpSolution {
  SdpStatus status = SdpStatus::max_iter;
  int order = 0;
  double fd = 0.0;
  double dual_value = 0.0;                  // value from the moment side
  double duality_gap = 0.0;                 // relative gap at exit
  double primal_infeasibility = 0.0;
  double dual_infeasibility = 0.0;
  int iterations = 0;
  Eigen::MatrixXd gram;                     // over gram_basis
  std::vector<Monomial> gram_basis;
  std::vector<RealPolynomial> multipliers;
  std::vector<double> trace_history;
  bool gram_trace_growth = false;
};

/// Throws std::invalid_argument when d is below ceil(max deg g_i / 2).
SdpProblem build_relaxation(const Polynomial& f, const std::vector<Polynomial>& gens, int d,
                            const RelaxationOptions& options = {});

SdpSolution solve(const SdpProblem& problem, const SolverOptions& options = {});

std::vector<SdpSolution> hierarchy_sweep(const Polynomial& f, const std::vector<Polynomial>& gens, int dmin, int dmax,
                                         const SolverOptions& options = {});

/// sigma_j = sqrt(mu_j) u_j^T v over the eigenpairs with mu_j >= tol.
/// Throws std::invalid_argument("Gram not PSD") when an eigenvalue is below -100 tol.
std::vector<RealPolynomial> extract_sos(const Eigen::MatrixXd& gram, const std::vector<Monomial>& monomials,
                                        double tol = 1e-9);

/// Gram-kind certificate f - f_d = sum lambda_i g_i + v^T X v, residual filled by verify_certificate.
Certificate gram_certificate(const Polynomial& f, const std::vector<Polynomial>& gens, const SdpSolution& solution);

/// Text dump of the reduced problem, see README.
void write_sdp(std::ostream& out, const SdpProblem& problem);

}  // namespace soscert
