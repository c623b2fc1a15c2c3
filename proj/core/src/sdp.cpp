#include "soscert/sdp.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "soscert/degbound.hpp"

namespace soscert {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

Index ix(std::size_t i) { return static_cast<Index>(i); }

// Orthonormal basis of the orthogonal complement of range(a), a has rows() = ambient dimension.
MatrixXd complement_of_range(const MatrixXd& a, double threshold = 1e-10) {
  const Index k = a.rows();
  if (a.cols() == 0) return MatrixXd::Identity(k, k);
  MatrixXd scaled = a;
  for (Index c = 0; c < scaled.cols(); ++c) {
    const double nrm = scaled.col(c).norm();
    if (nrm > 0) scaled.col(c) /= nrm;
  }
  Eigen::ColPivHouseholderQR<MatrixXd> qr(scaled);
  qr.setThreshold(threshold);
  const Index rank = qr.rank();
  MatrixXd q = qr.householderQ() * MatrixXd::Identity(k, k);
  return q.rightCols(k - rank);
}

double inner(const MatrixXd& a, const MatrixXd& b) { return a.cwiseProduct(b).sum(); }

MatrixXd sym(const MatrixXd& a) { return 0.5 * (a + a.transpose()); }

// Largest step in (0, 1] keeping x + alpha dx positive semidefinite, given x = l l^T.
double max_step(const Eigen::LLT<MatrixXd>& chol, const MatrixXd& dx) {
  if (dx.rows() == 0) return 1.0;
  MatrixXd t = chol.matrixL().solve(dx);
  t = chol.matrixL().solve(t.transpose()).transpose();
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(sym(t), Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues()(0);
  if (lo >= 0) return 1.0;
  return std::min(1.0, -1.0 / lo);
}

std::vector<int> default_caps(const std::vector<Polynomial>& gens, int d) {
  std::vector<int> caps;
  for (const auto& g : gens) caps.push_back(2 * d - g.degree());
  return caps;
}

}  // namespace

std::string to_string(SdpStatus status) {
  switch (status) {
    case SdpStatus::optimal: return "optimal";
    case SdpStatus::infeasible: return "infeasible";
    case SdpStatus::unbounded_below: return "unbounded-below";
    case SdpStatus::max_iter: return "max-iter";
  }
  return "max-iter";
}

SdpStatus sdp_status_from_string(const std::string& text) {
  for (auto s : {SdpStatus::optimal, SdpStatus::infeasible, SdpStatus::unbounded_below, SdpStatus::max_iter}) {
    if (to_string(s) == text) return s;
  }
  throw std::invalid_argument("unknown sdp status: " + text);
}

SdpProblem build_relaxation(const Polynomial& f, const std::vector<Polynomial>& gens, int d,
                            const RelaxationOptions& options) {
  const std::size_t n = f.nvars();
  int max_gen = 0;
  for (const auto& g : gens) {
    if (g.nvars() != n) throw std::invalid_argument("constraint arity does not match the objective");
    if (g.is_zero()) throw std::invalid_argument("generators must be nonzero");
    max_gen = std::max(max_gen, g.degree());
  }
  if (d < 0 || 2 * d < max_gen) {
    throw std::invalid_argument("relaxation order " + std::to_string(d) + " below the floor " +
                                std::to_string((max_gen + 1) / 2));
  }
  std::vector<int> caps = options.multiplier_degree_caps.empty() ? default_caps(gens, d) : options.multiplier_degree_caps;
  if (caps.size() != gens.size()) throw std::invalid_argument("one multiplier cap per constraint expected");

  SdpProblem p;
  p.nvars = n;
  p.order = d;
  p.gram_basis = monomials_up_to(n, d);
  p.moment_matrix_size = p.gram_basis.size();
  const int top = std::max(2 * d, f.is_zero() ? 0 : f.degree());
  p.coefficient_basis = monomials_up_to(n, top);
  std::unordered_map<Monomial, std::size_t, MonomialHash> where;
  for (std::size_t i = 0; i < p.coefficient_basis.size(); ++i) where.emplace(p.coefficient_basis[i], i);
  const std::size_t K = p.coefficient_basis.size();
  const std::size_t N = p.gram_basis.size();

  p.f_coefficients = VectorXd::Zero(ix(K));
  for (const auto& [m, c] : f.terms()) p.f_coefficients(ix(where.at(m))) = c.get_d();
  p.coefficient_scale = std::max(1.0, p.f_coefficients.lpNorm<Eigen::Infinity>());

  std::vector<VectorXd> cols;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    LocalizingBlock block;
    block.constraint = i;
    block.degree_cap = std::min(caps[i], top - gens[i].degree());
    block.first_column = cols.size();
    if (block.degree_cap >= 0) block.monomials = monomials_up_to(n, block.degree_cap);
    for (const auto& beta : block.monomials) {
      VectorXd col = VectorXd::Zero(ix(K));
      for (const auto& [m, c] : gens[i].terms()) col(ix(where.at(beta * m))) += c.get_d();
      cols.push_back(std::move(col));
    }
    p.localizing_blocks.push_back(std::move(block));
  }
  p.ideal_columns = MatrixXd::Zero(ix(K), ix(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) p.ideal_columns.col(ix(c)) = cols[c];

  // Ideal members of degree <= d contribute nothing to v^T X v modulo the multiplier span.
  p.face = MatrixXd::Identity(ix(N), ix(N));
  if (options.facial_reduction) {
    std::unordered_map<Monomial, std::size_t, MonomialHash> gram_where;
    for (std::size_t j = 0; j < N; ++j) gram_where.emplace(p.gram_basis[j], j);
    std::vector<VectorXd> members;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int room = std::min(caps[i] - d, d - gens[i].degree());
      if (room < 0) continue;
      for (const auto& beta : monomials_up_to(n, room)) {
        VectorXd v = VectorXd::Zero(ix(N));
        for (const auto& [m, c] : gens[i].terms()) v(ix(gram_where.at(beta * m))) += c.get_d();
        members.push_back(std::move(v));
      }
    }
    if (!members.empty()) {
      MatrixXd l(ix(N), ix(members.size()));
      for (std::size_t c = 0; c < members.size(); ++c) l.col(ix(c)) = members[c];
      p.face = complement_of_range(l);
    }
  }
  const Index r = p.face.cols();

  // phi: phi(1) = 1 and phi annihilates the multiplier span.
  MatrixXd z = complement_of_range(p.ideal_columns);
  VectorXd phi = z * z.row(0).transpose();
  if (phi.size() == 0 || phi(0) < 1e-10) {
    p.unit_in_ideal = true;
    return p;
  }
  phi /= phi(0);

  MatrixXd free_cols(ix(K), p.ideal_columns.cols() + 1);
  free_cols.col(0) = VectorXd::Unit(ix(K), 0);
  free_cols.rightCols(p.ideal_columns.cols()) = p.ideal_columns;
  MatrixXd w = complement_of_range(free_cols);

  // pair (j, k) of the Gram basis -> coefficient index of v_j v_k
  std::vector<std::size_t> pair(N * N);
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t k = 0; k < N; ++k) pair[j * N + k] = where.at(p.gram_basis[j] * p.gram_basis[k]);
  }
  auto lift = [&](const VectorXd& coeffs) {
    MatrixXd m(ix(N), ix(N));
    for (std::size_t j = 0; j < N; ++j) {
      for (std::size_t k = 0; k < N; ++k) m(ix(j), ix(k)) = coeffs(ix(pair[j * N + k]));
    }
    return MatrixXd(p.face.transpose() * m * p.face);
  };

  p.objective = sym(lift(phi));
  p.objective_offset = phi.dot(p.f_coefficients);

  // Collapse the projected equations onto an orthonormal, independent set.
  const Index raw = w.cols();
  const Index t = r * (r + 1) / 2;
  MatrixXd a(raw, t);
  VectorXd b(raw);
  const double root2 = std::sqrt(2.0);
  for (Index k = 0; k < raw; ++k) {
    MatrixXd ak = sym(lift(w.col(k)));
    Index c = 0;
    for (Index i = 0; i < r; ++i) {
      for (Index j = i; j < r; ++j) a(k, c++) = i == j ? ak(i, i) : root2 * ak(i, j);
    }
    b(k) = w.col(k).dot(p.f_coefficients);
  }
  if (raw == 0) {
    p.rhs = VectorXd(0);
    return p;
  }
  if (t == 0) {
    p.rhs = VectorXd(0);
    p.inconsistent = b.norm() > 1e-8 * (1.0 + p.f_coefficients.norm());
    return p;
  }
  Eigen::BDCSVD<MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const VectorXd& s = svd.singularValues();
  Index rank = 0;
  while (rank < s.size() && s(rank) > 1e-9 * std::max(1.0, s(0))) ++rank;
  const MatrixXd u = svd.matrixU().leftCols(rank);
  const VectorXd outside = b - u * (u.transpose() * b);
  p.inconsistent = outside.norm() > 1e-8 * (1.0 + b.norm());
  VectorXd ub = u.transpose() * b;
  p.rhs = VectorXd(rank);
  for (Index k = 0; k < rank; ++k) {
    MatrixXd ak(r, r);
    const auto v = svd.matrixV().col(k);
    Index c = 0;
    for (Index i = 0; i < r; ++i) {
      for (Index j = i; j < r; ++j) {
        if (i == j) {
          ak(i, i) = v(c++);
        } else {
          ak(i, j) = ak(j, i) = v(c++) / root2;
        }
      }
    }
    p.constraint_matrices.push_back(std::move(ak));
    p.rhs(k) = ub(k) / s(k);
  }
  return p;
}

SdpSolution solve(const SdpProblem& prob, const SolverOptions& opts) {
  SdpSolution sol;
  sol.order = prob.order;
  sol.gram_basis = prob.gram_basis;
  const Index nbasis = ix(prob.gram_basis.size());
  sol.gram = MatrixXd::Zero(nbasis, nbasis);
  if (prob.unit_in_ideal) {
    sol.status = SdpStatus::infeasible;
    sol.fd = std::numeric_limits<double>::infinity();
    return sol;
  }
  if (prob.inconsistent) {
    sol.status = SdpStatus::unbounded_below;
    sol.fd = -std::numeric_limits<double>::infinity();
    return sol;
  }

  // Optional bound tr(Y) <= T through one extra slack eigenvalue: Y sits in the
  // leading r x r block of an (r + 1) x (r + 1) variable whose data is block diagonal.
  const Index rg = prob.face.cols();
  const bool bounded = opts.trace_bound > 0 && rg > 0;
  const double trace_cap = opts.trace_bound * prob.coefficient_scale;
  const Index r = bounded ? rg + 1 : rg;
  std::vector<MatrixXd> A;
  for (const auto& a : prob.constraint_matrices) {
    MatrixXd e = MatrixXd::Zero(r, r);
    e.topLeftCorner(rg, rg) = a;
    A.push_back(std::move(e));
  }
  MatrixXd C = MatrixXd::Zero(r, r);
  C.topLeftCorner(rg, rg) = prob.objective;
  VectorXd b = prob.rhs;
  if (bounded) {
    A.push_back(MatrixXd::Identity(r, r) / std::sqrt(static_cast<double>(r)));
    b.conservativeResize(b.size() + 1);
    b(b.size() - 1) = trace_cap / std::sqrt(static_cast<double>(r));
  }
  const Index m = b.size();

  auto op = [&](const MatrixXd& x) {
    VectorXd out(m);
    for (Index k = 0; k < m; ++k) out(k) = inner(A[static_cast<std::size_t>(k)], x);
    return out;
  };
  auto adj = [&](const VectorXd& y) {
    MatrixXd out = MatrixXd::Zero(r, r);
    for (Index k = 0; k < m; ++k) out += y(k) * A[static_cast<std::size_t>(k)];
    return out;
  };

  const double norm_b = b.norm();
  const double norm_c = C.norm();
  double xi = std::max(10.0, std::sqrt(static_cast<double>(r)));
  for (Index k = 0; k < m; ++k) {
    xi = std::max(xi, std::sqrt(static_cast<double>(r)) * (1.0 + std::abs(b(k))) / (1.0 + A[static_cast<std::size_t>(k)].norm()));
  }
  const double eta = std::max({10.0, std::sqrt(static_cast<double>(r)), norm_c});
  MatrixXd X = xi * MatrixXd::Identity(r, r);
  MatrixXd S = eta * MatrixXd::Identity(r, r);
  VectorXd y = VectorXd::Zero(m);

  double trace_mark = -1.0;
  bool diverged_primal = false;
  bool diverged_dual = false;
  // Past the tolerances the iteration continues while it keeps improving; the best
  // iterate by the scaled merit max(gap / tol, infeasibilities / tol) is returned.
  struct Snapshot {
    MatrixXd x, s;
    VectorXd y;
    double merit = std::numeric_limits<double>::infinity();
    double gap = 0, pinf = 0, dinf = 0;
  } best;
  int stalled = 0;
  int it = 0;
  for (; r > 0; ++it) {
    const VectorXd rp = b - op(X);
    const MatrixXd rd = C - S - adj(y);
    const double pobj = inner(C, X);
    const double dobj = b.dot(y);
    const double xs = inner(X, S);
    const double scale = 1.0 + std::abs(pobj) + std::abs(dobj);
    const double gap = std::max(xs, std::abs(pobj - dobj)) / scale;
    const double pinf = rp.norm() / (1.0 + norm_b);
    const double dinf = rd.norm() / (1.0 + norm_c);
    const double gram_trace = X.topLeftCorner(rg, rg).trace();
    sol.trace_history.push_back(gram_trace);
    if (trace_mark < 0 && gap <= 1e-3 && pinf <= 1e-3 && dinf <= 1e-3) trace_mark = gram_trace;
    const double merit =
        std::max({gap / opts.gap_tolerance, pinf / opts.feasibility_tolerance, dinf / opts.feasibility_tolerance});
    if (merit < 0.5 * best.merit) {
      stalled = 0;
    } else {
      ++stalled;
    }
    if (merit < best.merit) best = Snapshot{X, S, y, merit, gap, pinf, dinf};
    if (best.merit <= 1e-3 || (best.merit <= 1.0 && stalled >= 3)) break;
    if (dinf <= 1e-6 && dobj > 1e10 * (1.0 + std::abs(pobj))) {
      diverged_dual = true;
      break;
    }
    if (pinf <= 1e-6 && pobj < -1e10 * (1.0 + std::abs(dobj))) {
      diverged_primal = true;
      break;
    }
    if (it >= opts.max_iterations) break;

    Eigen::LLT<MatrixXd> lx(X), ls(S);
    if (lx.info() != Eigen::Success || ls.info() != Eigen::Success) break;
    const MatrixXd lmat = lx.matrixL();
    const MatrixXd rmat = ls.matrixL();
    Eigen::JacobiSVD<MatrixXd> nt(rmat.transpose() * lmat, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const VectorXd lam = nt.singularValues();
    if (lam.minCoeff() <= 0) break;
    const MatrixXd g = lmat * nt.matrixV() * lam.cwiseInverse().cwiseSqrt().asDiagonal();
    const MatrixXd ginv = lam.cwiseSqrt().asDiagonal() * nt.matrixV().transpose() *
                          lmat.triangularView<Eigen::Lower>().solve(MatrixXd::Identity(r, r));
    const MatrixXd wmat = g * g.transpose();

    MatrixXd schur(m, m);
    std::vector<MatrixXd> wAw(static_cast<std::size_t>(m));
    for (Index l = 0; l < m; ++l) wAw[static_cast<std::size_t>(l)] = wmat * A[static_cast<std::size_t>(l)] * wmat;
    for (Index k = 0; k < m; ++k) {
      for (Index l = k; l < m; ++l) schur(k, l) = schur(l, k) = inner(A[static_cast<std::size_t>(k)], wAw[static_cast<std::size_t>(l)]);
    }
    Eigen::LDLT<MatrixXd> schur_f(schur);
    if (m > 0 && schur_f.info() != Eigen::Success) break;
    const MatrixXd w_rd_w = wmat * rd * wmat;

    auto direction = [&](const MatrixXd& rc, MatrixXd& dx, VectorXd& dy, MatrixXd& ds) {
      MatrixXd t(r, r);
      for (Index i = 0; i < r; ++i) {
        for (Index j = 0; j < r; ++j) t(i, j) = rc(i, j) / (lam(i) + lam(j));
      }
      const MatrixXd gtg = g * t * g.transpose();
      const VectorXd rhs = rp - op(gtg) + op(w_rd_w);
      dy = m > 0 ? VectorXd(schur_f.solve(rhs)) : VectorXd(0);
      ds = sym(rd - adj(dy));
      dx = sym(gtg - wmat * ds * wmat);
      for (int pass = 0; pass < 2 && m > 0; ++pass) {
        const VectorXd e = rp - op(dx);
        const VectorXd dfix = schur_f.solve(e);
        dy += dfix;
        const MatrixXd a_fix = adj(dfix);
        ds = sym(ds - a_fix);
        dx = sym(dx + wmat * a_fix * wmat);
      }
    };

    const double mu = xs / static_cast<double>(r);
    MatrixXd rc = MatrixXd::Zero(r, r);
    for (Index i = 0; i < r; ++i) rc(i, i) = -2.0 * lam(i) * lam(i);
    MatrixXd dxa, dsa;
    VectorXd dya;
    direction(rc, dxa, dya, dsa);
    const double ap = max_step(lx, dxa);
    const double ad = max_step(ls, dsa);
    const double mu_aff = inner(X + ap * dxa, S + ad * dsa) / static_cast<double>(r);
    const double expon = std::max(1.0, 3.0 * std::min(ap, ad) * std::min(ap, ad));
    const double sigma = std::min(1.0, std::pow(std::max(mu_aff, 0.0) / mu, expon));

    const MatrixXd dxs = ginv * dxa * ginv.transpose();
    const MatrixXd dss = g.transpose() * dsa * g;
    rc = -(dxs * dss + dss * dxs);
    for (Index i = 0; i < r; ++i) rc(i, i) += 2.0 * sigma * mu - 2.0 * lam(i) * lam(i);
    MatrixXd dx, ds;
    VectorXd dy;
    direction(rc, dx, dy, ds);
    const double alpha_p = std::min(1.0, opts.step_fraction * max_step(lx, dx));
    const double alpha_d = std::min(1.0, opts.step_fraction * max_step(ls, ds));
    X = sym(X + alpha_p * dx);
    y += alpha_d * dy;
    S = sym(S + alpha_d * ds);
  }
  sol.iterations = it;
  if (diverged_primal) {
    sol.status = SdpStatus::infeasible;
    sol.fd = std::numeric_limits<double>::infinity();
    return sol;
  }
  if (diverged_dual) {
    sol.status = SdpStatus::unbounded_below;
    sol.fd = -std::numeric_limits<double>::infinity();
    return sol;
  }
  bool converged = r == 0;
  if (r > 0) {
    X = best.x;
    S = best.s;
    y = best.y;
    sol.duality_gap = best.gap;
    sol.primal_infeasibility = best.pinf;
    sol.dual_infeasibility = best.dinf;
    converged = best.merit <= 1.0;
  }
  const double pobj = inner(C, X);
  const double dobj = b.dot(y);
  sol.status = converged ? SdpStatus::optimal : SdpStatus::max_iter;
  sol.fd = prob.objective_offset - pobj;
  sol.dual_value = prob.objective_offset - dobj;
  const double final_trace = X.topLeftCorner(rg, rg).trace();
  if (trace_mark > 0) sol.gram_trace_growth = final_trace > opts.trace_growth_factor * trace_mark;
  if (bounded && final_trace > 0.5 * trace_cap) sol.gram_trace_growth = true;

  sol.gram = sym(prob.face * X.topLeftCorner(rg, rg) * prob.face.transpose());
  // Multipliers from the coefficient residual f - f_d - v^T X v by least squares.
  const std::size_t N = prob.gram_basis.size();
  std::unordered_map<Monomial, std::size_t, MonomialHash> where;
  for (std::size_t i = 0; i < prob.coefficient_basis.size(); ++i) where.emplace(prob.coefficient_basis[i], i);
  VectorXd res = prob.f_coefficients;
  res(0) -= sol.fd;
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t k = 0; k < N; ++k) res(ix(where.at(prob.gram_basis[j] * prob.gram_basis[k]))) -= sol.gram(ix(j), ix(k));
  }
  VectorXd coeffs = VectorXd::Zero(prob.ideal_columns.cols());
  if (prob.ideal_columns.cols() > 0) coeffs = prob.ideal_columns.completeOrthogonalDecomposition().solve(res);
  for (const auto& block : prob.localizing_blocks) {
    RealPolynomial lambda(prob.nvars);
    for (std::size_t c = 0; c < block.monomials.size(); ++c) {
      const double v = coeffs(ix(block.first_column + c));
      if (v != 0.0) lambda.add_term(block.monomials[c], v);
    }
    sol.multipliers.push_back(std::move(lambda));
  }
  return sol;
}

std::vector<SdpSolution> hierarchy_sweep(const Polynomial& f, const std::vector<Polynomial>& gens, int dmin, int dmax,
                                         const SolverOptions& options) {
  std::vector<SdpSolution> out;
  for (int d = dmin; d <= dmax; ++d) out.push_back(solve(build_relaxation(f, gens, d), options));
  return out;
}

std::vector<RealPolynomial> extract_sos(const MatrixXd& gram, const std::vector<Monomial>& monomials, double tol) {
  if (gram.rows() != gram.cols() || static_cast<std::size_t>(gram.rows()) != monomials.size()) {
    throw std::invalid_argument("Gram matrix and monomial list disagree in size");
  }
  std::vector<RealPolynomial> out;
  if (monomials.empty()) return out;
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(sym(gram));
  const std::size_t n = monomials.front().nvars();
  for (Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double mu = es.eigenvalues()(k);
    if (mu < -100.0 * tol) throw std::invalid_argument("Gram not PSD");
    if (mu < tol) continue;
    RealPolynomial s(n);
    const double root = std::sqrt(mu);
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      const double c = root * es.eigenvectors()(ix(j), k);
      if (c != 0.0) s.add_term(monomials[j], c);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Certificate gram_certificate(const Polynomial& f, const std::vector<Polynomial>& gens, const SdpSolution& solution) {
  if (!std::isfinite(solution.fd)) throw std::invalid_argument("no finite bound to certify");
  Certificate cert;
  cert.kind = Certificate::Kind::gram;
  cert.fstar_value = solution.fd;
  cert.fstar = exact_from_double(solution.fd);
  cert.gram = solution.gram;
  cert.gram_basis = solution.gram_basis;
  cert.numeric_multipliers = solution.multipliers;
  VerificationReport rep = verify_certificate(f, gens, cert);
  cert.residual = rep.residual;
  cert.degree_contract_met = rep.h_degree_ok && rep.multiplier_degree_ok;
  if (solution.status != SdpStatus::optimal) cert.notes.push_back("solver status " + to_string(solution.status));
  if (solution.gram_trace_growth) cert.notes.push_back("Gram trace growth: bound may not be attained");
  return cert;
}

void write_sdp(std::ostream& out, const SdpProblem& p) {
  const auto old = out.precision(17);
  out << "* soscert relaxation: nvars " << p.nvars << ", order " << p.order << ", moment matrix "
      << p.moment_matrix_size << "\n";
  out << "* f_d = offset + optimal value; offset " << p.objective_offset << "\n";
  out << p.rhs.size() << "\n1\n" << std::max<Index>(p.face.cols(), 1) << "\n";
  for (Index k = 0; k < p.rhs.size(); ++k) out << (k ? " " : "") << p.rhs(k);
  out << "\n";
  auto emit = [&](std::size_t mat, const MatrixXd& a, double sign) {
    for (Index i = 0; i < a.rows(); ++i) {
      for (Index j = i; j < a.cols(); ++j) {
        if (a(i, j) != 0.0) out << mat << " 1 " << i + 1 << " " << j + 1 << " " << sign * a(i, j) << "\n";
      }
    }
  };
  emit(0, p.objective, -1.0);
  for (std::size_t k = 0; k < p.constraint_matrices.size(); ++k) emit(k + 1, p.constraint_matrices[k], 1.0);
  out.precision(old);
}

}  // namespace soscert
