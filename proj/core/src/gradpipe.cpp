#include "soscert/gradpipe.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "soscert/degbound.hpp"

namespace soscert {

namespace {

std::vector<Polynomial> nonzero_partials(const Polynomial& F) {
  std::vector<Polynomial> out;
  for (auto& p : gradient(F)) {
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

void require_symmetric(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (m(i, j) != m(j, i)) throw std::invalid_argument("matrix must be symmetric");
    }
  }
}

std::string index_set_text(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

GradientProblem gradient_problem(const Polynomial& F, const AssumptionOptions& options) {
  GradientProblem gp;
  gp.F = F;
  gp.partials = gradient(F);
  gp.bound = gradient_order(F);
  gp.assumption = check_gradient_assumption(F, options);
  return gp;
}

SdpSolution gradient_relaxation(const Polynomial& F, int d, const SolverOptions& options) {
  if (F.is_zero() || F.degree() < 1) throw std::invalid_argument("gradient relaxation needs a nonconstant F");
  const int deg = F.degree();
  if (2 * d < deg) {
    throw std::invalid_argument("relaxation order " + std::to_string(d) + " below the floor " +
                                std::to_string((deg + 1) / 2));
  }
  std::vector<Polynomial> partials = nonzero_partials(F);
  RelaxationOptions ro;
  ro.multiplier_degree_caps.assign(partials.size(), 2 * d - deg + 1);
  return solve(build_relaxation(F, partials, d, ro), options);
}

AssumptionReport check_gradient_assumption(const Polynomial& F, const AssumptionOptions& options) {
  if (F.is_zero() || F.degree() < 2) throw std::invalid_argument("gradient assumption needs deg F >= 2");
  const Polynomial top = top_form(F);
  std::vector<Polynomial> partials = gradient(top);
  for (std::size_t i = 0; i < partials.size(); ++i) {
    if (partials[i].is_zero()) {
      AssumptionReport rep;
      rep.resultant_nonzero = false;
      ComplexVector w(F.nvars(), Complex(0, 0));
      w[i] = Complex(1, 0);
      rep.witness = std::move(w);
      return rep;
    }
  }
  return check_at_infinity(partials, options);
}

MinorReport principal_minors_nonzero(const QMatrix& m) {
  require_symmetric(m);
  const std::size_t n = m.rows();
  if (n > 20) throw std::invalid_argument("principal minors refused for n > 20; sample subsets instead");
  MinorReport rep;
  std::vector<std::size_t> idx;
  // subsets by size, then lexicographic
  for (std::size_t k = 1; k <= n; ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      QMatrix sub(k, k);
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(idx[a], idx[b]);
      }
      ++rep.checked;
      if (sub.determinant() == 0) {
        rep.all_nonzero = false;
        for (std::size_t v : idx) rep.vanishing.push_back(v + 1);
        return rep;
      }
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return rep;
}

std::string to_string(CopositivityVerdict verdict) {
  switch (verdict) {
    case CopositivityVerdict::copositive: return "copositive";
    case CopositivityVerdict::not_copositive: return "notCopositive";
    case CopositivityVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

CopositivityVerdict copositivity_verdict_from_string(const std::string& text) {
  for (auto v : {CopositivityVerdict::copositive, CopositivityVerdict::not_copositive, CopositivityVerdict::inconclusive}) {
    if (to_string(v) == text) return v;
  }
  throw std::invalid_argument("unknown copositivity verdict: " + text);
}

Polynomial copositivity_polynomial(const QMatrix& P, const Rational& lambda) {
  require_symmetric(P);
  const std::size_t n = P.rows();
  Polynomial F(n);
  Polynomial norm2(n);
  for (std::size_t i = 0; i < n; ++i) {
    norm2.add_term(Monomial::unit(n, i, 2), 1);
    for (std::size_t j = 0; j < n; ++j) {
      F.add_term(Monomial::unit(n, i, 2) * Monomial::unit(n, j, 2), P(i, j));
    }
  }
  norm2.add_term(Monomial(n), -1);
  F += (norm2 * norm2) * lambda;
  return F;
}

CopositivityInstance certify_copositivity(const QMatrix& P, const Rational& lambda, const CopositivityOptions& options) {
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  CopositivityInstance inst;
  inst.P = P;
  inst.lambda = lambda;
  inst.F_lambda = copositivity_polynomial(P, lambda);
  inst.tried_lambdas.push_back(lambda);
  const std::size_t n = P.rows();

  QMatrix shifted = P;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) shifted(i, j) += lambda;
  }
  inst.minors = principal_minors_nonzero(shifted);

  // y^T (P + lambda 11^T) y < 0 for some 0/1 vector y: F_lambda is unbounded below,
  // lambda <= -alpha_* and P is not copositive.
  if (n <= 20) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Rational q = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (((mask >> i) & 1) && ((mask >> j) & 1)) q += shifted(i, j);
        }
      }
      if (q < 0) {
        inst.verdict = CopositivityVerdict::not_copositive;
        inst.status = SdpStatus::unbounded_below;
        inst.certified_value = -std::numeric_limits<double>::infinity();
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < n; ++i) {
          if ((mask >> i) & 1) support.push_back(i + 1);
        }
        inst.notes.push_back("lambda below -alpha_*: F_lambda is unbounded below along the support " +
                             index_set_text(support));
        return inst;
      }
    }
  }

  inst.order = options.order > 0 ? options.order : gradient_order(inst.F_lambda);
  SdpSolution sol = gradient_relaxation(inst.F_lambda, inst.order, options.solver);
  inst.status = sol.status;
  inst.certified_value = sol.fd;
  // F_d <= F_* always, so a nonnegative value certifies copositivity even without the
  // minor condition; a negative one is only conclusive when the bound is known tight.
  if (sol.fd >= -options.value_tolerance && sol.status == SdpStatus::optimal) {
    inst.verdict = CopositivityVerdict::copositive;
  } else if (!inst.minors.all_nonzero) {
    inst.verdict = CopositivityVerdict::inconclusive;
    inst.notes.push_back("principal minor " + index_set_text(inst.minors.vanishing) +
                         " of P + lambda 11^T vanishes");
  } else if (sol.status == SdpStatus::optimal || sol.status == SdpStatus::unbounded_below) {
    inst.verdict = CopositivityVerdict::not_copositive;
  } else {
    inst.verdict = CopositivityVerdict::inconclusive;
    inst.notes.push_back("solver status " + to_string(sol.status));
  }
  if (sol.gram_trace_growth) inst.notes.push_back("Gram trace growth at lambda " + to_string(lambda));
  return inst;
}

CopositivityInstance certify_copositivity(const QMatrix& P, const CopositivityOptions& options) {
  std::vector<Rational> tried;
  CopositivityInstance last;
  bool have_last = false;
  for (Rational lambda = 1; lambda <= Rational(1 << 20); lambda *= 4) {
    CopositivityInstance inst = certify_copositivity(P, lambda, options);
    tried.push_back(lambda);
    const bool stable = have_last && inst.verdict != CopositivityVerdict::inconclusive && inst.verdict == last.verdict;
    last = std::move(inst);
    have_last = true;
    if (stable) {
      last.tried_lambdas = tried;
      return last;
    }
  }
  last.tried_lambdas = tried;
  last.verdict = CopositivityVerdict::inconclusive;
  last.notes.push_back("verdict not stable up to lambda 2^20");
  return last;
}

}  // namespace soscert
