#include "soscert/variety.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>

namespace soscert {

namespace {

Rational trace(const QMatrix& a) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

// Tr(A B) without forming the product.
Rational trace_of_product(const QMatrix& a, const QMatrix& b) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) != 0 && b(k, i) != 0) t += a(i, k) * b(k, i);
    }
  }
  return t;
}

QMatrix monomial_matrix(const QuotientAlgebra& qa, const Monomial& m) {
  const std::size_t d = *qa.dim;
  QMatrix out = QMatrix::identity(d);
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    for (int e = 0; e < m[i]; ++e) out = qa.multiplication[i] * out;
  }
  return out;
}

}  // namespace

UPoly characteristic_polynomial(const QMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    c[n - k] = -trace_of_product(a, m) / Rational(static_cast<long>(k));
  }
  return UPoly(std::move(c));
}

std::size_t count_distinct_points(const QuotientAlgebra& qa) {
  if (!qa.dim) throw std::invalid_argument("count_distinct_points needs a finite quotient");
  const std::size_t d = *qa.dim;
  std::vector<QMatrix> mats;
  mats.reserve(d);
  for (const auto& b : qa.basis) mats.push_back(monomial_matrix(qa, b));
  QMatrix hermite(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = j; k < d; ++k) {
      hermite(j, k) = trace_of_product(mats[j], mats[k]);
      hermite(k, j) = hermite(j, k);
    }
  }
  return hermite.rank();
}

UnivariateRepresentation univariate_representation(const QuotientAlgebra& qa, const VarietyOptions& options) {
  if (!qa.dim) throw std::invalid_argument("univariate_representation needs a finite quotient");
  const std::size_t n = qa.gb.nvars;
  const std::size_t d = *qa.dim;
  const std::size_t target = count_distinct_points(qa);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> coef(1, 24);

  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    UnivariateRepresentation rep;
    QMatrix l(d, d);
    for (std::size_t i = 0; i < n; ++i) {
      // The first attempt uses the fixed form x1 + 2 x2 + 3 x3 + ... for readability.
      Rational c = attempt == 0 ? Rational(static_cast<long>(i + 1)) : Rational(coef(rng));
      rep.separating_form.push_back(c);
      l = l + qa.multiplication[i].scaled(c);
    }
    UPoly chi = characteristic_polynomial(l);
    rep.factors = squarefree_decomposition(chi);
    std::size_t s = 0;
    for (const auto& f : rep.factors) s += static_cast<std::size_t>(std::max(f.degree(), 0));
    if (s != target) continue;
    rep.distinct_points = s;

    // Power traces: tau[p] = Tr(L^p), sigma[i][m] = Tr(M_i L^m).
    std::vector<Rational> tau(2 * s);
    std::vector<std::vector<Rational>> sigma(n, std::vector<Rational>(s));
    QMatrix power = QMatrix::identity(d);
    for (std::size_t p = 0; p + 1 < 2 * s || p == 0; ++p) {
      tau[p] = trace(power);
      if (p < s) {
        for (std::size_t i = 0; i < n; ++i) sigma[i][p] = trace_of_product(qa.multiplication[i], power);
      }
      if (p + 2 < 2 * s) power = l * power;
    }
    QMatrix hankel(s, s);
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = 0; b < s; ++b) hankel(a, b) = tau[a + b];
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      auto phi = hankel.solve(sigma[i]);
      if (!phi) {
        ok = false;
        break;
      }
      rep.coordinates.emplace_back(*phi);
    }
    if (!ok) continue;
    return rep;
  }
  throw VarietyError("no separating linear form found after " + std::to_string(options.max_attempts) + " attempts",
                     static_cast<double>(target));
}

std::size_t jacobian_rank(const std::vector<Polynomial>& gens, const ComplexVector& z, double relative_tolerance) {
  const std::size_t n = z.size();
  Eigen::MatrixXcd jac(static_cast<Eigen::Index>(gens.size()), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      jac(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          eval_complex(gens[i].derivative(j), std::span<const Complex>(z));
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(jac);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  std::size_t rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) > relative_tolerance * sv(0)) ++rank;
  }
  return rank;
}

std::vector<VarietyPoint> solve_variety(const QuotientAlgebra& qa, const std::vector<Polynomial>& gens,
                                        const VarietyOptions& options) {
  if (!qa.dim) throw std::invalid_argument("solve_variety needs a zero-dimensional ideal");
  if (*qa.dim == 0) return {};
  const std::size_t n = qa.gb.nvars;
  UnivariateRepresentation rep = univariate_representation(qa, options);

  std::vector<VarietyPoint> points;
  for (std::size_t k = 0; k < rep.factors.size(); ++k) {
    const UPoly& factor = rep.factors[k];
    if (factor.degree() < 1) continue;
    std::vector<Complex> roots = factor.roots();
    const int real_count = factor.count_real_roots();
    // The real_count roots closest to the real axis are the real ones.
    std::vector<std::size_t> order(roots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(roots[a].imag()) < std::abs(roots[b].imag());
    });
    std::vector<bool> real(roots.size(), false);
    for (int r = 0; r < real_count; ++r) {
      real[order[static_cast<std::size_t>(r)]] = true;
      roots[order[static_cast<std::size_t>(r)]].imag(0.0);
    }

    for (std::size_t r = 0; r < roots.size(); ++r) {
      VarietyPoint pt;
      pt.multiplicity = static_cast<int>(k + 1);
      pt.coords.resize(n);
      for (std::size_t i = 0; i < n; ++i) pt.coords[i] = rep.coordinates[i].evaluate(roots[r]);
      if (real[r]) {
        for (auto& c : pt.coords) c.imag(0.0);
        Rational t = rationalize(roots[r].real(), 100000000L);
        if (factor.evaluate(t) == 0) {
          std::vector<Rational> exact;
          for (std::size_t i = 0; i < n; ++i) exact.push_back(rep.coordinates[i].evaluate(t));
          for (std::size_t i = 0; i < n; ++i) pt.coords[i] = Complex(exact[i].get_d(), 0.0);
          pt.exact = std::move(exact);
        }
      }
      double max_imag = 0.0;
      for (const auto& c : pt.coords) max_imag = std::max(max_imag, std::abs(c.imag()));
      pt.real = max_imag <= options.real_tolerance;
      pt.singular = jacobian_rank(gens, pt.coords, options.rank_tolerance) < n;
      points.push_back(std::move(pt));
    }
  }

  std::sort(points.begin(), points.end(), [](const VarietyPoint& a, const VarietyPoint& b) {
    if (a.real != b.real) return a.real;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
      if (a.coords[i].real() != b.coords[i].real()) return a.coords[i].real() < b.coords[i].real();
      if (a.coords[i].imag() != b.coords[i].imag()) return a.coords[i].imag() < b.coords[i].imag();
    }
    return false;
  });
  return points;
}

}  // namespace soscert
