#include "soscert/certgen.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "soscert/assumption.hpp"
#include "soscert/degbound.hpp"
#include "soscert/upoly.hpp"

namespace soscert {

Polynomial sqrt_mod_power(const Polynomial& p, int k) {
  const Rational c0 = p.coefficient(Monomial(p.nvars()));
  if (c0 <= 0) throw std::invalid_argument("no unit square root");
  Rational b0;
  if (!is_rational_square(c0, &b0)) throw std::invalid_argument("constant term is not a rational square");
  return sqrt_mod_power_with_root(p, k, b0);
}

ComplexPolynomial sqrt_mod_power(const ComplexPolynomial& p, int k) {
  const Complex c0 = p.coefficient(Monomial(p.nvars()));
  if (c0 == Complex(0, 0)) throw std::invalid_argument("no unit square root");
  return sqrt_mod_power_with_root(p, k, std::sqrt(c0));
}

namespace {

// P(s + a) as a polynomial in s.
UPoly taylor_shift(const UPoly& p, const Rational& a) {
  UPoly out;
  const UPoly lin({a, Rational(1)});
  for (int k = p.degree(); k >= 0; --k) out = out * lin + UPoly({p[static_cast<std::size_t>(k)]});
  return out;
}

// Polynomial u with u = 1 mod (t - l_j)^mu_j and u = 0 mod (t - l_i)^mu_i for i != j.
UPoly idempotent_polynomial(const std::vector<Rational>& values, const std::vector<int>& mult, std::size_t j) {
  UPoly others({Rational(1)});
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i == j) continue;
    UPoly lin({Rational(-values[i]), Rational(1)});
    for (int e = 0; e < mult[i]; ++e) others = others * lin;
  }
  const int mu = mult[j];
  UPoly shifted = taylor_shift(others, values[j]);
  std::vector<Rational> c(static_cast<std::size_t>(mu));
  for (int k = 0; k < mu && k <= shifted.degree(); ++k) c[static_cast<std::size_t>(k)] = shifted[static_cast<std::size_t>(k)];
  // inverse power series of `shifted` modulo s^mu
  std::vector<Rational> w(static_cast<std::size_t>(mu));
  w[0] = 1 / c[0];
  for (int k = 1; k < mu; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) acc += c[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(k - i)];
    w[static_cast<std::size_t>(k)] = -acc / c[0];
  }
  UPoly ws = taylor_shift(UPoly(w), Rational(-values[j]));
  return others * ws;
}

// u(M) applied to the coordinate vector of 1.
QVector apply_to_one(const UPoly& u, const QMatrix& m) {
  const std::size_t d = m.rows();
  QVector v(d);
  for (int k = u.degree(); k >= 0; --k) {
    v = m * v;
    v[0] += u[static_cast<std::size_t>(k)];
  }
  return v;
}

Polynomial translate_to(const Polynomial& p, const std::vector<Rational>& point, bool forward) {
  std::vector<Rational> shift(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) shift[i] = forward ? point[i] : Rational(-point[i]);
  return p.translate(std::span<const Rational>(shift));
}

// Idempotents e_j of the quotient, one per point, as coordinate vectors.
std::vector<QVector> idempotents(const QuotientAlgebra& qa, const std::vector<std::vector<Rational>>& pts,
                                 const std::vector<int>& mult) {
  const std::size_t n = qa.gb.nvars;
  // small separating form
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = 1 + static_cast<long>((attempt * (2 * i + 1) + i * i) % 11);
    std::vector<Rational> values;
    for (const auto& x : pts) {
      Rational v = 0;
      for (std::size_t i = 0; i < n; ++i) v += c[i] * x[i];
      values.push_back(v);
    }
    auto sorted = values;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    QMatrix ml(*qa.dim, *qa.dim);
    for (std::size_t i = 0; i < n; ++i) ml = ml + qa.multiplication[i].scaled(c[i]);
    std::vector<QVector> out;
    for (std::size_t j = 0; j < pts.size(); ++j) out.push_back(apply_to_one(idempotent_polynomial(values, mult, j), ml));
    return out;
  }
  throw std::runtime_error("no separating linear form for the idempotents");
}

}  // namespace

std::optional<QuadraticSqrt> quotient_sqrt_exact(const Polynomial& p, const QuotientAlgebra& qa,
                                                 const std::vector<VarietyPoint>& points) {
  if (!qa.dim) throw std::invalid_argument("quotient_sqrt needs a zero-dimensional ideal");
  const std::size_t n = qa.gb.nvars;
  QuadraticSqrt out;
  out.rational = Polynomial(n);
  out.radical = Polynomial(n);
  if (p.is_zero() || *qa.dim == 0) return out;

  std::vector<std::vector<Rational>> pts;
  std::vector<int> mult;
  std::vector<Rational> values;
  for (std::size_t j = 0; j < points.size(); ++j) {
    const auto& pt = points[j];
    if (!pt.exact) return std::nullopt;
    Rational v = p.evaluate<Rational>(std::span<const Rational>(*pt.exact));
    if (v < 0) throw QuotientSqrtError("p is negative at real point " + std::to_string(j), j);
    if (v == 0 && pt.multiplicity > 1) {
      throw QuotientSqrtError("p vanishes at singular point " + std::to_string(j), j);
    }
    pts.push_back(*pt.exact);
    mult.push_back(pt.multiplicity);
    values.push_back(v);
  }

  // One common radicand for the non-square values.
  std::vector<Integer> radicands(values.size(), 1);
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] == 0) continue;
    Rational s;
    split_square(values[j], radicands[j], s);
    if (radicands[j] != 1) {
      if (out.radicand != 1 && out.radicand != radicands[j]) return std::nullopt;
      out.radicand = radicands[j];
    }
  }

  auto es = idempotents(qa, pts, mult);
  QVector rat(*qa.dim), rad(*qa.dim);
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (values[j] == 0) continue;
    const bool radical = radicands[j] != 1;
    Polynomial local = translate_to(p, pts[j], true);
    if (radical) local *= Rational(1) / Rational(radicands[j]);
    Polynomial r = translate_to(sqrt_mod_power(local, mult[j]), pts[j], false);
    QVector part = qa.multiplication_by(r) * es[j];
    QVector& target = radical ? rad : rat;
    for (std::size_t k = 0; k < part.size(); ++k) target[k] += part[k];
  }
  out.rational = qa.element(rat);
  out.radical = qa.element(rad);
  return out;
}

Polynomial quotient_sqrt_numeric(const Polynomial& p, const QuotientAlgebra& qa, const std::vector<VarietyPoint>& points,
                                 const NumericSqrtOptions& options) {
  if (!qa.dim) throw std::invalid_argument("quotient_sqrt needs a zero-dimensional ideal");
  const std::size_t d = *qa.dim;
  const std::size_t n = qa.gb.nvars;
  if (p.is_zero() || d == 0) return Polynomial(n);
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].multiplicity != 1) {
      throw QuotientSqrtError("numeric square root needs simple points; point " + std::to_string(j) + " is multiple", j);
    }
  }
  if (points.size() != d) throw std::invalid_argument("points do not match the quotient dimension");

  // Seed: interpolate sqrt(p) at the points, conjugate pairs get conjugate roots.
  std::vector<Complex> roots(d);
  std::vector<bool> done(d, false);
  for (std::size_t j = 0; j < d; ++j) {
    if (done[j]) continue;
    const Complex v = eval_complex(p, points[j].coords);
    if (points[j].real) {
      if (v.real() < -1e-9 * std::max(1.0, max_abs_coefficient(p))) {
        throw QuotientSqrtError("p is negative at real point " + std::to_string(j), j);
      }
      roots[j] = std::sqrt(std::max(v.real(), 0.0));
      done[j] = true;
      continue;
    }
    roots[j] = std::sqrt(v);
    done[j] = true;
    std::size_t best = d;
    double best_dist = 1e-6;
    for (std::size_t k = 0; k < d; ++k) {
      if (done[k]) continue;
      double dist = 0;
      for (std::size_t i = 0; i < n; ++i) dist = std::max(dist, std::abs(points[k].coords[i] - std::conj(points[j].coords[i])));
      if (dist < best_dist) {
        best = k;
        best_dist = dist;
      }
    }
    if (best < d) {
      roots[best] = std::conj(roots[j]);
      done[best] = true;
    }
  }
  Eigen::MatrixXcd vander(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  Eigen::VectorXcd rhs(static_cast<Eigen::Index>(d));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      vander(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
          eval_complex(Polynomial::term(qa.basis[k], 1), points[j].coords);
    }
    rhs(static_cast<Eigen::Index>(j)) = roots[j];
  }
  Eigen::VectorXcd coef = vander.fullPivLu().solve(rhs);
  QVector q(d);
  for (std::size_t k = 0; k < d; ++k) q[k] = round_dyadic(exact_from_double(coef(static_cast<Eigen::Index>(k)).real()), 60);

  // Newton in the quotient: 2 q delta = p - q^2.
  const QVector target = qa.coordinates(p);
  const Rational tol = exact_from_double(options.residual_target);
  for (int step = 0; step < options.max_newton_steps; ++step) {
    QMatrix mq = qa.multiplication_by(qa.element(q));
    QVector sq = mq * q;
    QVector r(d);
    Rational worst = 0;
    for (std::size_t k = 0; k < d; ++k) {
      r[k] = target[k] - sq[k];
      worst = std::max(worst, abs(r[k]));
    }
    if (worst <= tol) break;
    auto delta = mq.scaled(2).solve(r);
    if (!delta) break;
    for (std::size_t k = 0; k < d; ++k) q[k] = round_dyadic(q[k] + (*delta)[k], options.rounding_bits);
  }
  return qa.element(q);
}

QuadraticSqrt quotient_sqrt(const Polynomial& p, const QuotientAlgebra& qa, const std::vector<VarietyPoint>& points) {
  if (auto exact = quotient_sqrt_exact(p, qa, points)) return *exact;
  QuadraticSqrt out;
  out.rational = quotient_sqrt_numeric(p, qa, points);
  out.radical = Polynomial(qa.gb.nvars);
  return out;
}

namespace {

int max_product_degree(const std::vector<Polynomial>& lambda, const std::vector<Polynomial>& gens) {
  int worst = kZeroPolynomialDegree;
  for (std::size_t i = 0; i < gens.size() && i < lambda.size(); ++i) {
    if (!lambda[i].is_zero()) worst = std::max(worst, lambda[i].degree() + gens[i].degree());
  }
  return worst;
}

}  // namespace

VerificationReport verify_certificate(const Polynomial& f, const std::vector<Polynomial>& gens,
                                      const Certificate& cert) {
  const std::size_t n = f.nvars();
  VerificationReport rep;
  const int bound_n = frak_n(degrees_of(gens));
  const int cap = std::max(2 * bound_n, f.is_zero() ? 0 : f.degree());

  if (cert.kind == Certificate::Kind::gram) {
    RealPolynomial defect = f.cast<double>();
    defect.add_term(Monomial(n), -cert.fstar_value);
    for (std::size_t i = 0; i < gens.size() && i < cert.numeric_multipliers.size(); ++i) {
      defect -= cert.numeric_multipliers[i] * gens[i].cast<double>();
    }
    const auto& b = cert.gram_basis;
    for (std::size_t a = 0; a < b.size(); ++a) {
      for (std::size_t c = 0; c < b.size(); ++c) {
        defect.add_term(b[a] * b[c], -cert.gram(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(c)));
      }
    }
    rep.residual = max_abs_coefficient(defect);
    rep.exact_zero = false;
    int hdeg = 0;
    for (const auto& m : b) hdeg = std::max(hdeg, m.degree());
    rep.h_degree = b.empty() ? kZeroPolynomialDegree : hdeg;
    rep.h_degree_ok = hdeg <= bound_n;
    int worst = kZeroPolynomialDegree;
    for (std::size_t i = 0; i < gens.size() && i < cert.numeric_multipliers.size(); ++i) {
      if (!cert.numeric_multipliers[i].is_zero()) {
        worst = std::max(worst, cert.numeric_multipliers[i].degree() + gens[i].degree());
      }
    }
    rep.max_multiplier_product_degree = worst;
    rep.multiplier_degree_ok = worst <= cap;
    return rep;
  }

  // rational part: f - fstar - sum lambda_a g - a^2 - m b^2
  // radical part: - sum lambda_b g - 2 a b
  const Rational m(cert.radicand);
  Polynomial rational = f;
  rational.add_term(Monomial(n), -cert.fstar);
  Polynomial radical(n);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i < cert.multipliers.size()) rational -= cert.multipliers[i] * gens[i];
    if (i < cert.multipliers_radical.size()) radical -= cert.multipliers_radical[i] * gens[i];
  }
  rational -= cert.h * cert.h;
  if (!cert.h_radical.is_zero()) {
    rational -= (cert.h_radical * cert.h_radical) * m;
    radical -= (cert.h * cert.h_radical) * Rational(2);
  }
  rep.exact_zero = rational.is_zero() && radical.is_zero();
  const double sqrt_m = std::sqrt(m.get_d());
  rep.residual = std::max(max_abs_coefficient(rational), sqrt_m * max_abs_coefficient(radical));

  rep.h_degree = std::max(cert.h.degree(), cert.h_radical.degree());
  rep.h_degree_ok = rep.h_degree <= bound_n;
  rep.max_multiplier_product_degree =
      std::max(max_product_degree(cert.multipliers, gens), max_product_degree(cert.multipliers_radical, gens));
  rep.multiplier_degree_ok = rep.max_multiplier_product_degree <= cap;
  return rep;
}

namespace {

Certificate assemble(const Polynomial& f, const std::vector<Polynomial>& gens, const Rational& fstar,
                     const QuadraticSqrt& root, Certificate::Kind kind, const CertificateOptions& options) {
  const std::size_t n = f.nvars();
  Certificate cert;
  cert.kind = kind;
  cert.fstar = fstar;
  cert.fstar_value = fstar.get_d();
  cert.radicand = root.radicand;
  cert.h = root.rational;
  cert.h_radical = root.radical;

  Polynomial p = f;
  p.add_term(Monomial(n), -fstar);
  Polynomial rational = p - cert.h * cert.h;
  Polynomial radical(n);
  if (!cert.h_radical.is_zero()) {
    rational -= (cert.h_radical * cert.h_radical) * Rational(cert.radicand);
    radical = (cert.h * cert.h_radical) * Rational(-2);
  }
  if (kind == Certificate::Kind::numeric) {
    // Lift only the ideal part; the normal form is the reported defect.
    GroebnerBasis gb = buchberger(gens);
    rational -= normal_form(rational, gb);
  }
  LiftResult la = lift_membership(rational, gens, options.assumption_verified);
  cert.multipliers = std::move(la.multipliers);
  if (!radical.is_zero()) {
    LiftResult lb = lift_membership(radical, gens, options.assumption_verified);
    cert.multipliers_radical = std::move(lb.multipliers);
  } else {
    cert.multipliers_radical.assign(gens.size(), Polynomial(n));
  }
  VerificationReport rep = verify_certificate(f, gens, cert);
  cert.residual = rep.residual;
  cert.degree_contract_met = rep.h_degree_ok && rep.multiplier_degree_ok;
  if (cert.kind == Certificate::Kind::exact && !rep.exact_zero) {
    throw std::logic_error("internal error: exact certificate does not verify");
  }
  if (cert.radicand != 1) cert.notes.push_back("h has coefficients in Q(sqrt(" + cert.radicand.get_str() + "))");
  return cert;
}

}  // namespace

Certificate build_certificate(const Polynomial& f, const std::vector<Polynomial>& gens, const Rational& fstar,
                              const CertificateOptions& options) {
  QuotientAlgebra qa = quotient_algebra(buchberger(gens));
  if (!qa.dim) throw std::invalid_argument("ideal is not zero-dimensional");
  VarietyOptions vo;
  vo.seed = options.seed;
  auto points = solve_variety(qa, gens, vo);
  Polynomial p = f;
  p.add_term(Monomial(f.nvars()), -fstar);
  if (auto exact = quotient_sqrt_exact(p, qa, points)) {
    return assemble(f, gens, fstar, *exact, Certificate::Kind::exact, options);
  }
  if (!options.allow_numeric) throw std::runtime_error("no exact square root over a single quadratic extension");
  QuadraticSqrt root;
  root.rational = quotient_sqrt_numeric(p, qa, points);
  root.radical = Polynomial(f.nvars());
  Certificate cert = assemble(f, gens, fstar, root, Certificate::Kind::numeric, options);
  cert.notes.push_back("numeric square root refined in exact arithmetic; residual is the normal-form defect");
  return cert;
}

Certificate build_certificate(const Polynomial& f, const std::vector<Polynomial>& gens,
                              const CertificateOptions& options) {
  QuotientAlgebra qa = quotient_algebra(buchberger(gens));
  if (!qa.dim) throw std::invalid_argument("ideal is not zero-dimensional");
  VarietyOptions vo;
  vo.seed = options.seed;
  auto points = solve_variety(qa, gens, vo);
  auto minimum = minimize_over_real_points(f, points);
  if (!minimum) throw std::invalid_argument("V(g) has no real points");
  if (minimum->exact) return build_certificate(f, gens, *minimum->exact, options);
  // Irrational minimum: round down so that f - fstar stays positive on V_R(g).
  Rational fstar = exact_from_double(minimum->value) - exact_from_double(std::ldexp(std::max(1.0, std::abs(minimum->value)), -40));
  Certificate cert = build_certificate(f, gens, fstar, options);
  cert.notes.push_back("minimum attained at an irrational point; fstar rounded down by about 2^-40");
  return cert;
}

}  // namespace soscert
