#include "soscert/assumption.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "soscert/groebner.hpp"

namespace soscert {

namespace {

void require_square(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw std::invalid_argument("square system required");
  const std::size_t n = gens.front().nvars();
  if (gens.size() != n) throw std::invalid_argument("square system required");
  for (const auto& g : gens) {
    if (g.nvars() != n) throw std::invalid_argument("square system required");
    if (g.is_zero()) throw std::invalid_argument("generators must be nonzero");
  }
}

// p with x_j := 1, as a polynomial in the remaining n - 1 variables.
Polynomial restrict_to_chart(const Polynomial& p, std::size_t j) {
  const std::size_t n = p.nvars();
  Polynomial out(n - 1);
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e;
    e.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j) e.push_back(m[i]);
    }
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

std::optional<ComplexVector> chart_zero(const std::vector<Polynomial>& tops, std::size_t j, std::mt19937_64& rng,
                                        std::uint64_t seed) {
  const std::size_t n = tops.size();
  std::vector<Polynomial> sys;
  for (const auto& t : tops) {
    Polynomial r = restrict_to_chart(t, j);
    if (!r.is_zero()) sys.push_back(std::move(r));
  }
  auto lift = [&](const ComplexVector& z) {
    ComplexVector w(n);
    for (std::size_t i = 0, k = 0; i < n; ++i) w[i] = i == j ? Complex(1, 0) : z[k++];
    return w;
  };
  if (n == 1) {
    if (sys.empty()) return lift({});
    return std::nullopt;
  }
  const std::size_t m = n - 1;
  std::uniform_int_distribution<int> coef(-9, 9);
  // Cut positive-dimensional components with random affine hyperplanes.
  for (std::size_t sections = 0; sections <= m; ++sections) {
    std::vector<Polynomial> cut = sys;
    for (std::size_t s = 0; s < sections; ++s) {
      Polynomial h(m);
      for (std::size_t i = 0; i < m; ++i) h.add_term(Monomial::unit(m, i), coef(rng));
      h.add_term(Monomial(m), 1 + std::abs(coef(rng)));
      cut.push_back(std::move(h));
    }
    if (cut.empty()) {
      return lift(ComplexVector(m, Complex(0, 0)));
    }
    QuotientAlgebra qa = quotient_algebra(buchberger(cut));
    if (qa.dim && *qa.dim == 0) {
      // Unit ideal: without sections no zero in this chart at all.
      if (sections == 0) return std::nullopt;
      continue;
    }
    if (!qa.dim) continue;
    VarietyOptions vo;
    vo.seed = seed;
    auto pts = solve_variety(qa, cut, vo);
    if (!pts.empty()) return lift(pts.front().coords);
  }
  return std::nullopt;
}

}  // namespace

std::uint64_t degree_product(const std::vector<Polynomial>& gens) {
  std::uint64_t prod = 1;
  for (const auto& g : gens) {
    const int d = g.degree();
    if (d < 0) throw std::invalid_argument("generators must be nonzero");
    if (d > 0 && prod > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(d)) {
      throw std::overflow_error("degree product overflows");
    }
    prod *= static_cast<std::uint64_t>(d);
  }
  return prod;
}

AssumptionReport check_at_infinity(const std::vector<Polynomial>& gens, const AssumptionOptions& options) {
  require_square(gens);
  AssumptionReport report;
  report.bezout_product = degree_product(gens);
  std::vector<Polynomial> tops;
  for (const auto& g : gens) tops.push_back(top_form(g));
  QuotientAlgebra qa = quotient_algebra(buchberger(tops));
  report.resultant_nonzero = qa.dim.has_value();
  if (report.resultant_nonzero) return report;

  std::mt19937_64 rng(options.seed);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    auto w = chart_zero(tops, j, rng, options.seed);
    if (!w) continue;
    double norm = 0.0;
    for (const auto& c : *w) norm += std::norm(c);
    norm = std::sqrt(norm);
    for (auto& c : *w) c /= norm;
    bool ok = true;
    for (const auto& t : tops) {
      if (std::abs(eval_complex(t, *w)) > options.witness_tolerance) ok = false;
    }
    if (ok) {
      report.witness = std::move(*w);
      break;
    }
  }
  return report;
}

BezoutCheck check_bezout(const std::vector<Polynomial>& gens) {
  require_square(gens);
  QuotientAlgebra qa = quotient_algebra(buchberger(gens));
  if (!qa.dim) throw std::invalid_argument("ideal is not zero-dimensional");
  BezoutCheck out;
  out.dim = *qa.dim;
  out.product = degree_product(gens);
  out.equal = out.dim == out.product;
  return out;
}

std::vector<VarietyPoint> check_singular_optimizers(const Polynomial& f, const std::vector<VarietyPoint>& points,
                                                    double fstar, double value_tolerance) {
  std::vector<VarietyPoint> out;
  for (const auto& p : points) {
    if (!p.singular) continue;
    if (std::abs(eval_complex(f, p.coords) - Complex(fstar, 0)) <= value_tolerance) out.push_back(p);
  }
  return out;
}

std::optional<RealMinimum> minimize_over_real_points(const Polynomial& f, const std::vector<VarietyPoint>& points,
                                                     double value_tolerance) {
  RealMinimum best;
  bool any = false;
  bool all_exact = true;
  std::optional<Rational> exact_min;
  for (const auto& p : points) {
    if (!p.real) continue;
    double v = eval_complex(f, p.coords).real();
    if (p.exact) {
      Rational e = f.evaluate<Rational>(std::span<const Rational>(*p.exact));
      v = e.get_d();
      if (!exact_min || e < *exact_min) exact_min = e;
    } else {
      all_exact = false;
    }
    if (!any || v < best.value) best.value = v;
    any = true;
  }
  if (!any) return std::nullopt;
  if (all_exact) {
    best.exact = exact_min;
    best.value = exact_min->get_d();
  }
  for (const auto& p : points) {
    if (!p.real) continue;
    double v = eval_complex(f, p.coords).real();
    if (std::abs(v - best.value) <= value_tolerance * std::max(1.0, std::abs(best.value))) best.minimizers.push_back(p);
  }
  return best;
}

}  // namespace soscert
