#pragma once

#include <random>
#include <string>
#include <vector>

#include "soscert/parse.hpp"
#include "soscert/polynomial.hpp"

namespace soscert::testing {

inline Polynomial P(const std::string& text, std::size_t n = 2) {
  return parse_polynomial(text, default_variable_names(n));
}

// g1 = x2 (a (x2 - 1) - x1 (b - 1)), g2 = x1 (x2 (a - 1) - b (x1 - 1))
inline std::vector<Polynomial> example31(const Rational& a, const Rational& b) {
  Polynomial x1 = Polynomial::variable(2, 0);
  Polynomial x2 = Polynomial::variable(2, 1);
  Polynomial one = Polynomial::constant(2, 1);
  Polynomial g1 = x2 * ((x2 - one) * a - x1 * Rational(b - 1));
  Polynomial g2 = x1 * (x2 * Rational(a - 1) - (x1 - one) * b);
  return {g1, g2};
}

// Same g1 as example31, g2 = x1 (x1 + x2 - 1)
inline std::vector<Polynomial> example32(const Rational& a, const Rational& b) {
  Polynomial x1 = Polynomial::variable(2, 0);
  Polynomial x2 = Polynomial::variable(2, 1);
  Polynomial one = Polynomial::constant(2, 1);
  Polynomial g1 = x2 * ((x2 - one) * a - x1 * Rational(b - 1));
  Polynomial g2 = x1 * (x1 + x2 - one);
  return {g1, g2};
}

inline std::vector<Polynomial> example33() {
  return {P("(x1 - 1)^3 + (x2 - 1)^3"), P("(x1 - 1)^4*(x2 - 1)^4")};
}

inline std::vector<Polynomial> binary(std::size_t n) {
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial xi = Polynomial::variable(n, i);
    g.push_back(xi * xi - Polynomial::constant(n, 1));
  }
  return g;
}

/// Dense random polynomial of total degree exactly `deg` (top coefficient forced nonzero),
/// integer coefficients in [-5, 5].
inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t n, int deg) {
  std::uniform_int_distribution<int> coef(-5, 5);
  Polynomial p(n);
  for (int d = 0; d <= deg; ++d) {
    for (const auto& m : monomials_of_degree(n, d)) p.add_term(m, coef(rng));
  }
  if (p.is_zero() || p.degree() < deg) p.add_term(Monomial::unit(n, 0, deg), 1);
  return p;
}

}  // namespace soscert::testing
