#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "soscert/rational.hpp"

namespace soscert {

/// Dense univariate polynomial over Q, coefficients from low to high degree.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly monomial(int degree, const Rational& c = 1);

  int degree() const { return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  const Rational& leading() const { return coeffs_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly scaled(const Rational& s) const;
  bool operator==(const UPoly& o) const = default;

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
  UPoly derivative() const;
  UPoly monic() const;

  Rational evaluate(const Rational& t) const;
  Complex evaluate(const Complex& t) const;

  /// Number of distinct real roots (Sturm sequence).
  int count_real_roots() const;
  /// Roots of a squarefree polynomial: companion eigenvalues, Newton-polished.
  std::vector<Complex> roots() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd.
UPoly gcd(UPoly a, UPoly b);

/// Yun's algorithm: returns {a_1, a_2, ...} with p = lc * prod a_k^k, a_k squarefree,
/// pairwise coprime and monic. Entry k-1 holds a_k (possibly the constant 1).
std::vector<UPoly> squarefree_decomposition(const UPoly& p);

}  // namespace soscert
