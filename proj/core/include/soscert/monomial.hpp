#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace soscert {

/// Exponent vector x1^e1 ... xn^en. Total degree is cached.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);
  Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}

  static Monomial unit(std::size_t nvars, std::size_t var, int power = 1);

  std::size_t nvars() const { return exps_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  /// Requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Prepends x0 with the given exponent.
  Monomial with_leading(int e0) const;
  /// Drops the first variable.
  Monomial drop_leading() const;

  bool operator==(const Monomial& other) const = default;

  /// "x1^2*x3", or "1".
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Graded reverse lexicographic order with x1 > x2 > ... > xn.
int grevlex_compare(const Monomial& a, const Monomial& b);
/// Lexicographic order with x1 > x2 > ... > xn.
int lex_compare(const Monomial& a, const Monomial& b);

enum class MonomialOrder { grevlex, lex };

int compare(MonomialOrder order, const Monomial& a, const Monomial& b);

/// Strict "a comes first" predicate for containers kept in descending grevlex order.
struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

/// All monomials of total degree <= max_degree in n variables, ascending grevlex
/// (so index 0 is the constant monomial).
std::vector<Monomial> monomials_up_to(std::size_t nvars, int max_degree);
/// All monomials of total degree exactly `degree`, ascending grevlex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

}  // namespace soscert
