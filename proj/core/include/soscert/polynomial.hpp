#pragma once

#include <climits>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "soscert/monomial.hpp"
#include "soscert/rational.hpp"

namespace soscert {

/// Degree reported for the zero polynomial. Never do arithmetic with it.
inline constexpr int kZeroPolynomialDegree = INT_MIN;

template <class To, class From>
To convert_scalar(const From& value) {
  if constexpr (std::is_same_v<To, From>) {
    return value;
  } else if constexpr (std::is_same_v<From, Rational>) {
    return To(value.get_d());
  } else if constexpr (std::is_same_v<To, Rational>) {
    static_assert(std::is_same_v<From, double>, "only doubles convert to rationals");
    return exact_from_double(value);
  } else {
    return To(value);
  }
}

/// Sparse multivariate polynomial with terms kept in descending grevlex order.
/// No zero coefficient is ever stored.
template <class C>
class BasicPolynomial {
 public:
  using Coefficient = C;
  using TermMap = std::map<Monomial, C, GrevlexDescending>;

  BasicPolynomial() = default;
  explicit BasicPolynomial(std::size_t nvars) : nvars_(nvars) {}

  static BasicPolynomial constant(std::size_t nvars, const C& c) {
    BasicPolynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }
  static BasicPolynomial variable(std::size_t nvars, std::size_t var) {
    BasicPolynomial p(nvars);
    p.add_term(Monomial::unit(nvars, var), C(1));
    return p;
  }
  static BasicPolynomial term(const Monomial& m, const C& c) {
    BasicPolynomial p(m.nvars());
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  int degree() const { return terms_.empty() ? kZeroPolynomialDegree : terms_.begin()->first.degree(); }

  /// Leading term under grevlex; requires a nonzero polynomial.
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const C& leading_coefficient() const { return terms_.begin()->second; }

  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(const Monomial& m, const C& c) {
    check_arity(m.nvars());
    if (c == C(0)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == C(0)) terms_.erase(it);
    }
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = degree();
    for (const auto& [m, c] : terms_) {
      if (m.degree() != d) return false;
    }
    return true;
  }

  BasicPolynomial homogeneous_component(int d) const {
    BasicPolynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    check_arity(o.nvars_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    check_arity(o.nvars_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  BasicPolynomial& operator*=(const C& s) {
    if (s == C(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  /// this += s * m * o
  void add_scaled(const BasicPolynomial& o, const C& s, const Monomial& m) {
    if (s == C(0)) return;
    for (const auto& [mo, c] : o.terms_) add_term(mo * m, C(c * s));
  }

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  friend BasicPolynomial operator*(BasicPolynomial a, const C& s) { return a *= s; }
  friend BasicPolynomial operator*(const C& s, BasicPolynomial a) { return a *= s; }
  BasicPolynomial operator-() const {
    BasicPolynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    a.check_arity(b.nvars_);
    BasicPolynomial out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, C(ca * cb));
    }
    return out;
  }

  BasicPolynomial pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    BasicPolynomial result = constant(nvars_, C(1));
    BasicPolynomial base = *this;
    while (k > 0) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k > 0) base = base * base;
    }
    return result;
  }

  bool operator==(const BasicPolynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Direct term summation at a point of scalar type T.
  template <class T>
  T evaluate(std::span<const T> point) const {
    if (point.size() != nvars_) throw std::invalid_argument("dimension mismatch in evaluation");
    T total = T(0);
    for (const auto& [m, c] : terms_) {
      T value = convert_scalar<T>(c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        for (int e = 0; e < m[i]; ++e) value *= point[i];
      }
      total += value;
    }
    return total;
  }

  BasicPolynomial derivative(std::size_t var) const {
    BasicPolynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      std::vector<int> e(m.exponents().begin(), m.exponents().end());
      const int power = e[var]--;
      out.add_term(Monomial(std::move(e)), C(c * C(power)));
    }
    return out;
  }

  /// p(x + shift).
  BasicPolynomial translate(std::span<const C> shift) const {
    if (shift.size() != nvars_) throw std::invalid_argument("dimension mismatch in translate");
    std::vector<BasicPolynomial> linear;
    for (std::size_t i = 0; i < nvars_; ++i) {
      BasicPolynomial li = variable(nvars_, i);
      li.add_term(Monomial(nvars_), shift[i]);
      linear.push_back(std::move(li));
    }
    BasicPolynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
      BasicPolynomial t = constant(nvars_, c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (m[i] > 0) t = t * linear[i].pow(m[i]);
      }
      out += t;
    }
    return out;
  }

  /// Drops every term of degree >= k.
  BasicPolynomial truncate_below(int k) const {
    BasicPolynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m.degree() < k) out.terms_.emplace(m, c);
    }
    return out;
  }

  template <class D, class F>
  BasicPolynomial<D> map_coefficients(F&& f) const {
    BasicPolynomial<D> out(nvars_);
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

  template <class D>
  BasicPolynomial<D> cast() const {
    return map_coefficients<D>([](const C& c) { return convert_scalar<D>(c); });
  }

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void check_arity(std::size_t n) const {
    if (n != nvars_) throw std::invalid_argument("polynomials live in different variable counts");
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

using Polynomial = BasicPolynomial<Rational>;
using RealPolynomial = BasicPolynomial<double>;
using ComplexPolynomial = BasicPolynomial<Complex>;

/// Point in C^n; entries must be finite.
using ComplexVector = std::vector<Complex>;

namespace detail {

inline std::string coefficient_text(const Rational& c) { return to_string(c); }
inline std::string coefficient_text(double c) {
  std::ostringstream os;
  os.precision(17);
  os << c;
  return os.str();
}
inline std::string coefficient_text(const Complex& c) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
  return os.str();
}
template <class C>
bool is_negative(const C& c) {
  if constexpr (std::is_same_v<C, Complex>) {
    return false;
  } else {
    return c < 0;
  }
}

}  // namespace detail

template <class C>
std::string BasicPolynomial<C>::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    C mag = c;
    bool negative = detail::is_negative(c);
    if (negative) mag = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool unit_coefficient = mag == C(1);
    if (m.is_one()) {
      out += detail::coefficient_text(mag);
    } else if (unit_coefficient) {
      out += m.to_string(names);
    } else {
      out += detail::coefficient_text(mag) + "*" + m.to_string(names);
    }
  }
  return out;
}

// Free-function surface used throughout the pipeline.

/// p̄(x0, x1..xn) = x0^deg(p) p(x1/x0, ..., xn/x0); x0 is prepended.
template <class C>
BasicPolynomial<C> homogenize(const BasicPolynomial<C>& p) {
  if (p.is_zero()) throw std::invalid_argument("cannot homogenize zero");
  const int d = p.degree();
  BasicPolynomial<C> out(p.nvars() + 1);
  for (const auto& [m, c] : p.terms()) out.add_term(m.with_leading(d - m.degree()), c);
  return out;
}

/// Sum of the terms of top degree, i.e. p̄ evaluated at x0 = 0.
template <class C>
BasicPolynomial<C> top_form(const BasicPolynomial<C>& p) {
  if (p.is_zero()) throw std::invalid_argument("top form of zero polynomial");
  return p.homogeneous_component(p.degree());
}

/// p(1, x1..xn) for p in n+1 variables.
template <class C>
BasicPolynomial<C> dehomogenize(const BasicPolynomial<C>& p) {
  if (p.nvars() == 0) throw std::invalid_argument("dehomogenize needs at least one variable");
  BasicPolynomial<C> out(p.nvars() - 1);
  for (const auto& [m, c] : p.terms()) out.add_term(m.drop_leading(), c);
  return out;
}

template <class C>
std::vector<BasicPolynomial<C>> gradient(const BasicPolynomial<C>& p) {
  std::vector<BasicPolynomial<C>> out;
  out.reserve(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) out.push_back(p.derivative(i));
  return out;
}

template <class C>
Complex eval_complex(const BasicPolynomial<C>& p, std::span<const Complex> z) {
  for (const Complex& v : z) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("non-finite evaluation point");
    }
  }
  return p.template evaluate<Complex>(z);
}

/// Largest coefficient magnitude (0 for the zero polynomial).
template <class C>
double max_abs_coefficient(const BasicPolynomial<C>& p) {
  double m = 0.0;
  for (const auto& [mono, c] : p.terms()) {
    double v;
    if constexpr (std::is_same_v<C, Rational>) {
      v = std::abs(c.get_d());
    } else {
      v = std::abs(c);
    }
    m = std::max(m, v);
  }
  return m;
}

}  // namespace soscert
