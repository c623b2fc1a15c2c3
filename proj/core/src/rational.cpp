#include "soscert/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace soscert {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  }
  Integer z(std::string(s), 10);
  return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole), 10);
    Integer f(std::string(frac), 10);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational q(w * scale + f, scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Rational& q) { return q.get_str(10); }

double to_double(const Rational& q) { return q.get_d(); }

Rational rationalize(double value, long max_den) {
  if (!std::isfinite(value)) throw std::invalid_argument("cannot rationalize a non-finite value");
  // Convergents p_k/q_k of the continued fraction of the exact dyadic value.
  Rational x = exact_from_double(value);
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational rem = x;
  for (int iter = 0; iter < 64; ++iter) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), rem.get_num_mpz_t(), rem.get_den_mpz_t());
    Integer p2 = a * p1 + p0;
    Integer q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Rational frac = rem - Rational(a);
    if (frac == 0) break;
    rem = 1 / frac;
  }
  Rational out(p1, q1);
  out.canonicalize();
  return out;
}

Rational round_dyadic(const Rational& value, unsigned bits) {
  Integer scale = 1;
  scale <<= bits;
  Rational scaled = value * scale;
  Integer rounded;
  // floor(scaled + 1/2)
  Rational shifted = scaled + Rational(1, 2);
  mpz_fdiv_q(rounded.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  Rational out(rounded, scale);
  out.canonicalize();
  return out;
}

Rational exact_from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite double");
  Rational q;
  mpq_set_d(q.get_mpq_t(), value);
  return q;
}

bool is_rational_square(const Rational& q, Rational* root) {
  if (q < 0) return false;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
    return false;
  }
  if (root != nullptr) {
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    *root = Rational(n, d);
    root->canonicalize();
  }
  return true;
}

void split_square(const Rational& c, Integer& radicand, Rational& s) {
  if (c <= 0) throw std::invalid_argument("split_square needs a positive value");
  // c = u/v = (u v) / v^2
  Integer rest = c.get_num() * c.get_den();
  Integer square_part = 1;
  for (unsigned long p = 2; p <= 1000000UL; ++p) {
    if (rest < p * p) break;
    Integer pp = p * p;
    while (mpz_divisible_p(rest.get_mpz_t(), pp.get_mpz_t()) != 0) {
      rest /= pp;
      square_part *= p;
    }
  }
  if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
    square_part *= r;
    rest = 1;
  }
  radicand = rest;
  s = Rational(square_part, c.get_den());
  s.canonicalize();
}

}  // namespace soscert
