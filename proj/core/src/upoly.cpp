#include "soscert/upoly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace soscert {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return UPoly(std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + o.scaled(-1); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return UPoly(std::move(v));
}

UPoly UPoly::scaled(const Rational& s) const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c *= s;
  return UPoly(std::move(v));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {UPoly(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1);
  const Rational inv = 1 / divisor.leading();
  for (int k = degree(); k >= dd; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] * inv;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = c;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= c * divisor[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return scaled(1 / leading());
}

Rational UPoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
  return acc;
}

Complex UPoly::evaluate(const Complex& t) const {
  Complex acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + Complex(coeffs_[i].get_d(), 0.0);
  return acc;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
  if (p.degree() < 1) return {};
  // Yun: b = p / gcd(p, p'), c = p' / gcd - b', then a_i = gcd(b, c).
  UPoly f = p.monic();
  UPoly df = f.derivative();
  UPoly g = gcd(f, df);
  UPoly b = f.divmod(g).first;
  UPoly c = df.divmod(g).first;
  UPoly d = c - b.derivative();
  std::vector<UPoly> out;
  while (b.degree() >= 1) {
    UPoly a = gcd(b, d);
    out.push_back(a);
    b = b.divmod(a).first;
    c = d.divmod(a).first;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

int UPoly::count_real_roots() const {
  if (degree() < 1) return 0;
  std::vector<UPoly> seq{*this, derivative()};
  while (!seq.back().is_zero()) {
    UPoly r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(r.scaled(-1));
  }
  // Sign changes at -inf and +inf depend only on leading coefficients and degrees.
  auto changes = [&](bool at_plus) {
    int count = 0;
    int prev = 0;
    for (const auto& s : seq) {
      if (s.is_zero()) continue;
      int sign = sgn(s.leading());
      if (!at_plus && s.degree() % 2 == 1) sign = -sign;
      if (prev != 0 && sign != prev) ++count;
      prev = sign;
    }
    return count;
  };
  return changes(false) - changes(true);
}

std::vector<Complex> UPoly::roots() const {
  const int n = degree();
  if (n < 1) return {};
  UPoly m = monic();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -m[static_cast<std::size_t>(i)].get_d();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion.cast<Complex>());
  std::vector<Complex> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  UPoly dm = m.derivative();
  for (auto& z : out) {
    for (int it = 0; it < 8; ++it) {
      Complex fz = m.evaluate(z);
      Complex dz = dm.evaluate(z);
      if (std::abs(dz) == 0.0) break;
      Complex step = fz / dz;
      z -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

}  // namespace soscert
