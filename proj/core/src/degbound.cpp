#include "soscert/degbound.hpp"

#include <algorithm>
#include <stdexcept>

#include "soscert/assumption.hpp"
#include "soscert/groebner.hpp"

namespace soscert {

namespace {

int ceil_half(int v) { return v <= 0 ? 0 : (v + 1) / 2; }

}  // namespace

int frak_n(const std::vector<int>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("empty degree list");
  int sum = 0;
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("degrees must be positive");
    sum += d;
  }
  return sum - static_cast<int>(degrees.size());
}

std::vector<std::int64_t> hilbert_coeffs(const std::vector<int>& degrees) {
  const int top = frak_n(degrees);
  std::vector<std::int64_t> c{1};
  for (int d : degrees) {
    std::vector<std::int64_t> next(c.size() + static_cast<std::size_t>(d) - 1, 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      for (int j = 0; j < d; ++j) next[k + static_cast<std::size_t>(j)] += c[k];
    }
    c = std::move(next);
  }
  c.resize(static_cast<std::size_t>(top) + 1);
  return c;
}

std::int64_t dim_graded_piece(const std::vector<int>& degrees, int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  auto c = hilbert_coeffs(degrees);
  std::int64_t sum = 0;
  for (int k = 0; k <= d && k < static_cast<int>(c.size()); ++k) sum += c[static_cast<std::size_t>(k)];
  return sum;
}

std::size_t dim_graded_piece_groebner(const std::vector<Polynomial>& gens, int d) {
  std::vector<Polynomial> hom;
  for (const auto& g : gens) hom.push_back(homogenize(g));
  return graded_piece_dimension(buchberger(hom), d);
}

std::vector<int> degrees_of(const std::vector<Polynomial>& gens) {
  std::vector<int> out;
  for (const auto& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("generators must be nonzero");
    out.push_back(g.degree());
  }
  return out;
}

DegreeBoundReport sos_order(int deg_f, const std::vector<int>& degrees, bool verified) {
  DegreeBoundReport r;
  r.frak_n = frak_n(degrees);
  r.c_coeffs = hilbert_coeffs(degrees);
  r.sos_order = std::max(r.frak_n, ceil_half(deg_f));
  r.multiplier_degree_cap = std::max(2 * r.frak_n, deg_f);
  r.h_degree_cap = r.frak_n;
  r.verified = verified;
  return r;
}

DegreeBoundReport sos_order(const Polynomial& f, const std::vector<Polynomial>& gens) {
  const bool verified = check_at_infinity(gens).resultant_nonzero;
  return sos_order(f.is_zero() ? 0 : f.degree(), degrees_of(gens), verified);
}

int gradient_order(std::size_t n, int deg_f) {
  if (deg_f < 2) throw std::invalid_argument("gradient order needs deg F >= 2");
  return std::max(static_cast<int>(n) * (deg_f - 2), ceil_half(deg_f));
}

int gradient_order(const Polynomial& F) {
  if (F.is_zero()) throw std::invalid_argument("gradient order needs deg F >= 2");
  return gradient_order(F.nvars(), F.degree());
}

}  // namespace soscert
