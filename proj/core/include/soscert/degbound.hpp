#pragma once

#include <cstdint>
#include <vector>

#include "soscert/polynomial.hpp"

namespace soscert {

/// Degree data for a square system g_1..g_n and objective f.
struct DegreeBoundReport {
  int frak_n = 0;                    // sum_i deg g_i - n
  std::vector<std::int64_t> c_coeffs;  // c_0 .. c_frak_n
  int sos_order = 0;                 // max(frak_n, ceil(deg f / 2))
  int multiplier_degree_cap = 0;     // cap on deg(lambda_i g_i): max(2 frak_n, deg f)
  int h_degree_cap = 0;              // frak_n
  /// False when the top forms have a common nontrivial zero; the numbers are
  /// then formulaic only.
  bool verified = false;
};

/// sum(degrees) - n. Throws on an empty list or a degree < 1.
int frak_n(const std::vector<int>& degrees);

/// c_k = #{(k_1..k_n) : sum k_i = k, 0 <= k_i <= d_i - 1}, k = 0..frak_n, i.e.
/// the coefficients of prod_i (1 + t + ... + t^(d_i - 1)).
std::vector<std::int64_t> hilbert_coeffs(const std::vector<int>& degrees);

/// sum_{k <= d} c_k, the dimension of the degree-d piece of the graded quotient
/// by the homogenized generators.
std::int64_t dim_graded_piece(const std::vector<int>& degrees, int d);

/// Same dimension computed from a Groebner basis of the homogenized generators.
std::size_t dim_graded_piece_groebner(const std::vector<Polynomial>& gens, int d);

/// Full report; runs the at-infinity check to set `verified`.
DegreeBoundReport sos_order(const Polynomial& f, const std::vector<Polynomial>& gens);

/// Report from degrees alone, with the caller's verdict on the assumption.
DegreeBoundReport sos_order(int deg_f, const std::vector<int>& degrees, bool verified);

/// ceil(max(n (deg F - 2), deg F / 2)) for the gradient relaxation of F in n variables.
int gradient_order(const Polynomial& F);
int gradient_order(std::size_t n, int deg_f);

std::vector<int> degrees_of(const std::vector<Polynomial>& gens);

}  // namespace soscert
