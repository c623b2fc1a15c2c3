#include "soscert/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace soscert {

const Monomial& leading_monomial(const Polynomial& p, MonomialOrder order) {
  if (p.is_zero()) throw std::invalid_argument("leading monomial of zero polynomial");
  if (order == MonomialOrder::grevlex) return p.leading_monomial();
  auto best = p.terms().begin();
  for (auto it = p.terms().begin(); it != p.terms().end(); ++it) {
    if (lex_compare(it->first, best->first) > 0) best = it;
  }
  return best->first;
}

const Rational& leading_coefficient(const Polynomial& p, MonomialOrder order) {
  return p.terms().find(leading_monomial(p, order))->second;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(leading_monomial(g, order));
  return out;
}

DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& divisors, MonomialOrder order) {
  const std::size_t n = p.nvars();
  DivisionResult out{std::vector<Polynomial>(divisors.size(), Polynomial(n)), Polynomial(n)};
  std::vector<Monomial> lms;
  std::vector<Rational> lcs;
  for (const auto& d : divisors) {
    lms.push_back(leading_monomial(d, order));
    lcs.push_back(leading_coefficient(d, order));
  }
  Polynomial rest = p;
  while (!rest.is_zero()) {
    const Monomial m = leading_monomial(rest, order);
    const Rational c = rest.coefficient(m);
    std::size_t k = 0;
    while (k < divisors.size() && !lms[k].divides(m)) ++k;
    if (k == divisors.size()) {
      out.remainder.add_term(m, c);
      rest.add_term(m, -c);
      continue;
    }
    Rational q = c / lcs[k];
    Monomial shift = m / lms[k];
    rest.add_scaled(divisors[k], -q, shift);
    out.quotients[k].add_term(shift, q);
  }
  return out;
}

namespace {

struct TrackedPoly {
  Polynomial poly;
  std::vector<Polynomial> cof;
};

Polynomial s_polynomial_part(const Polynomial& f, const Monomial& lcm, MonomialOrder order) {
  Polynomial out(f.nvars());
  out.add_scaled(f, 1 / leading_coefficient(f, order), lcm / leading_monomial(f, order));
  return out;
}

void make_monic(TrackedPoly& t, MonomialOrder order, bool track) {
  Rational inv = 1 / leading_coefficient(t.poly, order);
  if (inv == 1) return;
  t.poly *= inv;
  if (track) {
    for (auto& c : t.cof) c *= inv;
  }
}

// Reduces t by the current basis, updating cofactors when tracked.
void reduce_tracked(TrackedPoly& t, const std::vector<TrackedPoly>& basis, MonomialOrder order, bool track) {
  std::vector<Polynomial> divisors;
  divisors.reserve(basis.size());
  for (const auto& b : basis) divisors.push_back(b.poly);
  DivisionResult div = divide(t.poly, divisors, order);
  t.poly = std::move(div.remainder);
  if (!track) return;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (div.quotients[k].is_zero()) continue;
    for (std::size_t i = 0; i < t.cof.size(); ++i) {
      if (!basis[k].cof[i].is_zero()) t.cof[i] -= div.quotients[k] * basis[k].cof[i];
    }
  }
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const BuchbergerOptions& options) {
  if (gens.empty()) throw std::invalid_argument("buchberger needs at least one generator");
  const std::size_t n = gens.front().nvars();
  const MonomialOrder order = options.order;
  const bool track = options.track_cofactors;
  for (const auto& g : gens) {
    if (g.nvars() != n) throw std::invalid_argument("generators live in different variable counts");
  }

  std::vector<TrackedPoly> basis;
  std::vector<std::size_t> active;  // indices of basis elements not yet discarded
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;

  auto add_element = [&](TrackedPoly t) {
    make_monic(t, order, track);
    const std::size_t idx = basis.size();
    basis.push_back(std::move(t));
    const Monomial& lm_new = leading_monomial(basis[idx].poly, order);
    for (std::size_t k = 0; k < idx; ++k) {
      Pair pr{k, idx, leading_monomial(basis[k].poly, order).lcm(lm_new)};
      pending_keys.emplace(k, idx);
      pending.push_back(std::move(pr));
    }
  };

  auto unit_result = [&](const TrackedPoly& t) {
    GroebnerBasis gb;
    gb.nvars = n;
    gb.order = order;
    gb.source = gens;
    gb.generators.push_back(Polynomial::constant(n, 1));
    if (track) {
      Rational inv = 1 / leading_coefficient(t.poly, order);
      std::vector<Polynomial> cof = t.cof;
      for (auto& c : cof) c *= inv;
      gb.cofactors.push_back(std::move(cof));
    }
    return gb;
  };

  for (std::size_t i = 0; i < gens.size(); ++i) {
    TrackedPoly t{gens[i], {}};
    if (track) {
      t.cof.assign(gens.size(), Polynomial(n));
      t.cof[i] = Polynomial::constant(n, 1);
    }
    if (t.poly.is_zero()) continue;
    // Reduce inputs against earlier ones so duplicates collapse.
    reduce_tracked(t, basis, order, track);
    if (t.poly.is_zero()) continue;
    if (t.poly.degree() == 0) return unit_result(t);
    add_element(std::move(t));
  }

  if (basis.empty()) {
    GroebnerBasis gb;
    gb.nvars = n;
    gb.order = order;
    gb.source = gens;
    return gb;
  }

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending_keys.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    // Normal strategy: smallest lcm first, ties by (i, j).
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      int c = compare(order, a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    Pair pr = *best;
    pending.erase(best);
    pending_keys.erase({pr.i, pr.j});

    const Monomial& lm_i = leading_monomial(basis[pr.i].poly, order);
    const Monomial& lm_j = leading_monomial(basis[pr.j].poly, order);
    if (lm_i.coprime(lm_j)) continue;

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (leading_monomial(basis[k].poly, order).divides(pr.lcm) && !is_pending(pr.i, k) &&
          !is_pending(pr.j, k)) {
        chain = true;
      }
    }
    if (chain) continue;

    TrackedPoly s{s_polynomial_part(basis[pr.i].poly, pr.lcm, order) -
                      s_polynomial_part(basis[pr.j].poly, pr.lcm, order),
                  {}};
    if (track) {
      const Monomial mi = pr.lcm / lm_i;
      const Monomial mj = pr.lcm / lm_j;
      const Rational ci = 1 / leading_coefficient(basis[pr.i].poly, order);
      const Rational cj = 1 / leading_coefficient(basis[pr.j].poly, order);
      s.cof.assign(gens.size(), Polynomial(n));
      for (std::size_t q = 0; q < gens.size(); ++q) {
        s.cof[q].add_scaled(basis[pr.i].cof[q], ci, mi);
        s.cof[q].add_scaled(basis[pr.j].cof[q], Rational(-cj), mj);
      }
    }
    reduce_tracked(s, basis, order, track);
    if (s.poly.is_zero()) continue;
    if (s.poly.degree() == 0) return unit_result(s);
    add_element(std::move(s));
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<TrackedPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& lm = leading_monomial(basis[i].poly, order);
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& other = leading_monomial(basis[j].poly, order);
      if (other.divides(lm) && (other != lm || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Interreduce.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<TrackedPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    // Only tail terms can reduce: leading monomials are pairwise non-divisible.
    reduce_tracked(minimal[i], others, order, track);
    make_monic(minimal[i], order, track);
  }

  std::sort(minimal.begin(), minimal.end(), [&](const TrackedPoly& a, const TrackedPoly& b) {
    return compare(order, leading_monomial(a.poly, order), leading_monomial(b.poly, order)) < 0;
  });

  GroebnerBasis gb;
  gb.nvars = n;
  gb.order = order;
  gb.source = gens;
  for (auto& t : minimal) {
    gb.generators.push_back(std::move(t.poly));
    if (track) gb.cofactors.push_back(std::move(t.cof));
  }
  return gb;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (p.nvars() != gb.nvars) throw std::invalid_argument("normal_form: variable count mismatch");
  if (gb.generators.empty()) return p;
  return divide(p, gb.generators, gb.order).remainder;
}

bool is_groebner_basis(const std::vector<Polynomial>& gens, MonomialOrder order) {
  std::vector<Polynomial> nonzero;
  for (const auto& g : gens) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    for (std::size_t j = i + 1; j < nonzero.size(); ++j) {
      Monomial l = leading_monomial(nonzero[i], order).lcm(leading_monomial(nonzero[j], order));
      Polynomial s = s_polynomial_part(nonzero[i], l, order) - s_polynomial_part(nonzero[j], l, order);
      if (!divide(s, nonzero, order).remainder.is_zero()) return false;
    }
  }
  return true;
}

QVector QuotientAlgebra::coordinates(const Polynomial& p) const {
  if (!dim) throw std::logic_error("coordinates in an infinite-dimensional quotient");
  Polynomial r = normal_form(p, gb);
  QVector out(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) out[k] = r.coefficient(basis[k]);
  return out;
}

Polynomial QuotientAlgebra::element(const QVector& coords) const {
  Polynomial out(gb.nvars);
  for (std::size_t k = 0; k < basis.size(); ++k) out.add_term(basis[k], coords[k]);
  return out;
}

QMatrix QuotientAlgebra::multiplication_by(const Polynomial& p) const {
  const std::size_t d = basis.size();
  QMatrix m(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    QVector col = coordinates(p * Polynomial::term(basis[k], 1));
    for (std::size_t r = 0; r < d; ++r) m(r, k) = col[r];
  }
  return m;
}

QuotientAlgebra quotient_algebra(const GroebnerBasis& gb) {
  QuotientAlgebra qa;
  qa.gb = gb;
  const std::size_t n = gb.nvars;
  const auto lms = gb.leading_monomials();

  // Finite iff every variable has a pure power among the leading monomials.
  std::vector<int> bound(n, -1);
  for (const auto& m : lms) {
    int nonzero = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] > 0) {
        ++nonzero;
        var = i;
      }
    }
    if (nonzero == 0) {
      // unit ideal
      qa.dim = 0;
      qa.multiplication.assign(n, QMatrix(0, 0));
      return qa;
    }
    if (nonzero == 1 && (bound[var] < 0 || m[var] < bound[var])) bound[var] = m[var];
  }
  for (int b : bound) {
    if (b < 0) return qa;
  }

  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      Monomial m(e);
      for (const auto& lm : lms) {
        if (lm.divides(m)) return;
      }
      qa.basis.push_back(std::move(m));
      return;
    }
    for (int k = 0; k < bound[pos]; ++k) {
      e[pos] = k;
      self(self, pos + 1);
    }
    e[pos] = 0;
  };
  if (n == 0) {
    qa.basis.emplace_back(0);
  } else {
    rec(rec, 0);
  }
  std::sort(qa.basis.begin(), qa.basis.end(),
            [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; });
  qa.dim = qa.basis.size();
  for (std::size_t i = 0; i < n; ++i) qa.multiplication.push_back(qa.multiplication_by(Polynomial::variable(n, i)));
  return qa;
}

std::size_t graded_piece_dimension(const GroebnerBasis& homogeneous_gb, int d) {
  const auto lms = homogeneous_gb.leading_monomials();
  std::size_t count = 0;
  for (const auto& m : monomials_of_degree(homogeneous_gb.nvars, d)) {
    bool standard = true;
    for (const auto& lm : lms) {
      if (lm.divides(m)) {
        standard = false;
        break;
      }
    }
    if (standard) ++count;
  }
  return count;
}

}  // namespace soscert

namespace soscert {

namespace {

std::vector<Polynomial> combine_cofactors(const DivisionResult& div, const GroebnerBasis& gb, std::size_t nsrc,
                                          std::size_t nvars) {
  std::vector<Polynomial> lambda(nsrc, Polynomial(nvars));
  for (std::size_t k = 0; k < gb.generators.size(); ++k) {
    if (div.quotients[k].is_zero()) continue;
    for (std::size_t i = 0; i < nsrc; ++i) {
      if (!gb.cofactors[k][i].is_zero()) lambda[i] += div.quotients[k] * gb.cofactors[k][i];
    }
  }
  return lambda;
}

bool contract_holds(const Polynomial& h, const std::vector<Polynomial>& gens, const std::vector<Polynomial>& lambda) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!lambda[i].is_zero() && lambda[i].degree() > h.degree() - gens[i].degree()) return false;
  }
  return true;
}

}  // namespace

LiftResult lift_membership(const Polynomial& h, const std::vector<Polynomial>& gens, bool assumption_verified) {
  if (gens.empty()) throw std::invalid_argument("lift_membership needs generators");
  const std::size_t n = h.nvars();
  LiftResult out;
  if (h.is_zero()) {
    out.multipliers.assign(gens.size(), Polynomial(n));
    out.degree_contract_met = true;
    out.homogeneous_route = true;
    return out;
  }

  std::vector<Polynomial> hom;
  bool has_zero = false;
  for (const auto& g : gens) {
    if (g.is_zero()) {
      has_zero = true;
      hom.push_back(Polynomial(n + 1));
    } else {
      hom.push_back(homogenize(g));
    }
  }
  if (!has_zero) {
    GroebnerBasis hgb = buchberger(hom, {MonomialOrder::grevlex, true});
    DivisionResult div = divide(homogenize(h), hgb.generators, hgb.order);
    if (div.remainder.is_zero()) {
      std::vector<Polynomial> lambda_bar = combine_cofactors(div, hgb, gens.size(), n + 1);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        out.multipliers.push_back(dehomogenize(lambda_bar[i].homogeneous_component(h.degree() - gens[i].degree())));
      }
      out.homogeneous_route = true;
      out.degree_contract_met = contract_holds(h, gens, out.multipliers);
      if (assumption_verified && !out.degree_contract_met) {
        throw std::logic_error("internal error: degree contract violated under verified assumption");
      }
      return out;
    }
  }

  GroebnerBasis gb = buchberger(gens, {MonomialOrder::grevlex, true});
  DivisionResult div = divide(h, gb.generators, gb.order);
  if (!div.remainder.is_zero()) throw std::invalid_argument("not a member");
  if (assumption_verified && !has_zero) {
    throw std::logic_error("internal error: homogenized member not in the homogenized ideal");
  }
  out.multipliers = combine_cofactors(div, gb, gens.size(), n);
  out.degree_contract_met = contract_holds(h, gens, out.multipliers);
  return out;
}

}  // namespace soscert
