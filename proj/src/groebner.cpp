#include "cohesionlab/groebner.hpp"

#include <algorithm>
#include <deque>

#include "cohesionlab/errors.hpp"

namespace clab {

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       MonomialOrder order) {
  Polynomial rem = Polynomial::zero(f.vars());
  Polynomial work = f;
  while (!work.is_zero()) {
    const Exponents& le = work.leading_exponents(order);
    const Rational& lc = work.terms().at(le);
    bool reduced = false;
    for (const Polynomial& g : basis) {
      if (g.is_zero()) continue;
      const Exponents& ge = g.leading_exponents(order);
      if (divides(ge, le)) {
        Rational factor = lc / g.terms().at(ge);
        work = work - g * Polynomial::monomial(f.vars(), exp_sub(le, ge), factor);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(le, lc);
      Polynomial t = Polynomial::monomial(f.vars(), le, lc);
      work = work - t;
    }
  }
  return rem;
}

namespace {

Polynomial s_poly(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  const Exponents& lf = f.leading_exponents(order);
  const Exponents& lg = g.leading_exponents(order);
  Exponents l = exp_lcm(lf, lg);
  Polynomial mf = Polynomial::monomial(f.vars(), exp_sub(l, lf), Rational(1) / f.terms().at(lf));
  Polynomial mg = Polynomial::monomial(g.vars(), exp_sub(l, lg), Rational(1) / g.terms().at(lg));
  return f * mf - g * mg;
}

bool coprime_leads(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  const Exponents& a = f.leading_exponents(order);
  const Exponents& b = g.leading_exponents(order);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, MonomialOrder order) {
  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens)
    if (!g.is_zero()) basis.push_back(g.monic(order));
  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime_leads(basis[i], basis[j], order)) continue;  // Buchberger's first criterion
    Polynomial r = normal_form(s_poly(basis[i], basis[j], order), basis, order);
    if (r.is_zero()) continue;
    basis.push_back(r.monic(order));
    for (size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }

  // inter-reduce: drop elements whose lead is divisible by another lead,
  // then put every tail in normal form
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    const Exponents& le = basis[i].leading_exponents(order);
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Exponents& lj = basis[j].leading_exponents(order);
      if (divides(lj, le) && (lj != le || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = normal_form(minimal[i], others, order);
    if (!r.is_zero()) reduced.push_back(r.monic(order));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return exponents_less(a.leading_exponents(order), b.leading_exponents(order), order);
  });
  return reduced;
}

Ideal::Ideal(std::vector<Polynomial> gens, MonomialOrder order)
    : gens_(std::move(gens)), order_(order) {
  basis_ = groebner_basis(gens_, order_);
}

bool Ideal::contains(const Polynomial& f) const { return nf(f).is_zero(); }

bool Ideal::is_unit() const {
  return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero();
}

}  // namespace clab
