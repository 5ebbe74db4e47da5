#pragma once

// Brute-force enumeration oracles shared by the unit tests and the acceptance
// gate. Deliberately independent of the library's search strategies: both
// solve ansatz systems over basis coordinates head-on.

#include <algorithm>
#include <string>
#include <vector>

#include "cohesionlab/algebra.hpp"
#include "cohesionlab/solve.hpp"

namespace clab::oracle {

/// Every solution of e^2 = e by writing e = sum c_i b_i over the monomial
/// basis and solving the quadratic coordinate system directly.
inline std::vector<Polynomial> brute_idempotents(const FpAlgebra& a) {
  FiniteStructure fs = finite_structure(a);
  if (fs.dim() == 0) return {a.constant(0)};
  std::vector<std::string> cvars;
  for (size_t i = 0; i < fs.dim(); ++i) cvars.push_back("c" + std::to_string(i));
  auto cvar = [&](size_t i) { return Polynomial::variable(cvars, cvars[i]); };

  std::vector<Polynomial> system;
  for (size_t k = 0; k < fs.dim(); ++k) {
    Polynomial cond = Polynomial::zero(cvars);
    for (size_t i = 0; i < fs.dim(); ++i)
      for (size_t j = 0; j < fs.dim(); ++j)
        if (fs.mult[i][j][k] != 0) cond = cond + cvar(i) * cvar(j) * fs.mult[i][j][k];
    cond = cond - cvar(k);
    system.push_back(cond);
  }
  auto sols = solve_rational_system(system);
  std::vector<Polynomial> out;
  for (auto& pt : sols.points) out.push_back(fs.element(pt));
  std::sort(out.begin(), out.end(),
            [](const Polynomial& p, const Polynomial& q) { return p.str() < q.str(); });
  return out;
}

inline std::vector<std::string> sorted_strs(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (auto& p : ps) out.push_back(p.str());
  std::sort(out.begin(), out.end());
  return out;
}

/// |Hom(dom, cod)| for finite-dimensional cod with finitely many morphisms,
/// by solving for the basis coordinates of all generator images at once.
/// Counts rational solutions only; throws if the count might be incomplete.
inline size_t hom_count(const FpAlgebra& dom, const FpAlgebra& cod) {
  FiniteStructure fs = finite_structure(cod);
  size_t n = dom.gens().size(), d = fs.dim();
  if (d == 0) return 1;  // zero codomain: the unique collapse map
  if (n == 0) return dom.is_zero_algebra() ? 0 : 1;
  std::vector<std::string> cvars;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < d; ++j)
      cvars.push_back("c" + std::to_string(i) + "_" + std::to_string(j));
  if (cvars.empty()) cvars.push_back("c");

  using PVec = std::vector<Polynomial>;  // coordinates in the cod basis
  auto pzero = [&] { return PVec(d, Polynomial::zero(cvars)); };
  auto pscale = [&](const QVec& v) {
    PVec r = pzero();
    for (size_t k = 0; k < d; ++k) r[k] = Polynomial::constant(cvars, v[k]);
    return r;
  };
  auto pmul = [&](const PVec& x, const PVec& y) {
    PVec r = pzero();
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        if (x[i].is_zero() || y[j].is_zero()) continue;
        for (size_t k = 0; k < d; ++k)
          if (fs.mult[i][j][k] != 0) r[k] = r[k] + x[i] * y[j] * fs.mult[i][j][k];
      }
    return r;
  };

  std::vector<PVec> images;
  for (size_t i = 0; i < n; ++i) {
    PVec img = pzero();
    for (size_t j = 0; j < d; ++j) img[j] = Polynomial::variable(cvars, cvars[i * d + j]);
    images.push_back(img);
  }

  std::vector<Polynomial> system;
  for (const Polynomial& rel : dom.relations().gens()) {
    PVec acc = pzero();
    for (auto& [e, c] : rel.terms()) {
      PVec term = pscale(fs.unit);
      for (size_t i = 0; i < n; ++i)
        for (unsigned t = 0; t < e[i]; ++t) term = pmul(term, images[i]);
      for (size_t k = 0; k < d; ++k) acc[k] = acc[k] + term[k] * c;
    }
    for (size_t k = 0; k < d; ++k)
      if (!acc[k].is_zero()) system.push_back(acc[k]);
  }
  if (system.empty()) system.push_back(Polynomial::zero(cvars));
  auto sols = solve_rational_system(system);
  if (!sols.complete) throw Error("hom_count: codomain admits non-rational solutions");
  return sols.points.size();
}

}  // namespace clab::oracle
