#include "cohesionlab/solve.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cohesionlab/errors.hpp"
#include "cohesionlab/groebner.hpp"
#include "cohesionlab/univariate.hpp"

namespace clab {

namespace {

// index of the single variable used, or -1 if constant / multivariate
int sole_variable(const Polynomial& p) {
  int var = -1;
  for (auto& [e, c] : p.terms()) {
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (var == -1)
        var = static_cast<int>(i);
      else if (var != static_cast<int>(i))
        return -1;
    }
  }
  return var;
}

UniPoly to_univariate(const Polynomial& p, size_t var) {
  UniPoly u;
  for (auto& [e, c] : p.terms()) {
    size_t d = e[var];
    if (u.size() <= d) u.resize(d + 1, Rational(0));
    u[d] += c;
  }
  uni_trim(u);
  return u;
}

using Assignment = std::map<std::string, Rational>;

void solve_rec(std::vector<Polynomial> system, bool after_groebner,
               std::vector<Assignment>& out, bool& complete, const Assignment& partial) {
  // constants decide immediately
  std::vector<Polynomial> sys;
  for (auto& p : system) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return;  // inconsistent branch
    sys.push_back(p);
  }
  std::vector<std::string> vars = sys.empty() ? std::vector<std::string>{} : sys[0].vars();
  if (sys.empty() || vars.empty()) {
    if (sys.empty()) out.push_back(partial);
    return;
  }

  // branch on a univariate constraint when one is present
  int best = -1, best_var = -1;
  for (size_t i = 0; i < sys.size(); ++i) {
    int v = sole_variable(sys[i]);
    if (v >= 0 && (best < 0 || sys[i].degree() < sys[best].degree())) {
      best = static_cast<int>(i);
      best_var = v;
    }
  }
  if (best >= 0) {
    UniPoly u = to_univariate(sys[best], best_var);
    auto roots = rational_roots(u);
    int peeled = 0;
    for (auto& [r, m] : roots) peeled += m;
    if (peeled < uni_degree(u)) complete = false;  // residual irrational factor
    std::vector<std::string> sub_vars;
    for (size_t i = 0; i < vars.size(); ++i)
      if (static_cast<int>(i) != best_var) sub_vars.push_back(vars[i]);
    for (auto& [r, m] : roots) {
      std::vector<Polynomial> sub;
      for (size_t i = 0; i < sys.size(); ++i) {
        if (static_cast<int>(i) == best) continue;
        Polynomial q =
            sys[i].substitute_var(vars[best_var], Polynomial::constant(vars, r));
        sub.push_back(q.rename_ambient(sub_vars));
      }
      Assignment p2 = partial;
      p2[vars[best_var]] = r;
      if (sub_vars.empty()) {
        bool ok = true;
        for (auto& q : sub)
          if (!q.is_zero()) ok = false;
        if (ok) out.push_back(p2);
      } else {
        solve_rec(std::move(sub), false, out, complete, p2);
      }
    }
    return;
  }

  if (after_groebner) {
    // lex basis of a zero-dimensional ideal always contains a univariate
    // polynomial in the least variable; its absence means positive dimension
    throw PositiveDimensional("system is not zero-dimensional");
  }
  std::vector<Polynomial> gb = groebner_basis(sys, MonomialOrder::Lex);
  solve_rec(std::move(gb), true, out, complete, partial);
}

}  // namespace

RationalSolutions solve_rational_system(const std::vector<Polynomial>& system) {
  RationalSolutions res;
  if (system.empty()) throw Error("solve_rational_system: empty system (ambient unknown)");
  const std::vector<std::string>& vars = system[0].vars();
  if (vars.empty()) {
    bool ok = true;
    for (auto& p : system)
      if (!p.is_zero()) ok = false;
    if (ok) res.points.push_back({});
    return res;
  }
  std::vector<Assignment> raw;
  solve_rec(system, false, raw, res.complete, {});
  for (auto& a : raw) {
    std::vector<Rational> pt;
    for (auto& v : vars) pt.push_back(a.at(v));
    res.points.push_back(std::move(pt));
  }
  std::sort(res.points.begin(), res.points.end(),
            [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
              for (size_t i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) return a[i] < b[i];
              }
              return false;
            });
  res.points.erase(std::unique(res.points.begin(), res.points.end()), res.points.end());
  return res;
}

}  // namespace clab
