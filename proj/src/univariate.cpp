#include "cohesionlab/univariate.hpp"

#include <algorithm>

#include "cohesionlab/errors.hpp"

namespace clab {

void uni_trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int uni_degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
  UniPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  uni_trim(r);
  return r;
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
  UniPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  uni_trim(r);
  return r;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  uni_trim(r);
  return r;
}

std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b) {
  if (b.empty()) throw Error("univariate division by zero");
  UniPoly rem = a, quot;
  uni_trim(rem);
  int db = uni_degree(b);
  if (uni_degree(rem) >= db) quot.assign(rem.size() - b.size() + 1, Rational(0));
  while (uni_degree(rem) >= db) {
    int k = uni_degree(rem) - db;
    Rational c = rem.back() / b.back();
    quot[k] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[i + k] -= c * b[i];
    uni_trim(rem);
  }
  uni_trim(quot);
  return {quot, rem};
}

UniPoly uni_monic(const UniPoly& p) {
  UniPoly r = p;
  uni_trim(r);
  if (r.empty()) return r;
  Rational lc = r.back();
  for (auto& c : r) c /= lc;
  return r;
}

UniPoly uni_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  uni_trim(x);
  uni_trim(y);
  while (!y.empty()) {
    UniPoly r = uni_divmod(x, y).second;
    x = y;
    y = r;
  }
  return uni_monic(x);
}

UniPoly uni_derivative(const UniPoly& p) {
  UniPoly r;
  for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rational(static_cast<long>(i)));
  uni_trim(r);
  return r;
}

Rational uni_eval(const UniPoly& p, const Rational& x) {
  Rational r(0);
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

UniXgcd uni_xgcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly u0 = {Rational(1)}, u1 = {};
  UniPoly v0 = {}, v1 = {Rational(1)};
  uni_trim(r0);
  uni_trim(r1);
  while (!r1.empty()) {
    auto [q, r] = uni_divmod(r0, r1);
    UniPoly u2 = uni_sub(u0, uni_mul(q, u1));
    UniPoly v2 = uni_sub(v0, uni_mul(q, v1));
    r0 = r1;
    r1 = r;
    u0 = u1;
    u1 = u2;
    v0 = v1;
    v1 = v2;
  }
  if (!r0.empty()) {
    Rational lc = r0.back();
    for (auto& c : r0) c /= lc;
    for (auto& c : u0) c /= lc;
    for (auto& c : v0) c /= lc;
  }
  return {r0, u0, v0};
}

namespace {

// primitive integer coefficients, same roots
std::vector<Integer> integerize(const UniPoly& p) {
  Integer lcm(1);
  for (auto& c : p) lcm = lcm / gcd(lcm, Integer(c.get_den())) * Integer(c.get_den());
  std::vector<Integer> r;
  Integer content(0);
  for (auto& c : p) {
    Rational q = c * Rational(lcm);
    r.push_back(Integer(q.get_num()));
    content = gcd(content, r.back());
  }
  if (content > 1)
    for (auto& x : r) x /= content;
  return r;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const UniPoly& p) {
  std::vector<std::pair<Rational, int>> roots;
  UniPoly work = p;
  uni_trim(work);
  if (uni_degree(work) < 1) return roots;
  // root 0
  int m0 = 0;
  while (!work.empty() && work[0] == 0) {
    work.erase(work.begin());
    ++m0;
  }
  if (m0 > 0) roots.emplace_back(Rational(0), m0);
  if (uni_degree(work) < 1) return roots;
  std::vector<Integer> ip = integerize(work);
  std::vector<Integer> ps = positive_divisors(ip[0]);
  std::vector<Integer> qs = positive_divisors(ip.back());
  for (const Integer& num : ps) {
    for (const Integer& den : qs) {
      for (int sign : {1, -1}) {
        Rational cand(sign > 0 ? num : -num, den);
        cand.canonicalize();
        if (uni_eval(work, cand) != 0) continue;
        UniPoly lin = {-cand, Rational(1)};
        int mult = 0;
        for (;;) {
          auto [q, r] = uni_divmod(work, lin);
          if (!r.empty()) break;
          work = q;
          ++mult;
        }
        if (mult > 0) roots.emplace_back(cand, mult);
      }
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](auto& a, auto& b) { return a.first < b.first; });
  return roots;
}

namespace {

UniPoly lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  UniPoly r;
  for (size_t i = 0; i < xs.size(); ++i) {
    UniPoly term = {Rational(1)};
    Rational denom(1);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      term = uni_mul(term, UniPoly{-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    for (auto& c : term) c *= ys[i] / denom;
    r = uni_add(r, term);
  }
  return r;
}

// Kronecker search: a nontrivial monic factor of a squarefree p with no
// rational roots, or nullopt if p is irreducible.
std::optional<UniPoly> kronecker_factor(const UniPoly& p) {
  int n = uni_degree(p);
  std::vector<Integer> ip = integerize(p);
  UniPoly ipq;
  for (auto& c : ip) ipq.push_back(Rational(c));
  for (int k = 2; k <= n / 2; ++k) {
    std::vector<Rational> xs;
    std::vector<std::vector<Integer>> divs;
    long budget = 400000;
    for (int i = 0; i <= k; ++i) {
      long x = (i % 2 == 0) ? i / 2 : -(i / 2 + 1);  // 0, -1, 1, -2, 2, ...
      xs.push_back(Rational(x));
      Rational v = uni_eval(ipq, Rational(x));
      auto ds = positive_divisors(Integer(v.get_num()));
      divs.push_back(ds);
      long options = static_cast<long>(ds.size()) * (i == 0 ? 1 : 2);
      if (budget / options == 0) throw SizeLimit("Kronecker factor search exceeded bound");
      budget /= options;
    }
    // enumerate divisor tuples; overall sign fixed via the first point
    std::vector<size_t> idx(k + 1, 0);
    std::vector<int> sign(k + 1, 1);
    for (;;) {
      std::vector<Rational> ys;
      for (int i = 0; i <= k; ++i) ys.push_back(Rational(sign[i] * divs[i][idx[i]]));
      UniPoly g = lagrange_interpolate(xs, ys);
      if (uni_degree(g) == k) {
        auto [q, r] = uni_divmod(p, g);
        if (r.empty()) return uni_monic(g);
      }
      // advance odometer over (idx, sign), sign of point 0 fixed
      int i = 0;
      for (; i <= k; ++i) {
        if (i > 0 && sign[i] == 1) {
          sign[i] = -1;
          break;
        }
        sign[i] = 1;
        if (++idx[i] < divs[i].size()) break;
        idx[i] = 0;
      }
      if (i > k) break;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<UniPoly, UniPoly>> coprime_split(const UniPoly& p_in) {
  UniPoly p = uni_monic(p_in);
  if (uni_degree(p) < 2) return std::nullopt;

  UniPoly sf = uni_divmod(p, uni_gcd(p, uni_derivative(p))).first;  // squarefree part
  sf = uni_monic(sf);

  // find a nontrivial factorization of the squarefree part
  UniPoly f;
  auto roots = rational_roots(sf);
  if (!roots.empty()) {
    f = {Rational(1)};
    for (auto& [r, m] : roots) f = uni_mul(f, UniPoly{-r, Rational(1)});
    if (uni_degree(f) == uni_degree(sf)) {
      if (roots.size() < 2) return std::nullopt;  // single linear root: primary
      f = UniPoly{-roots[0].first, Rational(1)};
    }
  } else if (uni_degree(sf) >= 4) {
    auto kf = kronecker_factor(sf);
    if (!kf) return std::nullopt;
    f = *kf;
  } else {
    return std::nullopt;  // squarefree degree 2-3 with no rational roots: irreducible
  }

  // lift to a coprime split of p: collect the full f-primary part
  UniPoly fp = {Rational(1)};
  for (int i = 0; i < uni_degree(p); ++i) fp = uni_mul(fp, f);
  UniPoly F = uni_gcd(p, fp);
  UniPoly G = uni_divmod(p, F).first;
  if (uni_degree(F) < 1 || uni_degree(G) < 1) return std::nullopt;
  return std::make_pair(uni_monic(F), uni_monic(G));
}

}  // namespace clab
