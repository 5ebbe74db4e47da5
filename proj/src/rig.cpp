#include "cohesionlab/rig.hpp"

#include <algorithm>

#include "cohesionlab/errors.hpp"

namespace clab {

FiniteRig FiniteRig::make(std::string name, std::vector<std::string> names,
                          std::vector<std::vector<size_t>> add,
                          std::vector<std::vector<size_t>> mul, size_t zero, size_t one) {
  FiniteRig k;
  k.name = std::move(name);
  k.names = std::move(names);
  k.add = std::move(add);
  k.mul = std::move(mul);
  k.zero = zero;
  k.one = one;
  size_t n = k.names.size();
  auto check_table = [&](const std::vector<std::vector<size_t>>& t, const char* what) {
    if (t.size() != n) throw Error(std::string(what) + " table has wrong size");
    for (const auto& row : t) {
      if (row.size() != n) throw Error(std::string(what) + " table row has wrong size");
      for (size_t v : row)
        if (v >= n) throw Error(std::string(what) + " table value out of range");
    }
  };
  check_table(k.add, "addition");
  check_table(k.mul, "multiplication");
  if (zero >= n || one >= n) throw Error("distinguished element out of range");
  for (size_t x = 0; x < n; ++x) {
    if (k.add[zero][x] != x || k.add[x][zero] != x) throw Error("0 is not an additive unit");
    if (k.mul[one][x] != x || k.mul[x][one] != x) throw Error("1 is not a multiplicative unit");
    if (k.mul[zero][x] != zero || k.mul[x][zero] != zero) throw Error("0 is not absorbing");
    for (size_t y = 0; y < n; ++y) {
      if (k.add[x][y] != k.add[y][x]) throw Error("addition is not commutative");
      for (size_t z = 0; z < n; ++z) {
        if (k.add[k.add[x][y]][z] != k.add[x][k.add[y][z]])
          throw Error("addition is not associative");
        if (k.mul[k.mul[x][y]][z] != k.mul[x][k.mul[y][z]])
          throw Error("multiplication is not associative");
        if (k.mul[x][k.add[y][z]] != k.add[k.mul[x][y]][k.mul[x][z]])
          throw Error("left distributivity fails");
        if (k.mul[k.add[y][z]][x] != k.add[k.mul[y][x]][k.mul[z][x]])
          throw Error("right distributivity fails");
      }
    }
  }
  return k;
}

std::optional<size_t> FiniteRig::neg(size_t x) const {
  for (size_t y = 0; y < size(); ++y)
    if (add[x][y] == zero) return y;
  return std::nullopt;
}

bool FiniteRig::is_ring() const {
  for (size_t x = 0; x < size(); ++x)
    if (!neg(x)) return false;
  return true;
}

FiniteRig zmod_rig(size_t n) {
  std::vector<std::string> names;
  std::vector<std::vector<size_t>> add(n, std::vector<size_t>(n)), mul(n, std::vector<size_t>(n));
  for (size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (size_t j = 0; j < n; ++j) {
      add[i][j] = (i + j) % n;
      mul[i][j] = (i * j) % n;
    }
  }
  return FiniteRig::make("Z" + std::to_string(n), std::move(names), std::move(add), std::move(mul),
                         0, 1 % n);
}

FiniteRig boolean_rig() {
  return FiniteRig::make("bool", {"0", "1"}, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, 0, 1);
}

FiniteRig minplus3_rig() {
  // carrier 0 < 1 < oo; join = min (neutral oo), times = plus capped at 1
  // (oo absorbing), so rig-zero is oo and rig-one is 0
  return FiniteRig::make("minplus3", {"0", "1", "oo"},
                         {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}},   // min
                         {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}},   // capped plus
                         2, 0);
}

const std::vector<FiniteRig>& rig_catalog() {
  static const std::vector<FiniteRig> catalog = {zmod_rig(2), zmod_rig(3),      zmod_rig(4),
                                                 zmod_rig(6), boolean_rig(),    minplus3_rig()};
  return catalog;
}

const FiniteRig* find_rig(const std::string& name) {
  for (const auto& k : rig_catalog())
    if (k.name == name) return &k;
  return nullptr;
}

Subset a_of(const FiniteRig& k, const Subset& p) {
  Subset a(k.size(), 0);
  for (size_t x = 0; x < k.size(); ++x) {
    bool ok = true;
    for (size_t q = 0; q < k.size() && ok; ++q)
      if (p[q] && !p[k.add[x][q]]) ok = false;
    a[x] = ok;
  }
  return a;
}

Subset m_of(const FiniteRig& k, const Subset& a) {
  Subset m(k.size(), 0);
  for (size_t x = 0; x < k.size(); ++x) {
    bool ok = true;
    for (size_t q = 0; q < k.size() && ok; ++q)
      if (a[q] && !a[k.mul[x][q]]) ok = false;
    m[x] = ok;
  }
  return m;
}

Prop2Report verify_prop2(const FiniteRig& k, const Subset& p) {
  Prop2Report r;
  r.a = a_of(k, p);
  r.m = m_of(k, r.a);
  size_t n = k.size();

  r.a_additive_submonoid = r.a[k.zero];
  if (!r.a_additive_submonoid) r.witness = "0 not in A";
  for (size_t x = 0; x < n && r.a_additive_submonoid; ++x)
    for (size_t y = 0; y < n; ++y)
      if (r.a[x] && r.a[y] && !r.a[k.add[x][y]]) {
        r.a_additive_submonoid = false;
        r.witness = "A not closed under + at " + k.names[x] + " + " + k.names[y];
        break;
      }

  r.m_subrig = r.m[k.zero] && r.m[k.one];
  if (!r.m_subrig && r.witness.empty()) r.witness = "0 or 1 not in M";
  for (size_t x = 0; x < n && r.m_subrig; ++x)
    for (size_t y = 0; y < n; ++y)
      if (r.m[x] && r.m[y] && (!r.m[k.add[x][y]] || !r.m[k.mul[x][y]])) {
        r.m_subrig = false;
        r.witness = "M not a subrig at " + k.names[x] + ", " + k.names[y];
        break;
      }

  r.one_in_a = r.a[k.one];
  r.m_in_a = true;
  for (size_t x = 0; x < n; ++x)
    if (r.m[x] && !r.a[x]) r.m_in_a = false;
  if (r.one_in_a && !r.m_in_a && r.witness.empty()) r.witness = "1 in A but M not inside A";

  r.p_mult_subgroup = p[k.one];
  for (size_t x = 0; x < n && r.p_mult_subgroup; ++x) {
    if (!p[x]) continue;
    bool inv = false;
    for (size_t y = 0; y < n; ++y) {
      if (p[y] && !p[k.mul[x][y]]) r.p_mult_subgroup = false;
      if (p[y] && k.mul[x][y] == k.one && k.mul[y][x] == k.one) inv = true;
    }
    if (!inv) r.p_mult_subgroup = false;
  }
  r.p_in_m = true;
  for (size_t x = 0; x < n; ++x)
    if (p[x] && !r.m[x]) r.p_in_m = false;
  if (r.p_mult_subgroup && !r.p_in_m && r.witness.empty())
    r.witness = "P a multiplicative subgroup but P not inside M";
  return r;
}

LemmaAMReport verify_lemma_am(const FiniteRig& k, const Subset& p, bool require_clause1) {
  if (require_clause1 && !k.is_ring())
    throw NotARing("lemma clause 1 needs additive inverses; " + k.name + " is not a ring");
  LemmaAMReport r;
  Subset a = a_of(k, p), m = m_of(k, a);
  size_t n = k.size();

  r.one_in_p = p[k.one];
  r.one_in_a = a[k.one];
  r.clause1 = true;
  if (k.is_ring()) {
    r.clause1_checked = true;
    size_t minus_one = *k.neg(k.one);
    r.minus_one_in_m = m[minus_one];
    r.zero_in_p = p[k.zero];
    if (r.one_in_p && r.one_in_a && r.minus_one_in_m && !r.zero_in_p) {
      r.clause1 = false;
      r.witness = "1 in P, 1 in A and -1 in M but 0 not in P";
    }
  }

  r.clause2_applicable = r.one_in_a;
  r.m_equals_a = a == m;
  r.a_mult_closed = true;
  for (size_t x = 0; x < n && r.a_mult_closed; ++x)
    for (size_t y = 0; y < n; ++y)
      if (a[x] && a[y] && !a[k.mul[x][y]]) {
        r.a_mult_closed = false;
        break;
      }
  r.clause2 = !r.clause2_applicable || (r.m_equals_a == r.a_mult_closed);
  if (!r.clause2 && r.witness.empty()) r.witness = "clause 2 biconditional fails";
  return r;
}

namespace {

// The membership predicate is piecewise constant between critical parameter
// values, so testing each critical value, each gap midpoint and one sample
// beyond each extreme decides the full set.
QIntervalSet assemble(const std::vector<Rational>& critical, const auto& holds) {
  if (critical.empty()) return holds(Rational(0)) ? QIntervalSet::all() : QIntervalSet::empty();
  std::vector<QInterval> parts;
  if (holds(critical.front() - 1))
    parts.push_back(qinterval(std::nullopt, false, critical.front(), false));
  for (size_t i = 0; i < critical.size(); ++i) {
    if (holds(critical[i]))
      parts.push_back(qinterval(critical[i], true, critical[i], true));
    if (i + 1 < critical.size()) {
      Rational mid = (critical[i] + critical[i + 1]) / 2;
      if (holds(mid)) parts.push_back(qinterval(critical[i], false, critical[i + 1], false));
    }
  }
  if (holds(critical.back() + 1))
    parts.push_back(qinterval(critical.back(), false, std::nullopt, false));
  return QIntervalSet::of(std::move(parts));
}

}  // namespace

QIntervalSet a_of_interval(const QIntervalSet& p) {
  std::vector<Rational> ends = p.finite_endpoints();
  std::vector<Rational> critical{Rational(0)};
  for (const auto& e : ends)
    for (const auto& f : ends) critical.push_back(e - f);
  std::sort(critical.begin(), critical.end());
  critical.erase(std::unique(critical.begin(), critical.end()), critical.end());
  return assemble(critical, [&](const Rational& x) { return p.translate(x).subset_of(p); });
}

QIntervalSet m_of_interval(const QIntervalSet& a) {
  std::vector<Rational> ends = a.finite_endpoints();
  std::vector<Rational> critical{Rational(0), Rational(1), Rational(-1)};
  for (const auto& e : ends)
    for (const auto& f : ends)
      if (f != 0) {
        critical.push_back(e / f);
        critical.push_back(-e / f);
      }
  std::sort(critical.begin(), critical.end());
  critical.erase(std::unique(critical.begin(), critical.end()), critical.end());
  return assemble(critical, [&](const Rational& x) { return a.scale(x).subset_of(a); });
}

IntervalProp2Report verify_prop2_interval(const QIntervalSet& p) {
  IntervalProp2Report r;
  r.a = a_of_interval(p);
  r.m = m_of_interval(r.a);

  r.a_additive_submonoid = r.a.contains(Rational(0)) && r.a.sum(r.a).subset_of(r.a);
  if (!r.a_additive_submonoid) r.witness = "A is not an additive submonoid";
  r.m_subrig = r.m.contains(Rational(0)) && r.m.contains(Rational(1)) &&
               r.m.sum(r.m).subset_of(r.m) && r.m.product(r.m).subset_of(r.m);
  if (!r.m_subrig && r.witness.empty()) r.witness = "M is not a subrig";

  r.one_in_a = r.a.contains(Rational(1));
  r.m_in_a = r.m.subset_of(r.a);
  if (r.one_in_a && !r.m_in_a && r.witness.empty()) r.witness = "1 in A but M not inside A";

  r.p_mult_subgroup = p.contains(Rational(1)) && !p.contains(Rational(0)) &&
                      p.product(p).subset_of(p) && p.reciprocal().subset_of(p);
  r.p_in_m = p.subset_of(r.m);
  if (r.p_mult_subgroup && !r.p_in_m && r.witness.empty())
    r.witness = "P a multiplicative subgroup but P not inside M";
  return r;
}

IntervalLemmaAMReport verify_lemma_am_interval(const QIntervalSet& p) {
  IntervalLemmaAMReport r;
  QIntervalSet a = a_of_interval(p), m = m_of_interval(a);
  r.one_in_p = p.contains(Rational(1));
  r.one_in_a = a.contains(Rational(1));
  r.minus_one_in_m = m.contains(Rational(-1));
  r.zero_in_p = p.contains(Rational(0));
  r.clause1 = !(r.one_in_p && r.one_in_a && r.minus_one_in_m) || r.zero_in_p;
  r.clause2_applicable = r.one_in_a;
  r.m_equals_a = a == m;
  r.a_mult_closed = a.product(a).subset_of(a);
  r.clause2 = !r.clause2_applicable || (r.m_equals_a == r.a_mult_closed);
  return r;
}

}  // namespace clab
