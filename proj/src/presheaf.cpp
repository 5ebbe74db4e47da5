#include "cohesionlab/presheaf.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cohesionlab/errors.hpp"

namespace clab {

void Presheaf::validate() const {
  const FinCat& c = *site;
  if (card.size() != c.objects() || act.size() != c.morphisms())
    throw Error("presheaf table sizes do not match the site");
  for (size_t f = 0; f < c.morphisms(); ++f) {
    if (act[f].size() != card[c.mor(f).cod])
      throw Error("transition " + c.mor(f).name + " has wrong domain size");
    for (size_t x : act[f])
      if (x >= card[c.mor(f).dom]) throw Error("transition value out of range");
  }
  for (size_t o = 0; o < c.objects(); ++o)
    for (size_t x = 0; x < card[o]; ++x)
      if (act[c.id(o)][x] != x) throw Error("identity does not act as identity");
  for (size_t g = 0; g < c.morphisms(); ++g)
    for (size_t f = 0; f < c.morphisms(); ++f) {
      if (c.mor(f).cod != c.mor(g).dom) continue;
      size_t gf = c.compose(g, f);
      for (size_t x = 0; x < card[c.mor(g).cod]; ++x)
        if (act[gf][x] != act[f][act[g][x]])
          throw Error("functoriality fails on " + c.mor(g).name + " o " + c.mor(f).name);
    }
}

Presheaf terminal_presheaf(const FinCat& c) { return constant_presheaf(c, 1); }
Presheaf empty_presheaf(const FinCat& c) { return constant_presheaf(c, 0); }

Presheaf constant_presheaf(const FinCat& c, size_t n) {
  Presheaf x;
  x.site = &c;
  x.card.assign(c.objects(), n);
  x.act.resize(c.morphisms());
  for (size_t f = 0; f < c.morphisms(); ++f) {
    x.act[f].resize(n);
    std::iota(x.act[f].begin(), x.act[f].end(), size_t{0});
  }
  return x;
}

size_t hom_position(const FinCat& c, size_t f) {
  auto h = c.hom(c.mor(f).dom, c.mor(f).cod);
  auto it = std::find(h.begin(), h.end(), f);
  return static_cast<size_t>(it - h.begin());
}

Presheaf representable(const FinCat& c, size_t obj) {
  Presheaf x;
  x.site = &c;
  std::vector<std::vector<size_t>> homs(c.objects());
  for (size_t d = 0; d < c.objects(); ++d) homs[d] = c.hom(d, obj);
  x.card.resize(c.objects());
  for (size_t d = 0; d < c.objects(); ++d) x.card[d] = homs[d].size();
  x.act.resize(c.morphisms());
  for (size_t f = 0; f < c.morphisms(); ++f) {
    size_t dom = c.mor(f).dom, cod = c.mor(f).cod;
    x.act[f].resize(homs[cod].size());
    for (size_t i = 0; i < homs[cod].size(); ++i) {
      size_t composite = c.compose(homs[cod][i], f);
      auto it = std::find(homs[dom].begin(), homs[dom].end(), composite);
      x.act[f][i] = static_cast<size_t>(it - homs[dom].begin());
    }
  }
  return x;
}

bool is_natural(const Presheaf& x, const Presheaf& y, const NatTrans& u) {
  const FinCat& c = *x.site;
  if (u.comp.size() != c.objects()) return false;
  for (size_t o = 0; o < c.objects(); ++o) {
    if (u.comp[o].size() != x.card[o]) return false;
    for (size_t v : u.comp[o])
      if (v >= y.card[o]) return false;
  }
  for (size_t f = 0; f < c.morphisms(); ++f) {
    size_t dom = c.mor(f).dom, cod = c.mor(f).cod;
    for (size_t e = 0; e < x.card[cod]; ++e)
      if (u.comp[dom][x.act[f][e]] != y.act[f][u.comp[cod][e]]) return false;
  }
  return true;
}

NatTrans identity_nat(const Presheaf& x) {
  NatTrans u;
  u.comp.resize(x.card.size());
  for (size_t o = 0; o < x.card.size(); ++o) {
    u.comp[o].resize(x.card[o]);
    std::iota(u.comp[o].begin(), u.comp[o].end(), size_t{0});
  }
  return u;
}

NatTrans compose_nat(const Presheaf& x, const NatTrans& g, const NatTrans& f) {
  NatTrans u;
  u.comp.resize(x.card.size());
  for (size_t o = 0; o < x.card.size(); ++o) {
    u.comp[o].resize(x.card[o]);
    for (size_t e = 0; e < x.card[o]; ++e) u.comp[o][e] = g.comp[o][f.comp[o][e]];
  }
  return u;
}

bool nat_monic(const Presheaf& x, const NatTrans& u) {
  for (size_t o = 0; o < x.card.size(); ++o) {
    std::vector<size_t> seen;
    for (size_t e = 0; e < x.card[o]; ++e) seen.push_back(u.comp[o][e]);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

bool nat_epic(const Presheaf& x, const Presheaf& y, const NatTrans& u) {
  for (size_t o = 0; o < x.card.size(); ++o) {
    std::vector<char> hit(y.card[o], 0);
    for (size_t e = 0; e < x.card[o]; ++e) hit[u.comp[o][e]] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return false;
  }
  return true;
}

size_t pair_index(size_t x, size_t y, size_t card_y) { return x * card_y + y; }
std::pair<size_t, size_t> unpair_index(size_t p, size_t card_y) {
  return {p / card_y, p % card_y};
}

ProductPresheaf product(const Presheaf& x, const Presheaf& y) {
  const FinCat& c = *x.site;
  ProductPresheaf r;
  r.obj.site = &c;
  r.obj.card.resize(c.objects());
  for (size_t o = 0; o < c.objects(); ++o) r.obj.card[o] = x.card[o] * y.card[o];
  r.obj.act.resize(c.morphisms());
  for (size_t f = 0; f < c.morphisms(); ++f) {
    size_t cod = c.mor(f).cod, dom = c.mor(f).dom;
    r.obj.act[f].resize(r.obj.card[cod]);
    for (size_t a = 0; a < x.card[cod]; ++a)
      for (size_t b = 0; b < y.card[cod]; ++b)
        r.obj.act[f][pair_index(a, b, y.card[cod])] =
            pair_index(x.act[f][a], y.act[f][b], y.card[dom]);
  }
  r.proj_left.comp.resize(c.objects());
  r.proj_right.comp.resize(c.objects());
  for (size_t o = 0; o < c.objects(); ++o) {
    r.proj_left.comp[o].resize(r.obj.card[o]);
    r.proj_right.comp[o].resize(r.obj.card[o]);
    for (size_t p = 0; p < r.obj.card[o]; ++p) {
      auto [a, b] = unpair_index(p, y.card[o]);
      r.proj_left.comp[o][p] = a;
      r.proj_right.comp[o][p] = b;
    }
  }
  return r;
}

CoproductPresheaf coproduct(const Presheaf& x, const Presheaf& y) {
  const FinCat& c = *x.site;
  CoproductPresheaf r;
  r.obj.site = &c;
  r.obj.card.resize(c.objects());
  for (size_t o = 0; o < c.objects(); ++o) r.obj.card[o] = x.card[o] + y.card[o];
  r.obj.act.resize(c.morphisms());
  for (size_t f = 0; f < c.morphisms(); ++f) {
    size_t cod = c.mor(f).cod, dom = c.mor(f).dom;
    r.obj.act[f].resize(r.obj.card[cod]);
    for (size_t a = 0; a < x.card[cod]; ++a) r.obj.act[f][a] = x.act[f][a];
    for (size_t b = 0; b < y.card[cod]; ++b)
      r.obj.act[f][x.card[cod] + b] = x.card[dom] + y.act[f][b];
  }
  r.inj_left.comp.resize(c.objects());
  r.inj_right.comp.resize(c.objects());
  for (size_t o = 0; o < c.objects(); ++o) {
    r.inj_left.comp[o].resize(x.card[o]);
    std::iota(r.inj_left.comp[o].begin(), r.inj_left.comp[o].end(), size_t{0});
    r.inj_right.comp[o].resize(y.card[o]);
    std::iota(r.inj_right.comp[o].begin(), r.inj_right.comp[o].end(), x.card[o]);
  }
  return r;
}

Subpresheaf subpresheaf(const Presheaf& x, std::vector<std::vector<size_t>> members) {
  const FinCat& c = *x.site;
  Subpresheaf s;
  s.members = std::move(members);
  // position maps, SIZE_MAX marking non-members
  std::vector<std::vector<size_t>> pos(c.objects());
  for (size_t o = 0; o < c.objects(); ++o) {
    pos[o].assign(x.card[o], static_cast<size_t>(-1));
    for (size_t i = 0; i < s.members[o].size(); ++i) pos[o][s.members[o][i]] = i;
  }
  s.obj.site = &c;
  s.obj.card.resize(c.objects());
  for (size_t o = 0; o < c.objects(); ++o) s.obj.card[o] = s.members[o].size();
  s.obj.act.resize(c.morphisms());
  for (size_t f = 0; f < c.morphisms(); ++f) {
    size_t cod = c.mor(f).cod, dom = c.mor(f).dom;
    s.obj.act[f].resize(s.obj.card[cod]);
    for (size_t i = 0; i < s.obj.card[cod]; ++i) {
      size_t image = x.act[f][s.members[cod][i]];
      if (pos[dom][image] == static_cast<size_t>(-1))
        throw Error("subset is not closed under " + c.mor(f).name);
      s.obj.act[f][i] = pos[dom][image];
    }
  }
  s.inclusion.comp = s.members;
  return s;
}

Subpresheaf pullback_presheaf(const Presheaf& x, const Presheaf& y, const NatTrans& u,
                              const NatTrans& v) {
  ProductPresheaf p = product(x, y);
  std::vector<std::vector<size_t>> members(x.card.size());
  for (size_t o = 0; o < x.card.size(); ++o)
    for (size_t e = 0; e < p.obj.card[o]; ++e) {
      auto [a, b] = unpair_index(e, y.card[o]);
      if (u.comp[o][a] == v.comp[o][b]) members[o].push_back(e);
    }
  return subpresheaf(p.obj, std::move(members));
}

Subpresheaf equalizer(const Presheaf& x, const Presheaf&, const NatTrans& u, const NatTrans& v) {
  std::vector<std::vector<size_t>> members(x.card.size());
  for (size_t o = 0; o < x.card.size(); ++o)
    for (size_t e = 0; e < x.card[o]; ++e)
      if (u.comp[o][e] == v.comp[o][e]) members[o].push_back(e);
  return subpresheaf(x, std::move(members));
}

namespace {

// Backtracking enumeration of natural transformations. Variables are the
// elements of X in global order; assigning u_c(x) forces
// u_d(X(f)(x)) = Y(f)(u_c(x)) for every f : d -> c, which is propagated
// eagerly. Values are tried in ascending order, so results come out in
// lexicographic order of the flattened table.
struct NatSearch {
  const Presheaf& x;
  const Presheaf& y;
  const FinCat& cat;
  uint64_t limit;
  uint64_t nodes = 0;
  std::vector<size_t> offset;
  size_t total = 0;
  std::vector<size_t> obj_of, elt_of;
  std::vector<std::vector<size_t>> into;  // morphisms with the given codomain
  std::vector<long long> val;
  std::vector<NatTrans> out;
  bool count_only;
  uint64_t count = 0;

  NatSearch(const Presheaf& x_, const Presheaf& y_, uint64_t limit_, bool count_only_)
      : x(x_), y(y_), cat(*x_.site), limit(limit_), count_only(count_only_) {
    offset.resize(cat.objects());
    for (size_t o = 0; o < cat.objects(); ++o) {
      offset[o] = total;
      total += x.card[o];
      for (size_t e = 0; e < x.card[o]; ++e) {
        obj_of.push_back(o);
        elt_of.push_back(e);
      }
    }
    into.resize(cat.objects());
    for (size_t f = 0; f < cat.morphisms(); ++f) into[cat.mor(f).cod].push_back(f);
    val.assign(total, -1);
  }

  // Returns false on conflict; records assignments in trail for undo.
  bool propagate(size_t var, size_t v, std::vector<size_t>& trail) {
    std::vector<std::pair<size_t, size_t>> queue{{var, v}};
    while (!queue.empty()) {
      auto [w, wv] = queue.back();
      queue.pop_back();
      if (val[w] >= 0) {
        if (static_cast<size_t>(val[w]) != wv) return false;
        continue;
      }
      val[w] = static_cast<long long>(wv);
      trail.push_back(w);
      size_t o = obj_of[w], e = elt_of[w];
      for (size_t f : into[o]) {
        size_t d = cat.mor(f).dom;
        queue.push_back({offset[d] + x.act[f][e], y.act[f][wv]});
      }
    }
    return true;
  }

  void run(size_t var) {
    while (var < total && val[var] >= 0) ++var;
    if (var == total) {
      if (count_only) {
        ++count;
      } else {
        NatTrans u;
        u.comp.resize(cat.objects());
        for (size_t o = 0; o < cat.objects(); ++o) {
          u.comp[o].resize(x.card[o]);
          for (size_t e = 0; e < x.card[o]; ++e)
            u.comp[o][e] = static_cast<size_t>(val[offset[o] + e]);
        }
        out.push_back(std::move(u));
      }
      return;
    }
    size_t o = obj_of[var];
    for (size_t v = 0; v < y.card[o]; ++v) {
      if (++nodes > limit) throw SizeLimit("natural transformation search exceeded node limit");
      std::vector<size_t> trail;
      if (propagate(var, v, trail)) run(var + 1);
      for (size_t w : trail) val[w] = -1;
    }
  }
};

}  // namespace

std::vector<NatTrans> all_nat_trans(const Presheaf& x, const Presheaf& y, uint64_t limit) {
  NatSearch s(x, y, limit, false);
  s.run(0);
  return std::move(s.out);
}

uint64_t nat_trans_count(const Presheaf& x, const Presheaf& y, uint64_t limit) {
  NatSearch s(x, y, limit, true);
  s.run(0);
  return s.count;
}

size_t Exponential::apply(size_t c, size_t k, size_t f, size_t t) const {
  auto key = std::make_pair(f, t);
  auto it = std::lower_bound(cells[c].begin(), cells[c].end(), key);
  if (it == cells[c].end() || *it != key) throw Error("exponential cell lookup failed");
  return eval[c][k][static_cast<size_t>(it - cells[c].begin())];
}

Exponential exponential(const Presheaf& x, const Presheaf& t, uint64_t limit) {
  const FinCat& c = *x.site;
  Exponential e;
  e.obj.site = &c;
  e.obj.card.resize(c.objects());
  e.cells.resize(c.objects());
  e.eval.resize(c.objects());
  std::vector<std::map<std::vector<size_t>, size_t>> index(c.objects());

  for (size_t o = 0; o < c.objects(); ++o) {
    for (size_t f = 0; f < c.morphisms(); ++f) {
      if (c.mor(f).cod != o) continue;
      for (size_t s = 0; s < t.card[c.mor(f).dom]; ++s) e.cells[o].emplace_back(f, s);
    }
    Presheaf yo = representable(c, o);
    ProductPresheaf p = product(yo, t);
    auto nats = all_nat_trans(p.obj, x, limit);
    for (auto& u : nats) {
      std::vector<size_t> flat(e.cells[o].size());
      for (size_t i = 0; i < e.cells[o].size(); ++i) {
        auto [f, s] = e.cells[o][i];
        size_t d = c.mor(f).dom;
        flat[i] = u.comp[d][pair_index(hom_position(c, f), s, t.card[d])];
      }
      if (index[o].emplace(flat, e.eval[o].size()).second) e.eval[o].push_back(std::move(flat));
    }
    e.obj.card[o] = e.eval[o].size();
  }

  e.obj.act.resize(c.morphisms());
  for (size_t h = 0; h < c.morphisms(); ++h) {
    size_t cod = c.mor(h).cod, dom = c.mor(h).dom;
    e.obj.act[h].resize(e.obj.card[cod]);
    for (size_t k = 0; k < e.obj.card[cod]; ++k) {
      std::vector<size_t> flat(e.cells[dom].size());
      for (size_t i = 0; i < e.cells[dom].size(); ++i) {
        auto [f, s] = e.cells[dom][i];
        flat[i] = e.apply(cod, k, c.compose(h, f), s);
      }
      auto it = index[dom].find(flat);
      if (it == index[dom].end()) throw Error("exponential restriction left the stage");
      e.obj.act[h][k] = it->second;
    }
  }
  return e;
}

bool naturally_isomorphic(const Presheaf& x, const Presheaf& y, uint64_t limit) {
  if (x.card != y.card) return false;
  for (const auto& u : all_nat_trans(x, y, limit))
    if (nat_monic(x, u) && nat_epic(x, y, u)) return true;
  for (size_t n : x.card)
    if (n > 0) return false;
  return true;  // both empty
}

Components components(const Presheaf& x) {
  const FinCat& c = *x.site;
  std::vector<size_t> offset(c.objects());
  size_t total = 0;
  for (size_t o = 0; o < c.objects(); ++o) {
    offset[o] = total;
    total += x.card[o];
  }
  std::vector<size_t> parent(total);
  std::iota(parent.begin(), parent.end(), size_t{0});
  auto find = [&](size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (size_t f = 0; f < c.morphisms(); ++f) {
    size_t cod = c.mor(f).cod, dom = c.mor(f).dom;
    for (size_t e = 0; e < x.card[cod]; ++e) {
      size_t a = find(offset[cod] + e), b = find(offset[dom] + x.act[f][e]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  Components r;
  std::vector<size_t> name(total, static_cast<size_t>(-1));
  r.label.resize(c.objects());
  for (size_t o = 0; o < c.objects(); ++o) {
    r.label[o].resize(x.card[o]);
    for (size_t e = 0; e < x.card[o]; ++e) {
      size_t root = find(offset[o] + e);
      if (name[root] == static_cast<size_t>(-1)) name[root] = r.count++;
      r.label[o][e] = name[root];
    }
  }
  return r;
}

}  // namespace clab
