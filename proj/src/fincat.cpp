#include "cohesionlab/fincat.hpp"

#include <utility>

#include "cohesionlab/errors.hpp"

namespace clab {

FinCat FinCat::make(std::vector<std::string> objects, std::vector<Mor> morphisms,
                    std::vector<size_t> identities, std::vector<std::vector<int>> composition) {
  FinCat c;
  c.object_names_ = std::move(objects);
  c.mors_ = std::move(morphisms);
  c.ids_ = std::move(identities);
  c.comp_ = std::move(composition);

  const size_t n = c.object_names_.size();
  const size_t m = c.mors_.size();
  if (c.ids_.size() != n) throw Error("identity list size mismatch");
  if (c.comp_.size() != m) throw Error("composition table size mismatch");
  for (const auto& row : c.comp_)
    if (row.size() != m) throw Error("composition table row size mismatch");
  for (const auto& f : c.mors_)
    if (f.dom >= n || f.cod >= n) throw Error("morphism endpoint out of range");
  for (size_t o = 0; o < n; ++o) {
    size_t i = c.ids_[o];
    if (i >= m || c.mors_[i].dom != o || c.mors_[i].cod != o)
      throw Error("bad identity for object " + c.object_names_[o]);
  }
  for (size_t g = 0; g < m; ++g)
    for (size_t f = 0; f < m; ++f) {
      bool composable = c.mors_[f].cod == c.mors_[g].dom;
      int gf = c.comp_[g][f];
      if (!composable) {
        if (gf != -1) throw Error("composition defined on non-composable pair");
        continue;
      }
      if (gf < 0 || static_cast<size_t>(gf) >= m)
        throw Error("composition undefined on composable pair");
      if (c.mors_[gf].dom != c.mors_[f].dom || c.mors_[gf].cod != c.mors_[g].cod)
        throw Error("composite has wrong endpoints");
    }
  for (size_t f = 0; f < m; ++f) {
    if (static_cast<size_t>(c.comp_[f][c.ids_[c.mors_[f].dom]]) != f ||
        static_cast<size_t>(c.comp_[c.ids_[c.mors_[f].cod]][f]) != f)
      throw Error("identity law fails at " + c.mors_[f].name);
  }
  for (size_t h = 0; h < m; ++h)
    for (size_t g = 0; g < m; ++g) {
      if (c.mors_[g].cod != c.mors_[h].dom) continue;
      for (size_t f = 0; f < m; ++f) {
        if (c.mors_[f].cod != c.mors_[g].dom) continue;
        if (c.comp_[h][c.comp_[g][f]] != c.comp_[c.comp_[h][g]][f])
          throw Error("associativity fails");
      }
    }

  for (size_t t = 0; t < n && !c.terminal_; ++t) {
    bool ok = true;
    for (size_t o = 0; o < n && ok; ++o) ok = c.hom(o, t).size() == 1;
    if (ok) c.terminal_ = t;
  }
  return c;
}

size_t FinCat::compose(size_t g, size_t f) const {
  if (mors_[f].cod != mors_[g].dom)
    throw Error("morphisms " + mors_[g].name + " and " + mors_[f].name + " are not composable");
  return static_cast<size_t>(comp_[g][f]);
}

std::vector<size_t> FinCat::hom(size_t a, size_t b) const {
  std::vector<size_t> out;
  for (size_t f = 0; f < mors_.size(); ++f)
    if (mors_[f].dom == a && mors_[f].cod == b) out.push_back(f);
  return out;
}

FinCat one_object_site() {
  return FinCat::make({"*"}, {{0, 0, "id"}}, {0}, {{0}});
}

FinCat arrow_site() {
  // morphisms: id_0, id_1, u : 0 -> 1
  return FinCat::make({"0", "1"}, {{0, 0, "id_0"}, {1, 1, "id_1"}, {0, 1, "u"}}, {0, 1},
                      {{0, -1, -1}, {-1, 1, 2}, {2, -1, -1}});
}

FinCat retract_site() {
  // objects 1, c; morphisms id_1, id_c, s : 1 -> c, p : c -> 1, e = s o p
  // with p o s = id_1.
  return FinCat::make({"1", "c"},
                      {{0, 0, "id_1"}, {1, 1, "id_c"}, {0, 1, "s"}, {1, 0, "p"}, {1, 1, "e"}},
                      {0, 1},
                      {
                          {0, -1, -1, 3, -1},   // id_1 o -
                          {-1, 1, 2, -1, 4},    // id_c o -
                          {2, -1, -1, 4, -1},   // s o -
                          {-1, 3, 0, -1, 3},    // p o -
                          {-1, 4, 2, -1, 4},    // e o -
                      });
}

FinCat indiscrete_site(std::vector<std::string> objects) {
  const size_t n = objects.size();
  if (n == 0) throw Error("indiscrete site needs at least one object");
  // morphism index n*a + b is the unique arrow a -> b
  std::vector<FinCat::Mor> mors;
  std::vector<size_t> ids;
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b)
      mors.push_back({a, b, "u_" + objects[a] + "_" + objects[b]});
    ids.push_back(n * a + a);
  }
  std::vector<std::vector<int>> comp(mors.size(), std::vector<int>(mors.size(), -1));
  for (size_t g = 0; g < mors.size(); ++g)
    for (size_t f = 0; f < mors.size(); ++f)
      if (mors[f].cod == mors[g].dom)
        comp[g][f] = static_cast<int>(n * mors[f].dom + mors[g].cod);
  return FinCat::make(std::move(objects), std::move(mors), std::move(ids), std::move(comp));
}

}  // namespace clab
