#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cohesionlab/fincat.hpp"

namespace clab {

/// Presheaf on a FinCat: finite set 0..card[c]-1 at each object, and for each
/// morphism f : d -> c a transition act[f] : X(c) -> X(d). The site is
/// referenced, not owned; callers keep it alive.
struct Presheaf {
  const FinCat* site = nullptr;
  std::vector<size_t> card;               // per object
  std::vector<std::vector<size_t>> act;   // act[f][x] for x in X(cod f)

  /// Functoriality: identities act as identity, act[g o f] = act[f] o act[g].
  /// Throws Error on failure.
  void validate() const;

  bool operator==(const Presheaf& o) const { return card == o.card && act == o.act; }
};

Presheaf terminal_presheaf(const FinCat& c);
Presheaf empty_presheaf(const FinCat& c);
Presheaf constant_presheaf(const FinCat& c, size_t n);

/// y(c): at d the set hom(d, c) in ascending morphism order; y(c)(f) is
/// precomposition by f.
Presheaf representable(const FinCat& c, size_t obj);

/// Position of morphism f in hom(dom f, c); f must lie in that hom set.
size_t hom_position(const FinCat& c, size_t f);

struct NatTrans {
  std::vector<std::vector<size_t>> comp;  // comp[c][x]
  bool operator==(const NatTrans& o) const { return comp == o.comp; }
};

bool is_natural(const Presheaf& x, const Presheaf& y, const NatTrans& u);
NatTrans identity_nat(const Presheaf& x);
NatTrans compose_nat(const Presheaf& x, const NatTrans& g, const NatTrans& f);  // g after f
bool nat_monic(const Presheaf& x, const NatTrans& u);
bool nat_epic(const Presheaf& x, const Presheaf& y, const NatTrans& u);

/// Pairs are encoded as x * cardY(c) + y.
struct ProductPresheaf {
  Presheaf obj;
  NatTrans proj_left, proj_right;
};
ProductPresheaf product(const Presheaf& x, const Presheaf& y);
size_t pair_index(size_t x, size_t y, size_t card_y);
std::pair<size_t, size_t> unpair_index(size_t p, size_t card_y);

/// X's elements first, then Y's.
struct CoproductPresheaf {
  Presheaf obj;
  NatTrans inj_left, inj_right;
};
CoproductPresheaf coproduct(const Presheaf& x, const Presheaf& y);

/// Subpresheaf spanned by the listed elements (members[c] strictly
/// ascending); throws Error if not closed under the transitions.
struct Subpresheaf {
  Presheaf obj;       // elements renumbered by position in members
  NatTrans inclusion;
  std::vector<std::vector<size_t>> members;
};
Subpresheaf subpresheaf(const Presheaf& x, std::vector<std::vector<size_t>> members);

/// Pullback of u : X -> S along v : Y -> S, as a subpresheaf of X x Y.
Subpresheaf pullback_presheaf(const Presheaf& x, const Presheaf& y, const NatTrans& u,
                              const NatTrans& v);

/// Equalizer of u, v : X -> Y as a subpresheaf of X.
Subpresheaf equalizer(const Presheaf& x, const Presheaf& y, const NatTrans& u, const NatTrans& v);

/// All natural transformations X -> Y in deterministic order (lexicographic in
/// the flattened component tables). Throws SizeLimit when the backtracking
/// search visits more than `limit` nodes.
std::vector<NatTrans> all_nat_trans(const Presheaf& x, const Presheaf& y, uint64_t limit);
uint64_t nat_trans_count(const Presheaf& x, const Presheaf& y, uint64_t limit);

/// X^T computed stagewise: (X^T)(c) = Nat(y(c) x T, X). Elements at stage c
/// index the table eval[c]; eval[c][k] lists the value on each cell of
/// cells[c], which enumerates pairs (f : d -> c, t in T(d)) with f ascending.
struct Exponential {
  Presheaf obj;
  std::vector<std::vector<std::pair<size_t, size_t>>> cells;
  std::vector<std::vector<std::vector<size_t>>> eval;

  /// Value of element k at stage c on the cell (f, t); lies in X(dom f).
  size_t apply(size_t c, size_t k, size_t f, size_t t) const;
};

Exponential exponential(const Presheaf& x, const Presheaf& t, uint64_t limit);

/// Exhaustive search for a componentwise-bijective natural transformation.
bool naturally_isomorphic(const Presheaf& x, const Presheaf& y, uint64_t limit);

/// Connected components of the category of elements. Labels are assigned by
/// first occurrence scanning objects then elements in order.
struct Components {
  size_t count = 0;
  std::vector<std::vector<size_t>> label;  // label[c][x]
};
Components components(const Presheaf& x);

}  // namespace clab
