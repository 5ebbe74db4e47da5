#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cohesionlab/presheaf.hpp"

namespace clab {

// The cohesion calculus for presheaves on a finite site with terminal object
// where every object has a point: the four-adjoint string, Euler reals as a
// subobject of T^T, and the internal-monoid layer on top.

struct SiteVerdict {
  bool ok = false;
  std::string reason;  // names a witness object on failure
};

SiteVerdict check_precohesive_site(const FinCat& c);

struct AdjointString {
  const FinCat* site = nullptr;
  size_t terminal = 0;
};

/// Throws NotPreCohesiveSite with the failing witness in the message.
AdjointString adjoint_string(const FinCat& c);

Components p_shriek(const Presheaf& x);
Presheaf p_star(const FinCat& c, size_t s);
size_t p_lower_star(const AdjointString& a, const Presheaf& x);  // |X(terminal)|
/// p^! S at c is the function set S^{hom(terminal, c)}, encoded mixed-radix in
/// ascending hom order (digit i = value on the i-th point of c).
Presheaf p_excl(const AdjointString& a, size_t s);

/// Unit of the leftmost adjunction: X -> p*(p_! X), x |-> its component.
NatTrans sigma_unit(const Presheaf& x);
/// Counit of the middle adjunction: p*(p_* X) -> X by restriction along the
/// unique map to the terminal object.
NatTrans beta_counit(const AdjointString& a, const Presheaf& x);

/// All four triangle-identity pairs, element by element, on X and on the set
/// {0..s-1}.
bool triangle_identities(const AdjointString& a, const Presheaf& x, size_t s);

/// beta_X monic and sigma_X epic, componentwise.
bool hyperconnected_check(const AdjointString& a, const Presheaf& x);

struct PointedPresheaf {
  Presheaf obj;
  std::vector<size_t> point;  // point[c] in obj(c); must be a natural family
};

/// Evaluation at the point: X^T -> X, alpha |-> alpha(id_c, 0_c).
NatTrans ev_zero(const Presheaf& x, const PointedPresheaf& t, const Exponential& e);

struct InternalMonoid {
  Presheaf carrier;
  std::vector<std::vector<std::vector<size_t>>> mult;  // mult[c][x][y]
  std::vector<size_t> unit;                            // unit[c] in carrier(c)

  /// Naturality of mult and unit, associativity, unit laws. Throws Error.
  void validate() const;
};

struct PresheafEuler {
  Exponential exp;        // T^T
  Subpresheaf sub;        // R, the ev0-fibre over the point
  InternalMonoid monoid;  // carrier = sub.obj, multiplication = composition
  std::vector<size_t> zero;  // the constant-at-0 family, in R numbering
};

PresheafEuler euler_reals_presheaf(const PointedPresheaf& t, uint64_t limit);

bool t_discrete_check(const Presheaf& x, const PointedPresheaf& t, uint64_t limit);

struct Prop1Report {
  bool applicable = false;  // R connected
  bool t_connected = false;
  bool retraction_found = false;  // some rho : T^T -> R with rho o incl = id
  bool holds = false;             // p_!(ev0) bijective
};

Prop1Report prop1_check(const Presheaf& x, const PointedPresheaf& t, const PresheafEuler& r,
                        uint64_t limit);

struct LieKernel {
  Exponential exp;  // R^T
  Subpresheaf sub;  // fibre of ev0 over the zero point of R
};

/// r is the carrier of the monoid pointed by its zero.
LieKernel lie_kernel(const PointedPresheaf& r, const PointedPresheaf& t, uint64_t limit);

struct UnitsReport {
  Subpresheaf units;   // U inside the carrier
  size_t pi0_u = 0;
  Subpresheaf u_plus;  // identity component, inside U
  bool pi0_group = false;
  bool bidirectional = false;  // pi0_u == 2
};

UnitsReport units_and_bidirectional(const AdjointString& a, const InternalMonoid& m);

struct InternalRig {
  Presheaf carrier;
  std::vector<std::vector<std::vector<size_t>>> add, mul;
  std::vector<size_t> zero, one;

  /// Commutative additive monoid, multiplicative monoid, distributivity,
  /// 0-absorption, naturality of everything. Throws Error.
  void validate() const;
};

InternalRig constant_internal_rig(const FinCat& c, const std::vector<std::vector<size_t>>& add,
                                  const std::vector<std::vector<size_t>>& mul, size_t zero,
                                  size_t one);

struct Prop2Internal {
  std::vector<std::vector<char>> a_members, m_members;  // per object / element
  bool a_restriction_stable = false, m_restriction_stable = false;
  bool a_additive_submonoid = false;
  bool m_subrig = false;
  bool one_in_a = false;        // 1 in A at every stage
  bool m_in_a = false;          // meaningful when one_in_a
  bool p_mult_subgroup = false;
  bool p_in_m = false;          // meaningful when p_mult_subgroup
};

/// A(c) = {a | for every f : d -> c and p in P(d), a|f + p in P(d)},
/// M(c) = {m | for every f : d -> c and a in A(d), m|f a in A(d)}.
/// p_members must describe a subpresheaf of the carrier.
Prop2Internal prop2_internal(const InternalRig& k, const std::vector<std::vector<char>>& p_members);

}  // namespace clab
