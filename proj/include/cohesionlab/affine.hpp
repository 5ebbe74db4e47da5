#pragma once

#include <string>
#include <vector>

#include "cohesionlab/algebra.hpp"

namespace clab {

// Affine schemes are algebras read contravariantly: a map Spec B -> Spec A is
// an AlgMorphism A -> B. The structs below bundle the dual data of each
// construction.

struct AffineScheme {
  FpAlgebra algebra;
  std::string name;
};

struct PointedScheme {
  FpAlgebra algebra;
  AlgMorphism point;  // algebra -> k
};

/// Pointed by the unique point; throws NotWeil when the point is not unique.
PointedScheme pointed(const FpAlgebra& w);

/// Representing algebra of (Spec A)^(Spec W) for a Weil algebra W, with the
/// generic-coefficient coordinates a_{i,j} (generator i of A, basis index j
/// of W; basis index 0 is the unit monomial).
struct Prolongation {
  FpAlgebra algebra;
  std::vector<std::vector<Polynomial>> coord;  // coord[i][j] = class of a_{i,j}
  AlgMorphism ev0;        // A -> algebra, dual of evaluation at the point of Spec W
  AlgMorphism constants;  // algebra -> A, dual of the constant-family section
};

/// Throws NotWeil when w fails is_weil.
Prolongation weil_prolongation(const FpAlgebra& a, const FpAlgebra& w);

/// R as the pullback of the point of T along ev0 : T^T -> T. The inclusion is
/// the dual surjection; coeff[i][j] is the image of a_{i,j} in R.
struct EulerReals {
  Prolongation exp;  // T^T
  FpAlgebra algebra;
  AlgMorphism inclusion;  // exp.algebra -> algebra
  std::vector<std::vector<Polynomial>> coeff;
};

EulerReals euler_reals(const PointedScheme& t);

/// Monoid-with-zero structure on R induced by composition of the classified
/// endomorphism families, expressed as comultiplication on coordinates.
struct EulerMonoid {
  EulerReals reals;
  Coproduct square;    // R (+) R; left copy is the outer factor of composition
  AlgMorphism comult;  // R -> square
  AlgMorphism one;     // R -> k, transpose of the identity endomorphism
  AlgMorphism zero;    // R -> k, transpose of the constant endomorphism
};

EulerMonoid monoid_mult(const PointedScheme& t);

/// Associativity, two-sided unit, and zero absorption as normal-form
/// identities in the triple coproduct.
bool euler_monoid_laws(const EulerMonoid& m);

/// Ring-object data on Spec(algebra), dual maps throughout. The additive
/// comultiplication is kept as raw images: check_kl only needs it after the
/// dimension tests pass, and verifies it at that point.
struct RingData {
  FpAlgebra algebra;
  Coproduct square;    // algebra (+) algebra
  AlgMorphism comult;  // multiplicative comultiplication, verified
  std::vector<Polynomial> coadd_images;  // candidate additive comultiplication
  AlgMorphism zero, one;                 // points algebra -> k
};

/// Spec k[x] with x -> y z, x -> y + z, 0, 1.
RingData line_ring();

struct KlVerdict {
  bool holds;
  std::string certificate;
};

/// Whether the canonical map R x R -> R^D is an isomorphism, where D is the
/// subscheme of square-zero elements. Throws DNotWeil when D's algebra is not
/// a Weil algebra.
KlVerdict check_kl(const RingData& r);

/// Symbolic verification that endomorphisms of Spec k[eps]/(eps^2) are the
/// affine pairs (a, b) with a^2 = 0, 2ab = 0 and compose by
/// (a,b) o (c,d) = (a + bc, bd).
struct EulerCompositionReport {
  bool law = false;            // generic composite equals (a + bc, bd)
  bool constraints = false;    // the composite satisfies the pair constraints
  bool identity = false;       // (0,1) is two-sided identity
  bool zero_law = false;       // (0,b) o (0,d) = (0, bd)
  bool presentation = false;   // constraint ideal matches the prolongation's
  bool ok() const { return law && constraints && identity && zero_law && presentation; }
};

EulerCompositionReport check_euler_composition();

/// Dual pushout of f : S -> A, g : S -> B (the scheme-level pullback of
/// Spec A -> Spec S <- Spec B).
struct Pullback {
  FpAlgebra algebra;
  AlgMorphism proj_left;   // A -> algebra
  AlgMorphism proj_right;  // B -> algebra
};

Pullback pullback(const AlgMorphism& f, const AlgMorphism& g);

/// U = Spec of r with a declared inverse of the first generator; connectedness
/// reported through the degree-bounded idempotent certificate.
struct Invertibles {
  FpAlgebra algebra;
  AlgMorphism inclusion;  // r -> algebra
  unsigned degree_bound = 4;
  bool connected_certificate = false;
};

Invertibles invertibles_scheme(const FpAlgebra& r, unsigned degree_bound = 4);

}  // namespace clab
