#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohesionlab/groebner.hpp"
#include "cohesionlab/linalg.hpp"
#include "cohesionlab/polynomial.hpp"

namespace clab {

/// Finitely presented commutative Q-algebra. Element equality is decided by
/// normal form against the cached reduced Groebner basis of the relations.
class FpAlgebra {
 public:
  FpAlgebra() = default;

  static FpAlgebra make(std::vector<std::string> gens, std::vector<Polynomial> relations,
                        MonomialOrder order = MonomialOrder::Grevlex);
  static FpAlgebra make(std::vector<std::string> gens, const std::vector<std::string>& relation_texts,
                        MonomialOrder order = MonomialOrder::Grevlex);
  /// The base field Q as an algebra (no generators).
  static FpAlgebra base();

  const std::vector<std::string>& gens() const { return gens_; }
  const Ideal& relations() const { return relations_; }

  Polynomial nf(const Polynomial& p) const { return relations_.nf(p); }
  bool equal(const Polynomial& p, const Polynomial& q) const { return nf(p - q).is_zero(); }
  bool is_zero_algebra() const { return relations_.is_unit(); }

  Polynomial parse(const std::string& text) const { return parse_polynomial(text, gens_); }
  Polynomial var(const std::string& name) const { return Polynomial::variable(gens_, name); }
  Polynomial constant(const Rational& c) const { return Polynomial::constant(gens_, c); }
  Polynomial one() const { return constant(1); }

  std::string presentation() const;  // e.g. "k[x,y]/(x y, y^2)"

  bool operator==(const FpAlgebra& o) const {
    return gens_ == o.gens_ && relations_.basis() == o.relations_.basis();
  }

 private:
  std::vector<std::string> gens_;
  Ideal relations_;
};

/// Generator-image morphism between finitely presented algebras. Construct
/// through hom_check (or the named helpers) so well-definedness always holds.
class AlgMorphism {
 public:
  AlgMorphism() = default;
  AlgMorphism(FpAlgebra dom, FpAlgebra cod, std::vector<Polynomial> images);

  const FpAlgebra& dom() const { return dom_; }
  const FpAlgebra& cod() const { return cod_; }
  const std::vector<Polynomial>& images() const { return images_; }

  Polynomial apply(const Polynomial& p) const;
  static AlgMorphism identity(const FpAlgebra& a);
  /// this after f  (dom f --f--> , --this--> cod this)
  AlgMorphism after(const AlgMorphism& f) const;

  bool operator==(const AlgMorphism& o) const;

 private:
  FpAlgebra dom_, cod_;
  std::vector<Polynomial> images_;  // normal forms in cod
};

/// Verifies every relation of dom maps to zero; throws NotWellDefined otherwise.
AlgMorphism hom_check(const FpAlgebra& dom, const FpAlgebra& cod,
                      const std::vector<Polynomial>& images);
AlgMorphism hom_check(const FpAlgebra& dom, const FpAlgebra& cod,
                      const std::vector<std::string>& image_texts);

struct Coproduct {
  FpAlgebra algebra;
  AlgMorphism inj_left, inj_right;
};

/// A (+) B with positional fresh renaming: two arity-1 factors become k[y,z].
Coproduct tensor_coproduct(const FpAlgebra& a, const FpAlgebra& b);

struct TensorPower {
  FpAlgebra algebra;
  std::vector<AlgMorphism> injections;
};

/// n-fold coproduct of copies of a, with per-copy variable renaming.
TensorPower tensor_power(const FpAlgebra& a, size_t n);

/// Induced map A (+) B -> C (+) D from f : A -> C and g : B -> D.
AlgMorphism tensor_map(const Coproduct& dom, const Coproduct& cod, const AlgMorphism& f,
                       const AlgMorphism& g);

struct Quotient {
  FpAlgebra algebra;
  AlgMorphism projection;
};

Quotient quotient(const FpAlgebra& a, const std::vector<Polynomial>& extra);

struct DirectProduct {
  FpAlgebra algebra;
  AlgMorphism proj_left, proj_right;
  Polynomial idempotent;  // e with proj_left(e) = 1, proj_right(e) = 0
};

DirectProduct direct_product(const FpAlgebra& a, const FpAlgebra& b);

/// Monomial basis of the underlying vector space (staircase of the reduced
/// basis); nullopt when infinite-dimensional.
std::optional<std::vector<Exponents>> finite_dim_basis(const FpAlgebra& a);

/// Structure constants of a finite-dimensional algebra.
struct FiniteStructure {
  std::vector<std::string> vars;
  std::vector<Exponents> basis;
  QVec unit;
  std::vector<std::vector<QVec>> mult;  // mult[i][j] = coordinates of basis_i * basis_j

  size_t dim() const { return basis.size(); }
  QVec coords(const Polynomial& normal_form) const;
  Polynomial element(const QVec& coords) const;
  QVec multiply(const QVec& x, const QVec& y) const;
};

/// Throws InfiniteDimensional.
FiniteStructure finite_structure(const FpAlgebra& a);

/// The complete list of solutions of e^2 = e, by recursive splitting on the
/// eigenstructure of multiplication operators. Throws InfiniteDimensional.
std::vector<Polynomial> idempotents(const FpAlgebra& a);

/// No nontrivial idempotent with normal-form degree <= bound; usable on
/// positive-dimensional algebras as a connectedness certificate.
bool no_idempotent_up_to_degree(const FpAlgebra& a, unsigned bound);

/// Finite-dimensional, exactly one point, nilpotent augmentation ideal.
bool is_weil(const FpAlgebra& a);

struct PointsResult {
  std::vector<AlgMorphism> points;  // morphisms to Q
  bool complete;                    // false: "exists over extension: unknown"
};

/// All rational points of a zero-dimensional algebra; throws PositiveDimensional.
PointsResult points(const FpAlgebra& a);

}  // namespace clab
