#pragma once

#include <vector>

#include "cohesionlab/polynomial.hpp"

namespace clab {

/// Normal form of f modulo a list of divisors (full tail reduction).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       MonomialOrder order);

/// Reduced Groebner basis by Buchberger completion. Deterministic for a fixed
/// order and input ordering: output is monic, inter-reduced and sorted by
/// leading monomial. The zero ideal yields {}, the unit ideal {1}.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, MonomialOrder order);

/// Generators plus a cached reduced basis.
class Ideal {
 public:
  Ideal() = default;
  Ideal(std::vector<Polynomial> gens, MonomialOrder order = MonomialOrder::Grevlex);

  const std::vector<Polynomial>& gens() const { return gens_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  MonomialOrder order() const { return order_; }

  bool contains(const Polynomial& f) const;
  Polynomial nf(const Polynomial& f) const { return normal_form(f, basis_, order_); }
  bool is_unit() const;  // 1 in the ideal
  bool is_zero() const { return basis_.empty(); }

 private:
  std::vector<Polynomial> gens_;
  std::vector<Polynomial> basis_;
  MonomialOrder order_ = MonomialOrder::Grevlex;
};

}  // namespace clab
