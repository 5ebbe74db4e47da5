#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cohesionlab/rational.hpp"

namespace clab {

// Per-variable exponents; length always equals the ambient variable count.
using Exponents = std::vector<unsigned>;

enum class MonomialOrder { Grevlex, Lex };

/// true if a < b in the given order (variable 0 is the biggest).
bool exponents_less(const Exponents& a, const Exponents& b, MonomialOrder order);

bool divides(const Exponents& a, const Exponents& b);  // a | b componentwise
Exponents exp_add(const Exponents& a, const Exponents& b);
Exponents exp_sub(const Exponents& a, const Exponents& b);  // requires a >= b
Exponents exp_lcm(const Exponents& a, const Exponents& b);
unsigned total_degree(const Exponents& e);

/// Exact multivariate polynomial over Q. Terms never store zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Polynomial zero(const std::vector<std::string>& vars) { return Polynomial(vars); }
  static Polynomial constant(const std::vector<std::string>& vars, const Rational& c);
  static Polynomial variable(const std::vector<std::string>& vars, const std::string& name);
  static Polynomial monomial(const std::vector<std::string>& vars, const Exponents& e,
                             const Rational& c);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()
  unsigned degree() const;          // total degree; 0 for the zero polynomial

  void add_term(const Exponents& e, const Rational& c);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial pow(unsigned n) const;
  bool operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Leading exponent/coefficient with respect to an order. Requires non-zero.
  const Exponents& leading_exponents(MonomialOrder order) const;
  const Rational& leading_coefficient(MonomialOrder order) const;

  Polynomial monic(MonomialOrder order) const;

  /// Ring morphism application: each variable is replaced by images[i], which
  /// all live in a common (possibly different) ambient ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  /// Same ambient ring, single variable replaced.
  Polynomial substitute_var(const std::string& name, const Polynomial& value) const;

  /// Re-expresses this polynomial in a larger/reordered ambient ring. Every
  /// variable actually used must be present in new_vars.
  Polynomial rename_ambient(const std::vector<std::string>& new_vars) const;

  std::string str(MonomialOrder order = MonomialOrder::Grevlex) const;

 private:
  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;  // plain vector-lex keyed; order-agnostic storage
};

/// Parses the scenario-file polynomial grammar: `3/2 x^2 y - 1`, `+`, `-`, `^`,
/// juxtaposition for multiplication. Column numbers are 1-based within `text`.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars,
                            int line = 1);

}  // namespace clab
