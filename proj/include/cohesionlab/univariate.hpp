#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cohesionlab/rational.hpp"

namespace clab {

// Dense univariate polynomial over Q, coefficients ascending, no trailing zeros.
using UniPoly = std::vector<Rational>;

void uni_trim(UniPoly& p);
int uni_degree(const UniPoly& p);  // -1 for zero
UniPoly uni_add(const UniPoly& a, const UniPoly& b);
UniPoly uni_sub(const UniPoly& a, const UniPoly& b);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b);
UniPoly uni_monic(const UniPoly& p);
UniPoly uni_gcd(const UniPoly& a, const UniPoly& b);  // monic
UniPoly uni_derivative(const UniPoly& p);
Rational uni_eval(const UniPoly& p, const Rational& x);

/// g = gcd(a,b) together with u, v such that u a + v b = g.
struct UniXgcd {
  UniPoly g, u, v;
};
UniXgcd uni_xgcd(const UniPoly& a, const UniPoly& b);

/// All rational roots with multiplicities.
std::vector<std::pair<Rational, int>> rational_roots(const UniPoly& p);

/// A nontrivial coprime factorization p = f * g over Q if one exists
/// (deg f, deg g >= 1, gcd(f, g) = 1). Complete for rational-coefficient input:
/// uses squarefree splitting, rational roots, and Kronecker factor search.
std::optional<std::pair<UniPoly, UniPoly>> coprime_split(const UniPoly& p);

}  // namespace clab
