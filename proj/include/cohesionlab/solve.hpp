#pragma once

#include <vector>

#include "cohesionlab/polynomial.hpp"

namespace clab {

struct RationalSolutions {
  // Each point is aligned with the ambient variable list of the input system.
  std::vector<std::vector<Rational>> points;
  // false when the system may have further solutions over a field extension.
  bool complete = true;
};

/// All rational solutions of a zero-dimensional polynomial system, by lex
/// elimination and rational root extraction with back-substitution.
/// Throws PositiveDimensional when the solution set is not finite.
RationalSolutions solve_rational_system(const std::vector<Polynomial>& system);

}  // namespace clab
