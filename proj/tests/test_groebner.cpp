#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cohesionlab/groebner.hpp"
#include "cohesionlab/errors.hpp"
#include "cohesionlab/solve.hpp"

using namespace clab;

static const std::vector<std::string> XY = {"x", "y"};
static const std::vector<std::string> AB = {"a", "b"};

TEST_CASE("monomial ideals are already reduced bases") {
  auto gb = groebner_basis({parse_polynomial("x y", XY), parse_polynomial("y^2", XY)},
                           MonomialOrder::Lex);
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == parse_polynomial("y^2", XY));
  CHECK(gb[1] == parse_polynomial("x y", XY));
}

TEST_CASE("coefficient normalization: {a^2, 2ab} -> {a^2, ab}") {
  auto gb = groebner_basis({parse_polynomial("a^2", AB), parse_polynomial("2 a b", AB)},
                           MonomialOrder::Lex);
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == parse_polynomial("a b", AB));
  CHECK(gb[1] == parse_polynomial("a^2", AB));
}

TEST_CASE("zero and unit ideals") {
  CHECK(groebner_basis({}, MonomialOrder::Grevlex).empty());
  Ideal unit({parse_polynomial("x - 1", XY), parse_polynomial("x", XY)});
  CHECK(unit.is_unit());
  CHECK(unit.basis().size() == 1);
  CHECK(unit.basis()[0] == parse_polynomial("1", XY));
}

TEST_CASE("ideal membership") {
  Ideal I({parse_polynomial("x y", XY), parse_polynomial("y^2", XY)});
  CHECK(I.contains(parse_polynomial("y^3", XY)));
  CHECK(!I.contains(parse_polynomial("x", XY)));
  CHECK(I.contains(Polynomial::zero(XY)));
}

TEST_CASE("a classic computation: circle and hyperbola") {
  // x^2 + y^2 - 1, x y - 1: solutions satisfy an eliminant in y alone
  auto gb = groebner_basis(
      {parse_polynomial("x^2 + y^2 - 1", XY), parse_polynomial("x y - 1", XY)},
      MonomialOrder::Lex);
  bool has_univariate_y = false;
  for (auto& g : gb) {
    bool only_y = true;
    for (auto& [e, c] : g.terms())
      if (e[0] > 0) only_y = false;
    if (only_y && !g.is_constant()) has_univariate_y = true;
  }
  CHECK(has_univariate_y);
}

TEST_CASE("determinism and nf idempotence on random inputs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    int n = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < n; ++i) {
      Polynomial p = Polynomial::zero(XY);
      int terms = 1 + static_cast<int>(rng() % 3);
      for (int t = 0; t < terms; ++t) {
        Exponents e = {static_cast<unsigned>(rng() % 3), static_cast<unsigned>(rng() % 3)};
        long c = static_cast<long>(rng() % 7) - 3;
        p.add_term(e, Rational(c));
      }
      if (!p.is_zero()) gens.push_back(p);
    }
    auto gb1 = groebner_basis(gens, MonomialOrder::Grevlex);
    auto gb2 = groebner_basis(gens, MonomialOrder::Grevlex);
    CHECK(gb1 == gb2);
    // reduced: no leading term divides another, tails in normal form
    for (size_t i = 0; i < gb1.size(); ++i) {
      for (size_t j = 0; j < gb1.size(); ++j) {
        if (i == j) continue;
        CHECK(!divides(gb1[j].leading_exponents(MonomialOrder::Grevlex),
                       gb1[i].leading_exponents(MonomialOrder::Grevlex)));
      }
    }
    // nf idempotence and membership of s-combinations
    Polynomial probe = Polynomial::zero(XY);
    for (auto& g : gens) probe = probe + g * g;
    Polynomial nf1 = normal_form(probe, gb1, MonomialOrder::Grevlex);
    CHECK(normal_form(nf1, gb1, MonomialOrder::Grevlex) == nf1);
    CHECK(normal_form(probe - nf1, gb1, MonomialOrder::Grevlex).is_zero());
  }
}

TEST_CASE("rational system solver") {
  // x^2 = 1, y = x + 1  ->  (1,2), (-1,0)
  auto sol = solve_rational_system(
      {parse_polynomial("x^2 - 1", XY), parse_polynomial("y - x - 1", XY)});
  CHECK(sol.complete);
  REQUIRE(sol.points.size() == 2);
  CHECK(sol.points[0] == std::vector<Rational>{Rational(-1), Rational(0)});
  CHECK(sol.points[1] == std::vector<Rational>{Rational(1), Rational(2)});

  // x^2 + 1 = 0: no rational points, incomplete
  auto none = solve_rational_system({parse_polynomial("x^2 + 1", {"x"})});
  CHECK(none.points.empty());
  CHECK(!none.complete);

  // nilpotent: x^2 = 0 has the single rational solution 0, complete
  auto nil = solve_rational_system({parse_polynomial("x^2", {"x"})});
  CHECK(nil.complete);
  REQUIRE(nil.points.size() == 1);
  CHECK(nil.points[0][0] == 0);

  // positive dimensional: x y = 0 in two variables
  CHECK_THROWS_AS(solve_rational_system({parse_polynomial("x y", XY)}), PositiveDimensional);
}
