#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cohesionlab/algebra.hpp"
#include "cohesionlab/errors.hpp"
#include "oracles.hpp"

using namespace clab;

static FpAlgebra alg(std::vector<std::string> gens, std::vector<std::string> rels) {
  return FpAlgebra::make(std::move(gens), rels);
}

TEST_CASE("presentations") {
  CHECK(FpAlgebra::base().presentation() == "k");
  CHECK(alg({"x"}, {}).presentation() == "k[x]");
  CHECK(alg({"x", "y"}, {"x y", "y^2"}).presentation() == "k[x,y]/(y^2, x y)");
  CHECK(alg({"x"}, {"1"}).presentation() == "0");
  CHECK(alg({"x"}, {"1"}).is_zero_algebra());
}

TEST_CASE("element equality by normal form") {
  FpAlgebra a = alg({"x", "y"}, {"x y", "y^2"});
  CHECK(a.equal(a.parse("y^3"), a.constant(0)));
  CHECK(!a.equal(a.parse("x"), a.constant(0)));
  CHECK(a.equal(a.parse("x^2 + x y"), a.parse("x^2")));
}

TEST_CASE("hom_check accepts and rejects") {
  FpAlgebra dual = alg({"y"}, {"y^2"});
  FpAlgebra cross = alg({"x", "y"}, {"x y", "y^2"});
  CHECK_NOTHROW(hom_check(alg({"x"}, {}), alg({"y", "z"}, {}), {"y z"}));
  CHECK_NOTHROW(hom_check(dual, cross, {"y"}));
  CHECK_THROWS_AS(hom_check(dual, cross, {"x"}), NotWellDefined);
}

TEST_CASE("morphism composition and identity") {
  FpAlgebra kx = alg({"x"}, {});
  FpAlgebra kyz = alg({"y", "z"}, {});
  AlgMorphism f = hom_check(kx, kyz, {"y z"});
  CHECK(f.after(AlgMorphism::identity(kx)) == f);
  CHECK(AlgMorphism::identity(kyz).after(f) == f);
  AlgMorphism sq = hom_check(kx, kx, {"x^2"});
  CHECK(f.after(sq).apply(kx.var("x")) == kyz.parse("y^2 z^2"));
}

TEST_CASE("coproduct of two lines is the plane") {
  Coproduct cp = tensor_coproduct(alg({"x"}, {}), alg({"x"}, {}));
  CHECK(cp.algebra.presentation() == "k[y,z]");
  CHECK(cp.inj_left.apply(cp.inj_left.dom().var("x")) == cp.algebra.var("y"));
  CHECK(cp.inj_right.apply(cp.inj_right.dom().var("x")) == cp.algebra.var("z"));
}

TEST_CASE("coproduct unit law") {
  FpAlgebra a = alg({"x", "y"}, {"x y", "y^2"});
  Coproduct cp = tensor_coproduct(a, FpAlgebra::base());
  CHECK(cp.algebra == a);
}

TEST_CASE("coproduct of dual numbers, with hom-count bijection") {
  FpAlgebra d = alg({"y"}, {"y^2"});
  Coproduct cp = tensor_coproduct(d, d);
  CHECK(cp.algebra.presentation() == "k[y,z]/(z^2, y^2)");

  std::vector<FpAlgebra> codomains = {
      FpAlgebra::base(), alg({"t"}, {"t^2 - t"}), alg({"t"}, {"t^2 - 1"})};
  for (auto& c : codomains)
    CHECK(oracle::hom_count(cp.algebra, c) ==
          oracle::hom_count(d, c) * oracle::hom_count(d, c));
}

TEST_CASE("coproduct universality with richer factors") {
  FpAlgebra a = alg({"x"}, {"x^2 - x"});
  FpAlgebra b = alg({"x"}, {"x^2 - 1"});
  FpAlgebra c = alg({"t"}, {"t^2 - t"});
  CHECK(oracle::hom_count(a, c) == 4);
  CHECK(oracle::hom_count(b, c) == 4);
  Coproduct cp = tensor_coproduct(a, b);
  CHECK(oracle::hom_count(cp.algebra, c) == 16);

  // a chosen cocone factors through exactly the concatenated mediator
  AlgMorphism f = hom_check(a, c, {"t"});
  AlgMorphism g = hom_check(b, c, {"1 - 2 t"});
  AlgMorphism med = hom_check(cp.algebra, c, {f.images()[0], g.images()[0]});
  CHECK(med.after(cp.inj_left) == f);
  CHECK(med.after(cp.inj_right) == g);
}

TEST_CASE("tensor_power naming and injections") {
  TensorPower tp = tensor_power(alg({"x"}, {"x^2"}), 3);
  CHECK(tp.algebra.gens() == std::vector<std::string>{"u", "v", "w"});
  REQUIRE(tp.injections.size() == 3);
  CHECK(tp.injections[1].apply(tp.injections[1].dom().var("x")) == tp.algebra.var("v"));
  CHECK(tp.algebra.equal(tp.algebra.parse("v^2"), tp.algebra.constant(0)));
}

TEST_CASE("quotients") {
  CHECK(quotient(alg({"x"}, {}), {parse_polynomial("x", {"x"})}).algebra.presentation() ==
        "k[x]/(x)");
  Quotient q = quotient(alg({"x", "y"}, {"x y", "y^2"}), {parse_polynomial("y", {"x", "y"})});
  CHECK(q.algebra.equal(q.algebra.var("y"), q.algebra.constant(0)));
  CHECK(!q.algebra.equal(q.algebra.var("x"), q.algebra.constant(0)));
  CHECK(q.projection.apply(q.projection.dom().parse("x + y")) == q.algebra.var("x"));
  CHECK(quotient(alg({"x"}, {"x^2"}), {parse_polynomial("1", {"x"})}).algebra.is_zero_algebra());
}

TEST_CASE("direct product k x k") {
  DirectProduct dp = direct_product(FpAlgebra::base(), FpAlgebra::base());
  auto basis = finite_dim_basis(dp.algebra);
  REQUIRE(basis.has_value());
  CHECK(basis->size() == 2);
  CHECK(dp.proj_left.apply(dp.idempotent) == FpAlgebra::base().one());
  CHECK(dp.proj_right.apply(dp.idempotent).is_zero());
  CHECK(oracle::sorted_strs(idempotents(dp.algebra)) ==
        oracle::sorted_strs({dp.algebra.constant(0), dp.algebra.one(), dp.idempotent,
                             dp.algebra.one() - dp.idempotent}));
}

TEST_CASE("direct product with the zero algebra collapses to the other factor") {
  FpAlgebra a = alg({"y"}, {"y^2"});
  FpAlgebra zero = alg({"z"}, {"1"});
  DirectProduct dp = direct_product(a, zero);
  CHECK(dp.algebra.equal(dp.idempotent, dp.algebra.one()));
  auto basis = finite_dim_basis(dp.algebra);
  REQUIRE(basis.has_value());
  CHECK(basis->size() == 2);
  CHECK(dp.proj_left.apply(dp.proj_left.dom().var("y")) == a.var("y"));
}

TEST_CASE("direct product k x dual numbers") {
  DirectProduct dp = direct_product(FpAlgebra::base(), alg({"y"}, {"y^2"}));
  auto basis = finite_dim_basis(dp.algebra);
  REQUIRE(basis.has_value());
  CHECK(basis->size() == 3);
  CHECK(idempotents(dp.algebra).size() == 4);
}

TEST_CASE("finite_dim_basis") {
  auto b1 = finite_dim_basis(alg({"y"}, {"y^2"}));
  REQUIRE(b1.has_value());
  CHECK(*b1 == std::vector<Exponents>{{0}, {1}});
  CHECK(!finite_dim_basis(alg({"x", "y"}, {"x y", "y^2"})).has_value());
  auto b3 = finite_dim_basis(alg({"x"}, {"x^3"}));
  REQUIRE(b3.has_value());
  CHECK(*b3 == std::vector<Exponents>{{0}, {1}, {2}});
  CHECK(finite_dim_basis(alg({"x"}, {"1"}))->empty());
  CHECK(finite_dim_basis(FpAlgebra::base())->size() == 1);
}

TEST_CASE("idempotents: worked examples") {
  FpAlgebra split = alg({"x"}, {"x^2 - x"});
  CHECK(oracle::sorted_strs(idempotents(split)) ==
        oracle::sorted_strs({split.constant(0), split.one(), split.var("x"),
                             split.one() - split.var("x")}));
  CHECK(idempotents(alg({"y"}, {"y^2"})).size() == 2);
  CHECK(idempotents(alg({"x"}, {"x^3"})).size() == 2);
  CHECK_THROWS_AS(idempotents(alg({"x"}, {})), InfiniteDimensional);
}

TEST_CASE("idempotent completeness against the brute-force oracle") {
  std::vector<FpAlgebra> fixtures = {
      FpAlgebra::base(),
      alg({"x"}, {"1"}),
      alg({"x"}, {"x^2 - x"}),
      alg({"y"}, {"y^2"}),
      alg({"x"}, {"x^3"}),
      alg({"x"}, {"x^2 + 1"}),
      alg({"x"}, {"x^4 - 5 x^2 + 6"}),      // two quadratic fields glued
      alg({"x"}, {"x^3 - x"}),              // three rational points
      alg({"x", "y"}, {"x^2 - x", "y^2 - y"}),
      alg({"x", "y"}, {"x^2 - x", "y^2"}),
      alg({"x", "y"}, {"x^2", "x y", "y^2"}),
      alg({"x"}, {"x^6 - x^5"}),
  };
  for (auto& a : fixtures) {
    CAPTURE(a.presentation());
    CHECK(oracle::sorted_strs(idempotents(a)) == oracle::sorted_strs(oracle::brute_idempotents(a)));
  }
  CHECK(idempotents(alg({"x"}, {"x^4 - 5 x^2 + 6"})).size() == 4);
  CHECK(idempotents(alg({"x"}, {"x^3 - x"})).size() == 8);
  CHECK(idempotents(alg({"x", "y"}, {"x^2 - x", "y^2 - y"})).size() == 16);
}

TEST_CASE("degree-bounded connectedness certificate") {
  CHECK(no_idempotent_up_to_degree(alg({"x"}, {}), 4));
  CHECK(no_idempotent_up_to_degree(alg({"x", "y"}, {"x y", "y^2"}), 4));
  CHECK(!no_idempotent_up_to_degree(alg({"x"}, {"x^2 - x"}), 1));
}

TEST_CASE("is_weil") {
  CHECK(is_weil(alg({"y"}, {"y^2"})));
  CHECK(is_weil(FpAlgebra::base()));
  CHECK(is_weil(alg({"x", "y"}, {"x^2", "x y", "y^2"})));
  CHECK(!is_weil(alg({"x"}, {})));
  CHECK(!is_weil(alg({"x"}, {"x^2 - 1"})));
  CHECK(!is_weil(alg({"x"}, {"x^2 + 1"})));
  CHECK(!is_weil(alg({"x"}, {"1"})));
}

TEST_CASE("local implies connected") {
  std::vector<FpAlgebra> candidates = {
      alg({"y"}, {"y^2"}), alg({"x"}, {"x^3"}), alg({"x", "y"}, {"x^2", "x y", "y^2"}),
      alg({"x", "y"}, {"x^2", "y^3"})};
  for (auto& a : candidates) {
    CAPTURE(a.presentation());
    REQUIRE(is_weil(a));
    CHECK(idempotents(a).size() == 2);
  }
}

TEST_CASE("points") {
  PointsResult p1 = points(alg({"y"}, {"y^2"}));
  CHECK(p1.complete);
  REQUIRE(p1.points.size() == 1);
  CHECK(p1.points[0].images()[0].is_zero());

  PointsResult p2 = points(alg({"x"}, {"x^2 - 1"}));
  CHECK(p2.complete);
  REQUIRE(p2.points.size() == 2);
  CHECK(p2.points[0].images()[0].constant_value() == -1);
  CHECK(p2.points[1].images()[0].constant_value() == 1);

  PointsResult p3 = points(alg({"x"}, {"x^2 + 1"}));
  CHECK(p3.points.empty());
  CHECK(!p3.complete);

  CHECK_THROWS_AS(points(alg({"x"}, {})), PositiveDimensional);
  CHECK(points(alg({"x"}, {"1"})).points.empty());
  CHECK(points(alg({"x"}, {"1"})).complete);
  CHECK(points(FpAlgebra::base()).points.size() == 1);
}
