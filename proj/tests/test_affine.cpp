#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cohesionlab/affine.hpp"
#include "cohesionlab/errors.hpp"
#include "oracles.hpp"

using namespace clab;

static FpAlgebra alg(std::vector<std::string> gens, std::vector<std::string> rels) {
  return FpAlgebra::make(std::move(gens), rels);
}

static bool mutually_inverse(const AlgMorphism& f, const AlgMorphism& g) {
  return f.after(g) == AlgMorphism::identity(g.dom()) &&
         g.after(f) == AlgMorphism::identity(f.dom());
}

TEST_CASE("prolongation of the walking tangent vector by itself") {
  FpAlgebra a = alg({"y"}, {"y^2"});
  FpAlgebra w = alg({"eps"}, {"eps^2"});
  Prolongation p = weil_prolongation(a, w);
  CHECK(p.algebra.presentation() == "k[a,b]/(a b, a^2)");

  // isomorphic to k[x,y]/(xy, y^2) under (b, a) -> (x, y)
  FpAlgebra cross = alg({"x", "y"}, {"x y", "y^2"});
  AlgMorphism f = hom_check(p.algebra, cross, std::vector<std::string>{"y", "x"});
  AlgMorphism g = hom_check(cross, p.algebra, std::vector<std::string>{"b", "a"});
  CHECK(mutually_inverse(f, g));
}

TEST_CASE("prolongation of the free line is the free plane") {
  Prolongation p = weil_prolongation(alg({"x"}, {}), alg({"eps"}, {"eps^2"}));
  CHECK(p.algebra.presentation() == "k[a,b]");
}

TEST_CASE("prolongation by the base field is the identity up to renaming") {
  FpAlgebra cross = alg({"x", "y"}, {"x y", "y^2"});
  Prolongation p = weil_prolongation(cross, FpAlgebra::base());
  REQUIRE(p.algebra.gens().size() == 2);
  AlgMorphism to = hom_check(cross, p.algebra, std::vector<std::string>{"a", "b"});
  AlgMorphism from = hom_check(p.algebra, cross, std::vector<std::string>{"x", "y"});
  CHECK(mutually_inverse(to, from));
}

TEST_CASE("constants section splits evaluation at the point") {
  std::vector<std::pair<FpAlgebra, FpAlgebra>> cases = {
      {alg({"y"}, {"y^2"}), alg({"eps"}, {"eps^2"})},
      {alg({"x"}, {"x^2 - x"}), alg({"eps"}, {"eps^2"})},
      {alg({"x"}, {}), alg({"y"}, {"y^3"})},
  };
  for (auto& [a, w] : cases) {
    Prolongation p = weil_prolongation(a, w);
    CHECK(p.constants.after(p.ev0) == AlgMorphism::identity(a));
  }
}

TEST_CASE("exponential adjunction by hom counting") {
  FpAlgebra a = alg({"x"}, {"x^2 - x"});
  FpAlgebra w = alg({"eps"}, {"eps^2"});
  Prolongation p = weil_prolongation(a, w);
  std::vector<FpAlgebra> samples = {FpAlgebra::base(), alg({"t"}, {"t^2 - t"}),
                                    alg({"t"}, {"t^2 - 1"})};
  for (auto& b : samples) {
    CAPTURE(b.presentation());
    FpAlgebra bw = tensor_coproduct(b, w).algebra;
    CHECK(oracle::hom_count(p.algebra, b) == oracle::hom_count(a, bw));
  }
}

TEST_CASE("prolongation rejects non-Weil exponents") {
  CHECK_THROWS_AS(weil_prolongation(alg({"x"}, {}), alg({"x"}, {"x^2 - 1"})), NotWeil);
  CHECK_THROWS_AS(weil_prolongation(alg({"x"}, {}), alg({"x"}, {})), NotWeil);
}

TEST_CASE("euler reals of the walking tangent vector is the line") {
  EulerReals er = euler_reals(pointed(alg({"eps"}, {"eps^2"})));
  CHECK(er.algebra.presentation() == "k[x]");
  CHECK(er.inclusion.apply(er.exp.algebra.var("a")).is_zero());
  CHECK(er.inclusion.apply(er.exp.algebra.var("b")) == er.algebra.var("x"));
}

TEST_CASE("euler reals of the trivial pointed scheme") {
  EulerReals er = euler_reals(pointed(FpAlgebra::base()));
  CHECK(er.algebra.presentation() == "k");
}

TEST_CASE("euler reals of the second-order tangent vector is the free plane") {
  EulerReals er = euler_reals(pointed(alg({"y"}, {"y^3"})));
  CHECK(er.algebra.presentation() == "k[x,y]");

  // independent route: substitute b y + c y^2 into y^3 and truncate
  std::vector<std::string> bcy = {"b", "c", "y"};
  Polynomial endo = parse_polynomial("b y + c y^2", bcy);
  Polynomial cube = endo * endo * endo;
  for (auto& [e, coef] : cube.terms()) CHECK(e[2] >= 3);  // every term dies mod y^3
}

TEST_CASE("euler reals with a relation between coefficients") {
  // W = k[u,v]/(u^2 - v, v^2), basis {1, v, u, uv}
  EulerReals er = euler_reals(pointed(alg({"u", "v"}, {"u^2 - v", "v^2"})));
  REQUIRE(er.algebra.gens().size() == 6);
  // hand expansion: u -> x0_1 v + x0_2 u + x0_3 uv, v -> x1_1 v + x1_2 u + x1_3 uv
  // forces x1_2 = 0, x1_1 = x0_2^2, x1_3 = 2 x0_1 x0_2
  const auto& names = er.algebra.gens();
  std::vector<Polynomial> hand = {
      parse_polynomial("x1_2", names),
      parse_polynomial("x1_1 - x0_2^2", names),
      parse_polynomial("x1_3 - 2 x0_1 x0_2", names),
  };
  Ideal hand_ideal(hand);
  for (auto& rel : er.algebra.relations().basis()) CHECK(hand_ideal.contains(rel));
  for (auto& rel : hand) CHECK(er.algebra.relations().contains(rel));
}

TEST_CASE("euler monoid of the walking tangent vector") {
  EulerMonoid m = monoid_mult(pointed(alg({"eps"}, {"eps^2"})));
  CHECK(m.comult.apply(m.reals.algebra.var("x")) == m.square.algebra.parse("y z"));
  CHECK(m.one.apply(m.reals.algebra.var("x")) == FpAlgebra::base().one());
  CHECK(m.zero.apply(m.reals.algebra.var("x")).is_zero());
  CHECK(euler_monoid_laws(m));
}

TEST_CASE("euler monoid coincides with the multiplicative line structure") {
  EulerMonoid m = monoid_mult(pointed(alg({"eps"}, {"eps^2"})));
  RingData lr = line_ring();
  CHECK(m.comult == lr.comult);
}

TEST_CASE("euler monoid laws in higher order") {
  EulerMonoid m = monoid_mult(pointed(alg({"y"}, {"y^3"})));
  CHECK(euler_monoid_laws(m));
  // second coefficient of the composite: x y_2 + x_2^2 y, by hand
  const auto& sq = m.square.algebra;
  CHECK(m.comult.apply(m.reals.algebra.var("x")) == sq.parse("x x_2"));
  CHECK(m.comult.apply(m.reals.algebra.var("y")) == sq.parse("x y_2 + x_2^2 y"));
  EulerMonoid m4 = monoid_mult(pointed(alg({"y"}, {"y^4"})));
  CHECK(euler_monoid_laws(m4));
}

TEST_CASE("kl holds for the line") {
  KlVerdict v = check_kl(line_ring());
  CHECK(v.holds);
  CHECK(v.certificate.find("isomorphism") != std::string::npos);
}

TEST_CASE("kl fails for the walking tangent vector with a dimension certificate") {
  RingData r;
  r.algebra = alg({"x"}, {"x^2"});
  r.square = tensor_coproduct(r.algebra, r.algebra);
  r.comult = hom_check(r.algebra, r.square.algebra, std::vector<std::string>{"y z"});
  r.coadd_images = {r.square.algebra.parse("y + z")};
  FpAlgebra k = FpAlgebra::base();
  r.zero = hom_check(r.algebra, k, {Polynomial::constant({}, 0)});
  r.one = r.zero;
  KlVerdict v = check_kl(r);
  CHECK(!v.holds);
  CHECK(v.certificate.find("infinite-dimensional") != std::string::npos);
  CHECK(v.certificate.find("4") != std::string::npos);
}

TEST_CASE("kl verdict survives renaming the presentation") {
  RingData r;
  r.algebra = alg({"t"}, {});
  r.square = tensor_coproduct(r.algebra, r.algebra);
  r.comult = hom_check(r.algebra, r.square.algebra, std::vector<std::string>{"y z"});
  r.coadd_images = {r.square.algebra.parse("y + z")};
  FpAlgebra k = FpAlgebra::base();
  r.zero = hom_check(r.algebra, k, {Polynomial::constant({}, 0)});
  r.one = hom_check(r.algebra, k, {Polynomial::constant({}, 1)});
  CHECK(check_kl(r).holds);
}

TEST_CASE("kl is vacuous on the zero scheme") {
  RingData r;
  r.algebra = alg({"x"}, {"1"});
  CHECK(check_kl(r).holds);
}

TEST_CASE("kl rejects a square-zero subscheme with two points") {
  RingData r;
  r.algebra = alg({"x"}, {"x^2 - 1"});
  r.square = tensor_coproduct(r.algebra, r.algebra);
  r.comult = hom_check(r.algebra, r.square.algebra, std::vector<std::string>{"y z"});
  r.coadd_images = {r.square.algebra.parse("y + z - 1")};
  FpAlgebra k = FpAlgebra::base();
  r.zero = hom_check(r.algebra, k, {Polynomial::constant({}, 1)});
  r.one = r.zero;
  CHECK_THROWS_AS(check_kl(r), DNotWeil);
}

TEST_CASE("euler composition law report") {
  EulerCompositionReport rep = check_euler_composition();
  CHECK(rep.law);
  CHECK(rep.constraints);
  CHECK(rep.identity);
  CHECK(rep.zero_law);
  CHECK(rep.presentation);
  CHECK(rep.ok());
}

TEST_CASE("pullback of the point along evaluation recovers the euler reals") {
  FpAlgebra w = alg({"eps"}, {"eps^2"});
  PointedScheme t = pointed(w);
  Prolongation p = weil_prolongation(w, w);
  Pullback pb = pullback(t.point, p.ev0);
  FpAlgebra line = alg({"x"}, {});
  AlgMorphism f = hom_check(pb.algebra, line, std::vector<std::string>{"0", "x"});
  AlgMorphism g = hom_check(line, pb.algebra, std::vector<std::string>{"b"});
  CHECK(mutually_inverse(f, g));
}

TEST_CASE("pullback along the identity is the other leg") {
  FpAlgebra a = alg({"x"}, {});
  FpAlgebra b = alg({"y"}, {"y^2"});
  AlgMorphism g = hom_check(a, b, std::vector<std::string>{"y"});
  Pullback pb = pullback(AlgMorphism::identity(a), g);
  AlgMorphism to = hom_check(b, pb.algebra, {pb.proj_right.images()[0]});
  AlgMorphism from = hom_check(pb.algebra, b, std::vector<std::string>{"y", "y"});
  CHECK(mutually_inverse(to, from));
}

TEST_CASE("pullback of a point of k x k picks out a component") {
  DirectProduct dp = direct_product(FpAlgebra::base(), FpAlgebra::base());
  // second point: the one killing the idempotent
  PointsResult pr = points(dp.algebra);
  REQUIRE(pr.points.size() == 2);
  for (auto& pt : pr.points) {
    Pullback pb = pullback(pt, AlgMorphism::identity(dp.algebra));
    auto basis = finite_dim_basis(pb.algebra);
    REQUIRE(basis.has_value());
    CHECK(basis->size() == 1);  // each component is a single reduced point
  }
}

TEST_CASE("invertibles of the line") {
  Invertibles u = invertibles_scheme(alg({"x"}, {}));
  CHECK(u.algebra.presentation() == "k[x,u]/(x u - 1)");
  CHECK(u.inclusion.apply(u.inclusion.dom().var("x")) == u.algebra.var("x"));
  CHECK(u.connected_certificate);
}

TEST_CASE("invertibles of the zero scheme") {
  Invertibles u = invertibles_scheme(alg({"x"}, {"1"}));
  CHECK(u.algebra.is_zero_algebra());
  CHECK(u.connected_certificate);
}

TEST_CASE("invertibles of a disconnected ring is disconnected") {
  Invertibles u = invertibles_scheme(alg({"x"}, {"x^2 - x"}), 2);
  // x is invertible only on the x = 1 component, so U = one reduced point,
  // which is connected; the certificate still holds
  CHECK(u.connected_certificate);
  Invertibles split = invertibles_scheme(alg({"x", "e"}, {"e^2 - e"}), 2);
  CHECK(!split.connected_certificate);
}
