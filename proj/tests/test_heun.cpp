#include <doctest.h>

#include "hgt/error.hpp"
#include "hgt/heun.hpp"
#include "hgt/hypergeom.hpp"
#include "hgt/partial_fractions.hpp"
#include "hgt/sweep.hpp"
#include "hgt/transform.hpp"
#include "oracles.hpp"

using hgt::HeunParameters;
using hgt::OdeOperator2;
using hgt::Poly;
using hgt::Rational;
using hgt::SingularKind;

TEST_CASE("Jacobi equation has regular points -1, 1, infinity") {
  const auto op = equation_of(hgt::ClassicalFamily::jacobi(Rational(1, 2), 2, 3)).as_operator();
  const auto pts = hgt::classify_singularities(op);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].location == Rational(-1));
  CHECK(pts[0].kind == SingularKind::RegularSingular);
  CHECK(pts[0].c2_multiplicity == 1);
  CHECK(pts[1].location == Rational(1));
  CHECK(pts[2].at_infinity());
  CHECK(pts[2].kind == SingularKind::RegularSingular);
  CHECK(hgt::is_fuchsian(pts));
}

TEST_CASE("Hermite has an irregular point at infinity only") {
  const auto pts = hgt::classify_singularities(equation_of(hgt::ClassicalFamily::hermite(3)).as_operator());
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].at_infinity());
  CHECK(pts[0].kind == SingularKind::IrregularSingular);
  CHECK_FALSE(hgt::is_fuchsian(pts));
}

TEST_CASE("classification of finite points") {
  // x^2 y'' + y = 0: regular at 0
  auto pts = hgt::classify_singularities(OdeOperator2(Poly({0, 0, 1}), Poly(), Poly({1})));
  CHECK(pts[0].kind == SingularKind::RegularSingular);
  CHECK(pts[0].c2_multiplicity == 2);
  // x^3 y'' + y = 0: irregular at 0
  pts = hgt::classify_singularities(OdeOperator2(Poly({0, 0, 0, 1}), Poly(), Poly({1})));
  CHECK(pts[0].kind == SingularKind::IrregularSingular);
  // a common factor of all three coefficients is removed before classifying
  pts = hgt::classify_singularities(OdeOperator2(Poly({0, 1}), Poly({0, 1}), Poly({0, 1})));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].at_infinity());
  CHECK(pts[0].kind == SingularKind::IrregularSingular);
  // y'' = 0 has the solution x, so infinity is a regular singular point
  pts = hgt::classify_singularities(OdeOperator2(Poly({1}), Poly(), Poly()));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].kind == SingularKind::RegularSingular);
  // (x^2 y')' = 0 is analytic at infinity but still passes only the regularity test
  pts = hgt::classify_singularities(OdeOperator2(Poly({0, 0, 1}), Poly({0, 2}), Poly()));
  REQUIRE(pts.size() == 2);
  CHECK(pts[1].kind == SingularKind::RegularSingular);
  // y'' + x y = 0: c0 grows too fast at infinity
  pts = hgt::classify_singularities(OdeOperator2(Poly({1}), Poly(), Poly({0, 1})));
  CHECK(pts[0].kind == SingularKind::IrregularSingular);
}

TEST_CASE("classification errors") {
  CHECK_THROWS_AS(hgt::classify_singularities(OdeOperator2(Poly({1, 0, 1}), Poly({0, 1}), Poly({1}))),
                  hgt::MathError);
  CHECK_THROWS_AS(hgt::classify_singularities(OdeOperator2(Poly(), Poly({0, 1}), Poly({1}))), hgt::MathError);
}

TEST_CASE("Heun operator round trip") {
  const HeunParameters p{Rational(3), Rational(-6), Rational(-1), Rational(1, 3), Rational(6), Rational(-7, 3)};
  const auto op = hgt::heun_operator(p);
  CHECK(op.c2() == Poly({0, Rational(1, 3), Rational(-4, 3), 1}));
  CHECK(hgt::heun_reduce(op) == p);
  CHECK(hgt::heun_reduce(OdeOperator2(Rational(-7, 2) * op.c2(), Rational(-7, 2) * op.c1(),
                                      Rational(-7, 2) * op.c0())) == p);
  CHECK(hgt::exponent_quadratic(p) == Poly({6, 5, 1}));

  hgt::oracle::RandomPolys gen(4);
  for (int i = 0; i < 50; ++i) {
    HeunParameters q{gen.rational(6, 4), gen.rational(6, 4), gen.rational(6, 4), gen.nonzero_rational(6, 4),
                     gen.rational(6, 4), gen.rational(6, 4)};
    if (q.mu == Rational(1)) q.mu = Rational(2);
    const auto hop = hgt::heun_operator(q);
    CHECK(hgt::heun_reduce(hop) == q);
    // residues of c1/c2 at 0, 1, mu
    CHECK(hop.c1()(Rational(0)) / derivative(hop.c2())(Rational(0)) == q.gamma);
    CHECK(hop.c1()(Rational(1)) / derivative(hop.c2())(Rational(1)) == q.delta);
    CHECK(hop.c1()(q.mu) / derivative(hop.c2())(q.mu) == q.epsilon);
  }
}

TEST_CASE("frozen sweep witnesses reduce to Heun") {
  const Poly sigma({0, -1, 1});
  struct Witness {
    Poly a, tau;
    Rational lambda;
    HeunParameters p;
  };
  const std::vector<Witness> witnesses{
      {Poly({-3, -3}), Poly({-3, -3}), Rational(3),
       {Rational(3), Rational(-6), Rational(-1), Rational(1, 3), Rational(6), Rational(-7, 3)}},
      {Poly({-3, -3}), Poly({-2, 1}), Rational(-3),
       {Rational(2), Rational(-1), Rational(-2), Rational(-1), Rational(-2), Rational(-2)}},
  };
  for (const auto& w : witnesses) {
    const hgt::HypergeomEq eq(sigma, w.tau, w.lambda);
    const auto det = expand_determinant(eq, hgt::LinearTransform(w.a, sigma));
    const auto params = hgt::heun_reduce(det);
    CHECK(params == w.p);
    CHECK(equivalent(hgt::heun_operator(params), det));
    const auto pts = hgt::classify_singularities(det);
    REQUIRE(pts.size() == 4);
    for (const auto& pt : pts) CHECK(pt.kind == SingularKind::RegularSingular);
  }
}

TEST_CASE("non-reducible operators") {
  const Poly sigma({0, -1, 1});
  const hgt::HypergeomEq eq(sigma, Poly({1, 2}), Rational(3));
  // A = 0, B = sigma keeps only two finite singular points
  const auto det = expand_determinant(eq, hgt::LinearTransform(Poly(), sigma));
  CHECK_THROWS_AS(hgt::heun_reduce(det), hgt::MathError);
  try {
    hgt::heun_reduce(det);
  } catch (const hgt::MathError& e) {
    CHECK(e.kind() == hgt::ErrorKind::NotHeunReducible);
  }
  // c2 = x(x-1)^2 is confluent
  try {
    hgt::heun_reduce(OdeOperator2(Poly({0, 1, -2, 1}), Poly({1}), Poly({1})));
    FAIL("expected ConfluentOrDegenerate");
  } catch (const hgt::MathError& e) {
    CHECK(e.kind() == hgt::ErrorKind::ConfluentOrDegenerate);
  }
  // c0 of degree 2
  try {
    hgt::heun_reduce(OdeOperator2(Poly({0, 2, -3, 1}), Poly({1}), Poly({0, 0, 1})));
    FAIL("expected NotHeunReducible");
  } catch (const hgt::MathError& e) {
    CHECK(e.kind() == hgt::ErrorKind::NotHeunReducible);
  }
}

TEST_CASE("sweep grid") {
  CHECK(hgt::sweep_grid(1) == std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
  const auto g2 = hgt::sweep_grid(2);
  CHECK(g2 == std::vector<Rational>{Rational(-2), Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2),
                                    Rational(1), Rational(2)});
}

TEST_CASE("bracket quotient matches the polynomial bracket") {
  const Poly sigma({0, -1, 1});
  hgt::oracle::RandomPolys gen(8);
  for (int i = 0; i < 40; ++i) {
    const Rational al = gen.rational(3, 3), be = gen.rational(3, 3), t0 = gen.rational(3, 3),
                   t1 = gen.nonzero_rational(3, 3), la = gen.rational(3, 3);
    const hgt::HypergeomEq eq(sigma, Poly({t0, t1}), la);
    const Poly w = transform_bracket(eq, hgt::LinearTransform(Poly({be, al}), sigma));
    const auto q = hgt::sweep_bracket_quotient(al, be, t0, t1, la);
    CHECK(w == sigma * Poly({q[0], q[1], q[2]}));
  }
}

TEST_CASE("small sweep") {
  const auto result = hgt::heun_sweep(1);
  CHECK(result.candidates > 0);
  REQUIRE_FALSE(result.hits.empty());
  for (const auto& hit : result.hits) {
    CHECK(hit.t1 != Rational(0));
    CHECK(hgt::heun_reduce(hit.reduced_operator) == hit.params);
    const hgt::HypergeomEq eq(Poly({0, -1, 1}), Poly({hit.t0, hit.t1}), hit.lambda);
    const auto det = expand_determinant(eq, hgt::LinearTransform(Poly({hit.beta, hit.alpha}), eq.sigma()));
    CHECK(equivalent(det, hgt::heun_operator(hit.params)));
  }
}
