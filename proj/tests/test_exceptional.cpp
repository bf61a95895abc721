#include <doctest.h>

#include "hgt/error.hpp"
#include "hgt/exceptional.hpp"
#include "hgt/heun.hpp"
#include "hgt/hypergeom.hpp"

using hgt::Poly;
using hgt::Rational;
using hgt::X1JacobiSpec;

namespace {

const std::vector<Rational> kGrid{Rational(1, 2), Rational(1), Rational(3, 2), Rational(5, 2), Rational(7, 2)};

}  // namespace

TEST_CASE("x1(3/2, 1/2, 1) construction") {
  const X1JacobiSpec spec(Rational(3, 2), Rational(1, 2), 1);
  const auto c = hgt::build_x1(spec);
  CHECK(c.zeta == Poly({Rational(3, 2), Rational(1, 2)}));
  CHECK(c.zeta_tilde == Poly({Rational(5, 2), Rational(1, 2)}));
  CHECK(c.a == Poly::parse("5/4, 1/4"));
  CHECK(c.b == Poly::parse("3/4, 1, 1/4"));
  CHECK(c.p_k == Poly::parse("-1/2, 5/2"));
  CHECK(c.y_hat == Poly::parse("5/4, 11/2, 5/4"));
  CHECK(hgt::zeta_root(spec) == Rational(-3));
}

TEST_CASE("x1(5/2, 1/2, 2) construction") {
  const auto c = hgt::build_x1(X1JacobiSpec(Rational(5, 2), Rational(1, 2), 2));
  CHECK(c.a == Poly::parse("1, 1/3"));
  CHECK(c.b == Poly::parse("2/3, 1, 1/3"));
  CHECK(c.p_k == Poly::parse("-1, 0, 7"));
  CHECK(c.y_hat == Poly::parse("-1, 9, 21, 7"));
}

TEST_CASE("cleared X1 equation annihilates y_hat") {
  for (const auto& g : kGrid) {
    for (const auto& h : kGrid) {
      if (g == h) continue;
      for (unsigned k = 0; k <= 8; ++k) {
        const X1JacobiSpec spec(g, h, k);
        const auto c = hgt::build_x1(spec);
        CHECK(apply_operator(hgt::x1_operator(spec), c.y_hat).is_zero());
        CHECK(c.y_hat.degree() == k + 1);
        CHECK(c.zeta_tilde - c.zeta == Poly({1}));
        CHECK(c.y_hat == c.a * c.p_k + c.b * derivative(c.p_k));
      }
    }
  }
}

TEST_CASE("y_hat is not a classical Jacobi solution for k >= 2") {
  const Poly sigma({1, 0, -1});
  for (const auto& g : kGrid) {
    for (const auto& h : kGrid) {
      if (g == h) continue;
      for (unsigned k = 2; k <= 6; ++k) {
        CHECK_FALSE(hgt::fit_hypergeometric(sigma, hgt::build_x1(X1JacobiSpec(g, h, k)).y_hat).has_value());
      }
    }
  }
}

TEST_CASE("Heun form in x = (1 - eta)/2") {
  const X1JacobiSpec first(Rational(3, 2), Rational(1, 2), 1);
  const auto op = hgt::x1_to_heun(first);
  CHECK(op == hgt::OdeOperator2(Poly({0, 2, -3, 1}), Poly({6, -11, 3}), Poly({12, -8})));
  const hgt::HeunParameters p1{Rational(3), Rational(2), Rational(-2), Rational(2), Rational(-8), Rational(12)};
  CHECK(hgt::x1_heun_parameters(first) == p1);

  const hgt::HeunParameters p2{Rational(4), Rational(2), Rational(-2), Rational(3, 2), Rational(-18), Rational(24)};
  CHECK(hgt::x1_heun_parameters(X1JacobiSpec(Rational(5, 2), Rational(1, 2), 2)) == p2);

  int reduced = 0;
  for (const auto& g : kGrid) {
    for (const auto& h : kGrid) {
      if (g == h) continue;
      for (unsigned k = 0; k <= 4; ++k) {
        const X1JacobiSpec spec(g, h, k);
        const auto params = hgt::x1_heun_parameters(spec);
        CHECK(params.mu == (Rational(1) - hgt::zeta_root(spec)) / Rational(2));
        CHECK(params.epsilon == Rational(-2));
        const auto hop = hgt::x1_to_heun(spec);
        CHECK(hgt::heun_operator(params) == hop);
        // y_hat carried to x is still a solution
        const Poly y = compose_affine(hgt::build_x1(spec).y_hat, Rational(1), Rational(-2));
        CHECK(apply_operator(hop, y).is_zero());
        ++reduced;
      }
    }
  }
  CHECK(reduced == 100);
}

TEST_CASE("g = h leaves zeta constant") {
  const X1JacobiSpec spec(Rational(3, 2), Rational(3, 2), 2);
  CHECK(spec.degenerate_zeta());
  const auto c = hgt::build_x1(spec);
  CHECK(c.zeta.degree() == std::optional<std::size_t>(0));
  CHECK(apply_operator(hgt::x1_operator(spec), c.y_hat).is_zero());
  CHECK_THROWS_AS(hgt::zeta_root(spec), hgt::MathError);
  CHECK_THROWS_AS(hgt::x1_to_heun(spec), hgt::MathError);
}

TEST_CASE("zeta root stays away from x = 0 and x = 1") {
  // The root sits at eta = 1 only for g = -1/2 and at eta = -1 only for h = -1/2,
  // both rejected up front. g + h + 1 = 0 puts it at x = 1/2.
  const X1JacobiSpec spec(Rational(1, 3), Rational(-4, 3), 1);
  CHECK(hgt::x1_heun_parameters(spec).mu == Rational(1, 2));
}

TEST_CASE("forbidden parameters and literals") {
  CHECK_THROWS_AS(X1JacobiSpec(Rational(-1, 2), Rational(1), 1), hgt::MathError);
  CHECK_THROWS_AS(X1JacobiSpec(Rational(1), Rational(-3, 2), 1), hgt::MathError);
  CHECK_THROWS_AS(X1JacobiSpec(Rational(1), Rational(-5, 2), 2), hgt::MathError);  // k + h + 1/2 = 0
  try {
    X1JacobiSpec(Rational(-1, 2), Rational(1), 1);
  } catch (const hgt::MathError& e) {
    CHECK(e.kind() == hgt::ErrorKind::ForbiddenParameter);
  }
  CHECK(X1JacobiSpec::parse("x1(3/2, 1/2, 1)").to_string() == "x1(3/2,1/2,1)");
  CHECK_THROWS_AS(X1JacobiSpec::parse("x2(1,2,3)"), hgt::ParseError);
  CHECK_THROWS_AS(X1JacobiSpec::parse("x1(1,2)"), hgt::ParseError);
  CHECK_THROWS_AS(X1JacobiSpec::parse("x1(1,2,-1)"), hgt::ParseError);
}
