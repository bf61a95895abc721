#include <doctest.h>

#include "hgt/error.hpp"
#include "hgt/hypergeom.hpp"
#include "oracles.hpp"

using hgt::ClassicalFamily;
using hgt::HypergeomEq;
using hgt::Poly;
using hgt::Rational;

TEST_CASE("equation validation") {
  CHECK_NOTHROW(HypergeomEq(Poly({1}), Poly({0, -2}), Rational(4)));
  CHECK_THROWS_AS(HypergeomEq(Poly({0, 0, 0, 1}), Poly({0, 1}), Rational(1)), hgt::MathError);
  CHECK_THROWS_AS(HypergeomEq(Poly({1}), Poly({3}), Rational(1)), hgt::MathError);
  CHECK_THROWS_AS(HypergeomEq(Poly({1}), Poly({0, 0, 1}), Rational(1)), hgt::MathError);
  CHECK_THROWS_AS(HypergeomEq(Poly(), Poly({0, 1}), Rational(1)), hgt::MathError);
}

TEST_CASE("equation_of examples") {
  const Rational a(7, 3);
  const auto lag = equation_of(ClassicalFamily::laguerre(a, 5));
  CHECK(lag.sigma() == Poly::x());
  CHECK(lag.tau() == Poly({Rational(1) + a, -1}));
  CHECK(lag.lambda() == Rational(5));

  const auto her = equation_of(ClassicalFamily::hermite(3));
  CHECK(her.sigma() == Poly({1}));
  CHECK(her.tau() == Poly({0, -2}));
  CHECK(her.lambda() == Rational(6));

  const auto leg = equation_of(ClassicalFamily::jacobi(0, 0, 1));
  CHECK(leg.sigma() == Poly({1, 0, -1}));
  CHECK(leg.tau() == Poly({0, -2}));
  CHECK(leg.lambda() == Rational(2));
}

TEST_CASE("polynomial_solution examples") {
  CHECK(polynomial_solution(ClassicalFamily::jacobi(0, 0, 2)) == Poly({Rational(-1, 2), 0, Rational(3, 2)}));
  CHECK(polynomial_solution(ClassicalFamily::laguerre(0, 2)) == Poly({1, -2, Rational(1, 2)}));
  CHECK(polynomial_solution(ClassicalFamily::hermite(1)) == Poly({0, 2}));
}

TEST_CASE("recurrences agree with explicit sums") {
  const std::vector<Rational> grid{Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(7, 3), Rational(-1, 3)};
  for (unsigned n = 0; n <= 9; ++n) {
    CHECK(polynomial_solution(ClassicalFamily::hermite(n)) == hgt::oracle::hermite_explicit(n));
    for (const auto& a : grid) {
      CHECK(polynomial_solution(ClassicalFamily::laguerre(a, n)) == hgt::oracle::laguerre_explicit(a, n));
      for (const auto& b : grid) {
        CHECK(polynomial_solution(ClassicalFamily::jacobi(a, b, n)) == hgt::oracle::jacobi_explicit(a, b, n));
      }
    }
  }
}

TEST_CASE("classical normalizations") {
  const Rational a(1, 2), b(2);
  for (unsigned n = 0; n <= 6; ++n) {
    CHECK(eval(polynomial_solution(ClassicalFamily::jacobi(a, b, n)), Rational(1)) ==
          hgt::oracle::binomial(Rational(n) + a, n));
    CHECK(eval(polynomial_solution(ClassicalFamily::laguerre(a, n)), Rational(0)) ==
          hgt::oracle::binomial(Rational(n) + a, n));
    CHECK(polynomial_solution(ClassicalFamily::hermite(n)).leading() == pow(Rational(2), n));
  }
}

TEST_CASE("every family member solves its equation") {
  const std::vector<Rational> grid{Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(7, 3)};
  for (unsigned n = 0; n <= 12; ++n) {
    const auto h = ClassicalFamily::hermite(n);
    CHECK(apply_operator(equation_of(h).as_operator(), polynomial_solution(h)).is_zero());
    for (const auto& a : grid) {
      const auto l = ClassicalFamily::laguerre(a, n);
      CHECK(apply_operator(equation_of(l).as_operator(), polynomial_solution(l)).is_zero());
    }
  }
}

TEST_CASE("invalid Jacobi parameters") {
  CHECK_THROWS_AS(ClassicalFamily::jacobi(Rational(-1), Rational(-2), 2), hgt::MathError);  // a+b+n+1 = 0
  CHECK_THROWS_AS(ClassicalFamily::jacobi(Rational(-1), Rational(-1), 3), hgt::MathError);  // recurrence m+a+b = 0
  CHECK_THROWS_AS(equation_of(ClassicalFamily::jacobi(Rational(-1, 2), Rational(-3, 2), 0)), hgt::MathError);
}

TEST_CASE("family literals") {
  CHECK(ClassicalFamily::parse("jacobi(1/2, 2, 3)") == ClassicalFamily::jacobi(Rational(1, 2), 2, 3));
  CHECK(ClassicalFamily::parse(" laguerre(0,2) ") == ClassicalFamily::laguerre(0, 2));
  CHECK(ClassicalFamily::parse("hermite(4)") == ClassicalFamily::hermite(4));
  CHECK(ClassicalFamily::parse("jacobi(1/2,2,3)").to_string() == "jacobi(1/2,2,3)");
  CHECK_THROWS_AS(ClassicalFamily::parse("hermite(-1)"), hgt::ParseError);
  CHECK_THROWS_AS(ClassicalFamily::parse("hermite(1/2)"), hgt::ParseError);
  CHECK_THROWS_AS(ClassicalFamily::parse("bessel(1)"), hgt::ParseError);
  CHECK_THROWS_AS(ClassicalFamily::parse("laguerre(1)"), hgt::ParseError);
}

TEST_CASE("pochhammer") {
  CHECK(hgt::pochhammer(Rational(5, 7), 0) == Rational(1));
  CHECK(hgt::pochhammer(Rational(3), 2) == Rational(12));
  CHECK(hgt::pochhammer(Rational(-2), 3) == Rational(0));

  hgt::oracle::RandomPolys gen(3);
  for (int i = 0; i < 40; ++i) {
    const Rational a = gen.rational(9, 5);
    for (unsigned j = 0; j < 20; ++j) {
      CHECK(hgt::pochhammer(a, j + 1) == hgt::pochhammer(a, j) * (a + Rational(j)));
    }
  }
}

TEST_CASE("jacobi_series_gh") {
  const Rational g(3, 4), h(-1, 3);
  CHECK(hgt::jacobi_series_gh(g, h, 0) == Poly({1}));
  // (g+1/2) - (g+h+3)(1-eta)/2
  const Rational s = g + h + Rational(3);
  CHECK(hgt::jacobi_series_gh(g, h, 1) == Poly({g + Rational(1, 2) - s / Rational(2), s / Rational(2)}));

  for (unsigned k = 0; k <= 8; ++k) {
    CHECK(hgt::jacobi_series_gh(Rational(1, 2), Rational(5, 2), k).degree() == k);
  }

  CHECK_THROWS_AS(hgt::jacobi_series_gh(Rational(-1, 2), Rational(1), 2), hgt::MathError);
  CHECK_THROWS_AS(hgt::jacobi_series_gh(Rational(1), Rational(-5, 2), 2), hgt::MathError);
  CHECK(hgt::is_negative_half_integer(Rational(-7, 2)));
  CHECK_FALSE(hgt::is_negative_half_integer(Rational(1, 2)));
  CHECK_FALSE(hgt::is_negative_half_integer(Rational(-1)));
}

TEST_CASE("fitted z-equation of the (g, h) series") {
  const Poly sigma({1, 0, -1});
  // g = h = 1/2, k = 2: residual oracle with sigma = 1 - eta^2
  const Poly z = hgt::jacobi_series_gh(Rational(1, 2), Rational(1, 2), 2);
  const auto fit = hgt::fit_hypergeometric(sigma, z);
  REQUIRE(fit.has_value());
  CHECK(apply_operator(hgt::OdeOperator2(sigma, fit->tau, Poly({fit->lambda})), z).is_zero());

  // Fitted values on a grid: tau = (h - g + 2) - (g + h + 3) eta, lambda = k(k + g + h + 2).
  const std::vector<Rational> grid{Rational(1, 2), Rational(1), Rational(3, 2), Rational(5, 2), Rational(7, 2)};
  for (const auto& g : grid) {
    for (const auto& h : grid) {
      for (unsigned k = 2; k <= 6; ++k) {
        const auto f = hgt::fit_hypergeometric(sigma, hgt::jacobi_series_gh(g, h, k));
        REQUIRE(f.has_value());
        CHECK(f->tau == Poly({h - g + Rational(2), -(g + h + Rational(3))}));
        CHECK(f->lambda == Rational(k) * (Rational(k) + g + h + Rational(2)));
        // equals the classical P_k^{(g-1/2, h+3/2)}
        CHECK(hgt::jacobi_series_gh(g, h, k) ==
              hgt::oracle::jacobi_explicit(g - Rational(1, 2), h + Rational(3, 2), k));
      }
    }
  }
  // degree <= 1 leaves the fit underdetermined
  CHECK_FALSE(hgt::fit_hypergeometric(sigma, Poly({1, 1})).has_value());
}

TEST_CASE("Jacobi contiguous relation") {
  // n = 2, a = b = 0: 4(1-x^2)(3x) + 8x(3x^2-1)/2 = 8x = 2*2*2*x
  CHECK(hgt::jacobi_contiguity_residual(0, 0, 2).is_zero());
  for (unsigned n = 1; n <= 10; ++n) {
    CHECK(hgt::jacobi_contiguity_residual(Rational(7, 3), Rational(1, 2), n).is_zero());
  }
  CHECK_THROWS_AS(hgt::jacobi_contiguity_residual(0, 0, 0), hgt::MathError);
}
