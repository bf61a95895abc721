#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hgt/operator.hpp"
#include "hgt/poly.hpp"

namespace hgt {

/// sigma*z'' + tau*z' + lambda*z = 0 with deg sigma <= 2 and deg tau = 1.
class HypergeomEq {
 public:
  /// Throws InvalidEquation when sigma is zero or of degree > 2, or tau is not of degree 1.
  HypergeomEq(Poly sigma, Poly tau, Rational lambda);

  const Poly& sigma() const noexcept { return sigma_; }
  const Poly& tau() const noexcept { return tau_; }
  const Rational& lambda() const noexcept { return lambda_; }

  OdeOperator2 as_operator() const { return OdeOperator2(sigma_, tau_, Poly::constant(lambda_)); }

  friend bool operator==(const HypergeomEq&, const HypergeomEq&) = default;

 private:
  Poly sigma_;
  Poly tau_;
  Rational lambda_;
};

/// A classical orthogonal polynomial family member of degree n.
struct ClassicalFamily {
  enum class Kind { Jacobi, Laguerre, Hermite };

  Kind kind = Kind::Hermite;
  Rational alpha;
  Rational beta;
  unsigned degree = 0;

  static ClassicalFamily jacobi(Rational alpha, Rational beta, unsigned n);
  static ClassicalFamily laguerre(Rational alpha, unsigned n);
  static ClassicalFamily hermite(unsigned n);

  /// Family literal: `jacobi(a,b,n)`, `laguerre(a,n)` or `hermite(n)`.
  static ClassicalFamily parse(std::string_view literal);
  std::string to_string() const;

  friend bool operator==(const ClassicalFamily&, const ClassicalFamily&) = default;
};

/// The equation whose degree-n polynomial solution is the family member.
HypergeomEq equation_of(const ClassicalFamily& family);

/// Family member in classical normalization, generated by the three-term
/// recurrence (independent of any ODE machinery).
Poly polynomial_solution(const ClassicalFamily& family);

/// Rising factorial (a)_j = a(a+1)...(a+j-1), (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned j);

/// True for -1/2, -3/2, -5/2, ...
bool is_negative_half_integer(const Rational& r);

/// ((g+1/2)_k / k!) sum_j (-k)_j (k+g+h+2)_j / (j! (g+1/2)_j) ((1-x)/2)^j.
/// Throws ForbiddenParameter for g or h in {-1/2, -3/2, ...}.
Poly jacobi_series_gh(const Rational& g, const Rational& h, unsigned k);

struct FittedEquation {
  Poly tau;
  Rational lambda;
};

/// Finds the unique (tau = t0 + t1 x, lambda) with sigma*z'' + tau*z' + lambda*z = 0,
/// by an exact linear solve over the residual's coefficients. std::nullopt when
/// no such pair exists or it is not unique.
std::optional<FittedEquation> fit_hypergeometric(const Poly& sigma, const Poly& z);

/// (2n+a+b)(1-x^2) P_n' - n[a-b-(2n+a+b)x] P_n - 2(n+a)(n+b) P_{n-1} for the
/// classical Jacobi polynomials; the zero polynomial when the contiguous
/// relation holds. Requires n >= 1.
Poly jacobi_contiguity_residual(const Rational& alpha, const Rational& beta, unsigned n);

}  // namespace hgt
