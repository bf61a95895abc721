#pragma once

#include <string>
#include <string_view>

#include "hgt/heun.hpp"
#include "hgt/operator.hpp"
#include "hgt/poly.hpp"

namespace hgt {

/// Parameters of an exceptional X1-Jacobi polynomial of index k (degree k+1).
/// g, h avoid {-1/2, -3/2, ...} and k + h + 1/2 != 0; the constructor throws
/// ForbiddenParameter otherwise.
class X1JacobiSpec {
 public:
  X1JacobiSpec(Rational g, Rational h, unsigned k);

  /// Literal `x1(g, h, k)`.
  static X1JacobiSpec parse(std::string_view literal);
  std::string to_string() const;

  const Rational& g() const noexcept { return g_; }
  const Rational& h() const noexcept { return h_; }
  unsigned k() const noexcept { return k_; }

  /// g = h makes zeta constant.
  bool degenerate_zeta() const { return g_ == h_; }

 private:
  Rational g_;
  Rational h_;
  unsigned k_;
};

struct X1Construction {
  Poly zeta;        // ((g-h)/2) eta + (g+h+1)/2
  Poly zeta_tilde;  // ((g-h)/2) eta + (g+h+3)/2
  Poly a;           // (h+1/2) zeta_tilde / (k+h+1/2)
  Poly b;           // (1+eta) zeta / (k+h+1/2)
  Poly p_k;         // Jacobi polynomial in the (g, h) parametrization
  Poly y_hat;       // a*p_k + b*p_k'
};

X1Construction build_x1(const X1JacobiSpec& spec);

/// The X1 equation multiplied through by zeta:
///   c2 = (1-eta^2) zeta
///   c1 = (h-g-(g+h+3)eta) zeta - 2(1-eta^2) zeta'
///   c0 = -2(h+1/2)(1-eta) zeta_tilde' + (k(k+g+h+2)+g-h) zeta
/// Equivalent to the rational-coefficient form away from the root of zeta.
OdeOperator2 x1_operator(const X1JacobiSpec& spec);

/// Root of zeta, -(g+h+1)/(g-h). Throws DegenerateZeta when g = h.
Rational zeta_root(const X1JacobiSpec& spec);

/// x1_operator rewritten in x with eta = 1 - 2x (normalized). Throws
/// DegenerateZeta for g = h and ConfluentOrDegenerate when the root of zeta
/// lands on x = 0 or x = 1.
OdeOperator2 x1_to_heun(const X1JacobiSpec& spec);

/// Heun parameters of x1_to_heun(spec).
HeunParameters x1_heun_parameters(const X1JacobiSpec& spec);

}  // namespace hgt
