#pragma once

#include <string>
#include <vector>

#include "hgt/hypergeom.hpp"
#include "hgt/operator.hpp"

namespace hgt {

/// y = A*z + B*z' applied to a solution z of a hypergeometric equation.
class LinearTransform {
 public:
  /// Throws DegenerateTransform when A = B = 0.
  LinearTransform(Poly a, Poly b);

  const Poly& a() const noexcept { return a_; }
  const Poly& b() const noexcept { return b_; }

  /// A*z + B*z'
  Poly apply(const Poly& z) const { return a_ * z + b_ * derivative(z); }

 private:
  Poly a_;
  Poly b_;
};

/// sigma*y' = a_bar*z + b_bar*z', sigma*(sigma*y')' = a_dbar*z + b_dbar*z',
/// and the row-reduced pair a_hat = a_dbar - sigma'*a_bar, b_hat = b_dbar - sigma'*b_bar.
struct BarCoefficients {
  Poly a_bar;
  Poly b_bar;
  Poly a_dbar;
  Poly b_dbar;
  Poly a_hat;
  Poly b_hat;
};

BarCoefficients compute_bars(const HypergeomEq& eq, const LinearTransform& t);

/// a_dbar and b_dbar written out directly in sigma, tau, lambda, A, B
/// (no recursion through the single-bar terms).
std::pair<Poly, Poly> expanded_double_bars(const HypergeomEq& eq, const LinearTransform& t);

/// A*b_bar - B*a_bar. The transform is degenerate when this vanishes.
Poly transform_bracket(const HypergeomEq& eq, const LinearTransform& t);

/// Operator annihilating y = A*z + B*z', from the determinant
///   | y                 A       B      |
///   | sigma*y'          a_bar   b_bar  |
///   | sigma*(sigma*y')' a_dbar  b_dbar |
/// expanded along its first column. Un-normalized.
OdeOperator2 expand_determinant(const HypergeomEq& eq, const LinearTransform& t);

/// Same determinant with third row (sigma^2*y'', a_hat, b_hat).
OdeOperator2 expand_determinant_hat(const HypergeomEq& eq, const LinearTransform& t);

/// (sigma*P, Q, R) for the choice B = sigma, from the closed forms
///   P = A^2 + A(sigma' - tau) + sigma(lambda - A'), and the matching Q, R.
OdeOperator2 closed_form_basic(const HypergeomEq& eq, const Poly& a);

/// (sigma*P, Q, R) for constant A and B, P = sigma[A(A*sigma - tau*B) + lambda*B^2].
OdeOperator2 closed_form_const(const HypergeomEq& eq, const Rational& a, const Rational& b);

struct CoefficientDiff {
  std::string coefficient;  // "c2", "c1" or "c0"
  Poly closed_form;
  Poly determinant;
};

/// Outcome of comparing a closed-form operator against the determinant
/// path after normalization. The determinant value is authoritative.
struct CrossCheck {
  bool agree = true;
  std::vector<CoefficientDiff> diffs;
};

CrossCheck cross_validate(const OdeOperator2& closed_form, const OdeOperator2& determinant);

}  // namespace hgt
