#pragma once

#include <array>
#include <iosfwd>

#include "hgt/poly.hpp"

namespace hgt {

/// Second-order linear operator c2*y'' + c1*y' + c0*y with polynomial
/// coefficients. At least one coefficient is nonzero.
class OdeOperator2 {
 public:
  OdeOperator2(Poly c2, Poly c1, Poly c0);

  const Poly& c2() const noexcept { return c2_; }
  const Poly& c1() const noexcept { return c1_; }
  const Poly& c0() const noexcept { return c0_; }

  friend bool operator==(const OdeOperator2&, const OdeOperator2&) = default;

 private:
  Poly c2_;
  Poly c1_;
  Poly c0_;
};

/// Divides the triple by the monic gcd of its members, then by the leading
/// coefficient of c2 (of c1 when c2 = 0, of c0 when both vanish). The result
/// is the canonical representative of the operator up to a polynomial factor.
std::array<Poly, 3> gcd_and_normalize(const Poly& c2, const Poly& c1, const Poly& c0);
OdeOperator2 normalize(const OdeOperator2& op);

/// True when the two operators agree after normalization.
bool equivalent(const OdeOperator2& lhs, const OdeOperator2& rhs);

/// c2*y'' + c1*y' + c0*y
Poly apply_operator(const OdeOperator2& op, const Poly& y);

/// Rewrites the operator in the variable t where x = shift + scale*t.
/// Throws SingularSubstitution when scale = 0. The result is normalized.
OdeOperator2 affine_substitute(const OdeOperator2& op, const Rational& shift, const Rational& scale);

std::ostream& operator<<(std::ostream& os, const OdeOperator2& op);

}  // namespace hgt
