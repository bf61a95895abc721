#include "hgt/operator.hpp"

#include <ostream>

#include "hgt/error.hpp"

namespace hgt {

OdeOperator2::OdeOperator2(Poly c2, Poly c1, Poly c0) : c2_(std::move(c2)), c1_(std::move(c1)), c0_(std::move(c0)) {
  if (c2_.is_zero() && c1_.is_zero() && c0_.is_zero()) {
    throw MathError(ErrorKind::AllZeroOperator, "operator with all coefficients zero");
  }
}

std::array<Poly, 3> gcd_and_normalize(const Poly& c2, const Poly& c1, const Poly& c0) {
  if (c2.is_zero() && c1.is_zero() && c0.is_zero()) {
    throw MathError(ErrorKind::AllZeroOperator, "cannot normalize the zero operator");
  }
  const Poly g = gcd(gcd(c2, c1), c0);
  std::array<Poly, 3> out{divide_exact(c2, g), divide_exact(c1, g), divide_exact(c0, g)};
  const Rational lead = !out[0].is_zero() ? out[0].leading() : (!out[1].is_zero() ? out[1].leading() : out[2].leading());
  for (auto& p : out) p /= lead;
  return out;
}

OdeOperator2 normalize(const OdeOperator2& op) {
  auto [c2, c1, c0] = gcd_and_normalize(op.c2(), op.c1(), op.c0());
  return OdeOperator2(std::move(c2), std::move(c1), std::move(c0));
}

bool equivalent(const OdeOperator2& lhs, const OdeOperator2& rhs) { return normalize(lhs) == normalize(rhs); }

Poly apply_operator(const OdeOperator2& op, const Poly& y) {
  const Poly dy = derivative(y);
  return op.c2() * derivative(dy) + op.c1() * dy + op.c0() * y;
}

OdeOperator2 affine_substitute(const OdeOperator2& op, const Rational& shift, const Rational& scale) {
  if (scale.is_zero()) throw MathError(ErrorKind::SingularSubstitution, "affine substitution with zero scale");
  // y(x) = u(t): dy/dx = u'/scale, d2y/dx2 = u''/scale^2; multiply through by scale^2.
  return normalize(OdeOperator2(compose_affine(op.c2(), shift, scale),
                                scale * compose_affine(op.c1(), shift, scale),
                                scale * scale * compose_affine(op.c0(), shift, scale)));
}

std::ostream& operator<<(std::ostream& os, const OdeOperator2& op) {
  return os << "(" << op.c2().pretty() << ") y'' + (" << op.c1().pretty() << ") y' + (" << op.c0().pretty() << ") y";
}

}  // namespace hgt
