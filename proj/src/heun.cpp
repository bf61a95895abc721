#include "hgt/heun.hpp"

#include "hgt/error.hpp"
#include "hgt/partial_fractions.hpp"

namespace hgt {

namespace {

Rational r(std::int64_t v) { return Rational(v); }

}  // namespace

OdeOperator2 heun_operator(const HeunParameters& p) {
  const Poly x = Poly::x();
  const Poly xm1 = Poly::linear_factor(r(1));
  const Poly xmu = Poly::linear_factor(p.mu);
  Poly c1 = p.gamma * (xm1 * xmu) + p.delta * (x * xmu) + p.epsilon * (x * xm1);
  return OdeOperator2(x * xm1 * xmu, std::move(c1), Poly({p.rho, p.alpha_beta_product}));
}

Poly exponent_quadratic(const HeunParameters& p) {
  return Poly({p.alpha_beta_product, -(p.gamma + p.delta + p.epsilon - r(1)), r(1)});
}

std::string_view to_string(SingularKind kind) noexcept {
  switch (kind) {
    case SingularKind::Ordinary: return "ordinary";
    case SingularKind::RegularSingular: return "regular-singular";
    case SingularKind::IrregularSingular: return "irregular-singular";
  }
  return "unknown";
}

std::vector<SingularPoint> classify_singularities(const OdeOperator2& raw) {
  const OdeOperator2 op = normalize(raw);
  if (op.c2().is_zero()) throw MathError(ErrorKind::AllZeroOperator, "c2 = 0: not a second-order operator");

  const RootFactorization factors = rational_roots(op.c2());
  if (!factors.cofactor.is_constant()) {
    throw MathError(ErrorKind::UnresolvedFactor,
                    "c2 has the factor " + factors.cofactor.pretty() + " without rational roots");
  }

  std::vector<SingularPoint> out;
  for (const auto& [root, m] : factors.roots) {
    // order of the zero polynomial is infinite, which never raises a pole
    const auto deficit = [&](const Poly& c) -> long {
      const auto ord = vanishing_order(c, root);
      return ord ? static_cast<long>(m) - static_cast<long>(*ord) : -1;
    };
    const long d1 = deficit(op.c1());
    const long d0 = deficit(op.c0());
    SingularKind kind = SingularKind::IrregularSingular;
    if (d1 <= 0 && d0 <= 0) {
      kind = SingularKind::Ordinary;
    } else if (d1 <= 1 && d0 <= 2) {
      kind = SingularKind::RegularSingular;
    }
    out.push_back({root, kind, m});
  }

  // Infinity: p = c1/c2, q = c0/c2. Regular iff p = O(1/x), q = O(1/x^2);
  // ordinary iff additionally p - 2/x = O(1/x^2) and q = O(1/x^4).
  const long d2 = static_cast<long>(*op.c2().degree());
  const auto deg = [](const Poly& p) -> long { return p.is_zero() ? -1000 : static_cast<long>(*p.degree()); };
  SingularKind at_inf = SingularKind::IrregularSingular;
  // Regularity test only: an ordinary or apparent point at infinity also
  // passes it and is reported as regular-singular.
  if (deg(op.c1()) <= d2 - 1 && deg(op.c0()) <= d2 - 2) at_inf = SingularKind::RegularSingular;
  out.push_back({std::nullopt, at_inf, 0});
  return out;
}

bool is_fuchsian(const std::vector<SingularPoint>& points) {
  for (const auto& p : points) {
    if (p.kind == SingularKind::IrregularSingular) return false;
  }
  return true;
}

HeunParameters heun_reduce(const OdeOperator2& raw) {
  const OdeOperator2 op = normalize(raw);
  const Poly& c2 = op.c2();
  if (c2.degree() != std::optional<std::size_t>(3)) {
    throw MathError(ErrorKind::NotHeunReducible,
                    "wrong c2 factorization: c2 = " + c2.pretty() + " is not a cubic with simple roots 0, 1, mu");
  }
  const Poly x = Poly::x();
  const Poly xm1 = Poly::linear_factor(r(1));
  if (!eval(c2, r(0)).is_zero() || !eval(c2, r(1)).is_zero()) {
    throw MathError(ErrorKind::NotHeunReducible, "wrong c2 factorization: c2 = " + c2.pretty() + " does not vanish at 0 and 1");
  }
  const Poly linear = divide_exact(c2, x * xm1);
  const Rational mu = -linear.coeff(0) / linear.coeff(1);
  if (mu == r(0) || mu == r(1)) {
    throw MathError(ErrorKind::ConfluentOrDegenerate,
                    "third singular point coalesces at " + mu.to_string() + " (confluent case)");
  }

  const std::vector<RootMultiplicity> poles{{r(0), 1}, {r(1), 1}, {mu, 1}};
  const PartialFractions pf = partial_fractions(op.c1(), c2, poles);
  if (!pf.polynomial_part.is_zero()) {
    throw MathError(ErrorKind::NotHeunReducible,
                    "polynomial part nonzero: c1/c2 has polynomial part " + pf.polynomial_part.pretty());
  }
  if (op.c0().degree().value_or(0) > 1) {
    throw MathError(ErrorKind::NotHeunReducible, "deg c0 too high: c0 = " + op.c0().pretty());
  }
  // c2 is monic after normalization, so c0 is already the numerator ab*x + rho.
  return HeunParameters{pf.coefficient(r(0)), pf.coefficient(r(1)), pf.coefficient(mu), mu, op.c0().coeff(1),
                        op.c0().coeff(0)};
}

}  // namespace hgt
