#include "hgt/transform.hpp"

#include "hgt/error.hpp"

namespace hgt {

LinearTransform::LinearTransform(Poly a, Poly b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.is_zero() && b_.is_zero()) throw MathError(ErrorKind::DegenerateTransform, "A = B = 0");
}

namespace {

// Single and double bars only; the hat pair is not needed by expand_determinant.
BarCoefficients compute_plain_bars(const HypergeomEq& eq, const LinearTransform& t) {
  const Poly& s = eq.sigma();
  const Poly& tau = eq.tau();
  const Rational& lam = eq.lambda();

  BarCoefficients out;
  out.a_bar = s * derivative(t.a()) - lam * t.b();
  out.b_bar = s * t.a() + s * derivative(t.b()) - tau * t.b();
  out.a_dbar = s * derivative(out.a_bar) - lam * out.b_bar;
  out.b_dbar = s * out.a_bar + s * derivative(out.b_bar) - tau * out.b_bar;
  return out;
}

}  // namespace

BarCoefficients compute_bars(const HypergeomEq& eq, const LinearTransform& t) {
  const Poly& s = eq.sigma();
  const Poly& tau = eq.tau();
  const Rational& lam = eq.lambda();
  const Poly ds = derivative(s);

  BarCoefficients out = compute_plain_bars(eq, t);
  out.a_hat = s * derivative(out.a_bar) - lam * out.b_bar - ds * out.a_bar;
  out.b_hat = s * out.a_bar + s * derivative(out.b_bar) - out.b_bar * (tau + ds);
  return out;
}

std::pair<Poly, Poly> expanded_double_bars(const HypergeomEq& eq, const LinearTransform& t) {
  const Poly& s = eq.sigma();
  const Poly& tau = eq.tau();
  const Rational& lam = eq.lambda();
  const Poly& A = t.a();
  const Poly& B = t.b();
  const Poly ds = derivative(s);
  const Poly dt = derivative(tau);
  const Poly dA = derivative(A);
  const Poly dB = derivative(B);
  const Poly s2 = s * s;

  Poly a_dbar = derivative(dA) * s2 + s * dA * ds - Rational(2) * lam * s * dB - lam * A * s + lam * B * tau;
  Poly b_dbar = Rational(2) * dA * s2 - lam * s * B + s * A * ds + s2 * derivative(dB) + s * dB * ds -
                Rational(2) * s * dB * tau - s * B * dt - tau * A * s + B * tau * tau;
  return {std::move(a_dbar), std::move(b_dbar)};
}

Poly transform_bracket(const HypergeomEq& eq, const LinearTransform& t) {
  const Poly& s = eq.sigma();
  const Poly a_bar = s * derivative(t.a()) - eq.lambda() * t.b();
  const Poly b_bar = s * t.a() + s * derivative(t.b()) - eq.tau() * t.b();
  return t.a() * b_bar - t.b() * a_bar;
}

namespace {

void require_nondegenerate(const Poly& bracket) {
  if (bracket.is_zero()) {
    throw MathError(ErrorKind::DegenerateTransform, "A*b_bar - B*a_bar vanishes; y satisfies no second-order equation");
  }
}

}  // namespace

OdeOperator2 expand_determinant(const HypergeomEq& eq, const LinearTransform& t) {
  const BarCoefficients bars = compute_plain_bars(eq, t);
  const Poly& s = eq.sigma();
  const Poly& A = t.a();
  const Poly& B = t.b();
  const Poly w = A * bars.b_bar - B * bars.a_bar;
  require_nondegenerate(w);
  // sigma*(sigma*y')' = sigma^2 y'' + sigma*sigma' y'
  Poly c2 = s * s * w;
  Poly c1 = s * derivative(s) * w - s * (A * bars.b_dbar - B * bars.a_dbar);
  Poly c0 = bars.a_bar * bars.b_dbar - bars.b_bar * bars.a_dbar;
  return OdeOperator2(std::move(c2), std::move(c1), std::move(c0));
}

OdeOperator2 expand_determinant_hat(const HypergeomEq& eq, const LinearTransform& t) {
  const BarCoefficients bars = compute_bars(eq, t);
  const Poly& s = eq.sigma();
  const Poly& A = t.a();
  const Poly& B = t.b();
  const Poly w = A * bars.b_bar - B * bars.a_bar;
  require_nondegenerate(w);
  Poly c2 = s * s * w;
  Poly c1 = -(s * (A * bars.b_hat - B * bars.a_hat));
  Poly c0 = bars.a_bar * bars.b_hat - bars.b_bar * bars.a_hat;
  return OdeOperator2(std::move(c2), std::move(c1), std::move(c0));
}

OdeOperator2 closed_form_basic(const HypergeomEq& eq, const Poly& A) {
  const Poly& s = eq.sigma();
  const Poly& tau = eq.tau();
  const Rational& lam = eq.lambda();
  const Poly ds = derivative(s);
  const Poly dds = derivative(ds);
  const Poly dt = derivative(tau);
  const Poly dA = derivative(A);
  const Poly ddA = derivative(dA);
  const Poly lam_p = Poly::constant(lam);

  const Poly P = A * A + A * (ds - tau) + s * (lam_p - dA);
  if (P.is_zero()) throw MathError(ErrorKind::DegenerateTransform, "P vanishes for B = sigma");

  const Poly Q = ddA * s * s + s * (A * dt + tau * lam - lam * ds - A * dds - Rational(2) * A * dA) +
                 A * tau * (ds + A - tau);
  const Poly R = s * (ddA * (tau - A - ds) + dA * (Rational(2) * dA + dds - Rational(3) * lam_p - dt) +
                      lam * (lam_p + dt - dds)) +
                 ds * (Rational(2) * lam * A + lam * ds - lam * tau - tau * dA) + (A - tau) * (lam * A - dA * tau);
  return OdeOperator2(s * P, Q, R);
}

OdeOperator2 closed_form_const(const HypergeomEq& eq, const Rational& A, const Rational& B) {
  if (A.is_zero() && B.is_zero()) throw MathError(ErrorKind::DegenerateTransform, "A = B = 0");
  const Poly& s = eq.sigma();
  const Poly& tau = eq.tau();
  const Rational& lam = eq.lambda();
  const Poly ds = derivative(s);
  const Poly dt = derivative(tau);

  const Poly P = s * (A * (A * s - B * tau) + Poly::constant(lam * B * B));
  if (P.is_zero()) throw MathError(ErrorKind::DegenerateTransform, "P vanishes for constant A, B");

  const Poly Q = s * s * (A * A * tau + A * B * dt) +
                 s * (lam * B * B * tau + lam * B * B * ds - A * B * (tau * tau) - A * B * (ds * tau));
  const Poly R = lam * A * A * (s * s) +
                 s * (Poly::constant(lam * lam * B * B) - lam * A * B * ds + lam * B * B * dt - lam * B * A * tau);
  return OdeOperator2(s * P, Q, R);
}

CrossCheck cross_validate(const OdeOperator2& closed_form, const OdeOperator2& determinant) {
  const OdeOperator2 lhs = normalize(closed_form);
  const OdeOperator2 rhs = normalize(determinant);
  CrossCheck out;
  const auto compare = [&](const char* name, const Poly& a, const Poly& b) {
    if (a != b) out.diffs.push_back({name, a, b});
  };
  compare("c2", lhs.c2(), rhs.c2());
  compare("c1", lhs.c1(), rhs.c1());
  compare("c0", lhs.c0(), rhs.c0());
  out.agree = out.diffs.empty();
  return out;
}

}  // namespace hgt
