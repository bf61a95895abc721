#include "hgt/exceptional.hpp"

#include <cctype>
#include <vector>

#include "hgt/error.hpp"
#include "hgt/hypergeom.hpp"

namespace hgt {

namespace {

Rational r(std::int64_t v) { return Rational(v); }
const Rational kHalf(1, 2);

}  // namespace

X1JacobiSpec::X1JacobiSpec(Rational g, Rational h, unsigned k) : g_(std::move(g)), h_(std::move(h)), k_(k) {
  if (is_negative_half_integer(g_) || is_negative_half_integer(h_)) {
    throw MathError(ErrorKind::ForbiddenParameter,
                    "g, h must avoid -1/2, -3/2, ...; got g = " + g_.to_string() + ", h = " + h_.to_string());
  }
  if ((r(k_) + h_ + kHalf).is_zero()) {
    throw MathError(ErrorKind::ForbiddenParameter, "k + h + 1/2 = 0");
  }
}

X1JacobiSpec X1JacobiSpec::parse(std::string_view literal) {
  auto s = literal;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (!s.starts_with("x1(") || !s.ends_with(")")) {
    throw ParseError("X1 literal must look like x1(g, h, k), got '" + std::string(s) + "'");
  }
  s = s.substr(3, s.size() - 4);
  std::vector<std::string_view> args;
  while (true) {
    const auto comma = s.find(',');
    args.push_back(s.substr(0, comma));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  if (args.size() != 3) throw ParseError("x1(g, h, k) takes three arguments");
  const Rational k = Rational::parse(args[2]);
  if (!k.is_integer() || k.sign() < 0 || k > Rational(100000)) {
    throw ParseError("k must be a nonnegative integer");
  }
  return X1JacobiSpec(Rational::parse(args[0]), Rational::parse(args[1]), static_cast<unsigned>(k.numerator().get_ui()));
}

std::string X1JacobiSpec::to_string() const {
  return "x1(" + g_.to_string() + "," + h_.to_string() + "," + std::to_string(k_) + ")";
}

X1Construction build_x1(const X1JacobiSpec& spec) {
  const Rational& g = spec.g();
  const Rational& h = spec.h();
  const Rational slope = (g - h) / r(2);
  const Rational scale = inverse(r(spec.k()) + h + kHalf);

  X1Construction out;
  out.zeta = Poly({(g + h + r(1)) / r(2), slope});
  out.zeta_tilde = Poly({(g + h + r(3)) / r(2), slope});
  out.a = scale * (h + kHalf) * out.zeta_tilde;
  out.b = scale * (Poly({r(1), r(1)}) * out.zeta);
  out.p_k = jacobi_series_gh(g, h, spec.k());
  out.y_hat = out.a * out.p_k + out.b * derivative(out.p_k);
  return out;
}

OdeOperator2 x1_operator(const X1JacobiSpec& spec) {
  const Rational& g = spec.g();
  const Rational& h = spec.h();
  const Rational k = r(spec.k());
  const Rational slope = (g - h) / r(2);
  const Poly zeta({(g + h + r(1)) / r(2), slope});
  const Poly d_zeta = Poly::constant(slope);
  const Poly d_zeta_tilde = Poly::constant(slope);
  const Poly one_minus_eta2({r(1), r(0), r(-1)});

  Poly c2 = one_minus_eta2 * zeta;
  Poly c1 = Poly({h - g, -(g + h + r(3))}) * zeta - r(2) * (one_minus_eta2 * d_zeta);
  Poly c0 = r(-2) * (h + kHalf) * (Poly({r(1), r(-1)}) * d_zeta_tilde) + (k * (k + g + h + r(2)) + g - h) * zeta;
  return OdeOperator2(std::move(c2), std::move(c1), std::move(c0));
}

Rational zeta_root(const X1JacobiSpec& spec) {
  if (spec.degenerate_zeta()) throw MathError(ErrorKind::DegenerateZeta, "g = h: zeta is constant");
  return -(spec.g() + spec.h() + r(1)) / (spec.g() - spec.h());
}

OdeOperator2 x1_to_heun(const X1JacobiSpec& spec) {
  const Rational eta_root = zeta_root(spec);
  const Rational x_root = (r(1) - eta_root) / r(2);
  if (x_root == r(0) || x_root == r(1)) {
    throw MathError(ErrorKind::ConfluentOrDegenerate,
                    "root of zeta maps to x = " + x_root.to_string() + " under eta = 1 - 2x");
  }
  return affine_substitute(x1_operator(spec), r(1), r(-2));
}

HeunParameters x1_heun_parameters(const X1JacobiSpec& spec) { return heun_reduce(x1_to_heun(spec)); }

}  // namespace hgt
