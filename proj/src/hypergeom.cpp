#include "hgt/hypergeom.hpp"

#include <cctype>
#include <vector>

#include "hgt/error.hpp"
#include "hgt/linear_solve.hpp"

namespace hgt {

HypergeomEq::HypergeomEq(Poly sigma, Poly tau, Rational lambda)
    : sigma_(std::move(sigma)), tau_(std::move(tau)), lambda_(std::move(lambda)) {
  if (sigma_.is_zero() || *sigma_.degree() > 2) {
    throw MathError(ErrorKind::InvalidEquation, "sigma must be a nonzero polynomial of degree <= 2, got " + sigma_.pretty());
  }
  if (tau_.degree() != std::optional<std::size_t>(1)) {
    throw MathError(ErrorKind::InvalidEquation, "tau must have degree exactly 1, got " + tau_.pretty());
  }
}

namespace {

Rational r(std::int64_t v) { return Rational(v); }

void validate(const ClassicalFamily& f) {
  if (f.kind != ClassicalFamily::Kind::Jacobi) return;
  const Rational s = f.alpha + f.beta;
  if ((s + r(f.degree) + r(1)).is_zero()) {
    throw MathError(ErrorKind::InvalidFamily, "alpha + beta + n + 1 = 0 drops the degree of " + f.to_string());
  }
  for (unsigned m = 2; m <= f.degree; ++m) {
    if ((r(m) + s).is_zero() || (r(2 * m) + s - r(2)).is_zero()) {
      throw MathError(ErrorKind::InvalidFamily, "Jacobi recurrence denominator vanishes for " + f.to_string());
    }
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

unsigned parse_degree(std::string_view text) {
  const Rational n = Rational::parse(text);
  if (!n.is_integer() || n.sign() < 0 || n > Rational(100000)) {
    throw ParseError("degree must be a nonnegative integer, got '" + std::string(trim(text)) + "'");
  }
  return static_cast<unsigned>(n.numerator().get_ui());
}

}  // namespace

ClassicalFamily ClassicalFamily::jacobi(Rational alpha, Rational beta, unsigned n) {
  ClassicalFamily f{Kind::Jacobi, std::move(alpha), std::move(beta), n};
  validate(f);
  return f;
}

ClassicalFamily ClassicalFamily::laguerre(Rational alpha, unsigned n) {
  return ClassicalFamily{Kind::Laguerre, std::move(alpha), Rational(0), n};
}

ClassicalFamily ClassicalFamily::hermite(unsigned n) { return ClassicalFamily{Kind::Hermite, Rational(0), Rational(0), n}; }

ClassicalFamily ClassicalFamily::parse(std::string_view literal) {
  const std::string_view s = trim(literal);
  const auto open = s.find('(');
  if (open == std::string_view::npos || s.back() != ')') {
    throw ParseError("family literal must look like name(args), got '" + std::string(s) + "'");
  }
  const std::string_view name = trim(s.substr(0, open));
  std::vector<std::string_view> args;
  std::string_view inner = s.substr(open + 1, s.size() - open - 2);
  while (true) {
    const auto comma = inner.find(',');
    args.push_back(inner.substr(0, comma));
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  if (name == "jacobi" && args.size() == 3) {
    return jacobi(Rational::parse(args[0]), Rational::parse(args[1]), parse_degree(args[2]));
  }
  if (name == "laguerre" && args.size() == 2) return laguerre(Rational::parse(args[0]), parse_degree(args[1]));
  if (name == "hermite" && args.size() == 1) return hermite(parse_degree(args[0]));
  throw ParseError("unknown family literal '" + std::string(s) + "'");
}

std::string ClassicalFamily::to_string() const {
  switch (kind) {
    case Kind::Jacobi:
      return "jacobi(" + alpha.to_string() + "," + beta.to_string() + "," + std::to_string(degree) + ")";
    case Kind::Laguerre:
      return "laguerre(" + alpha.to_string() + "," + std::to_string(degree) + ")";
    case Kind::Hermite:
      return "hermite(" + std::to_string(degree) + ")";
  }
  return {};
}

HypergeomEq equation_of(const ClassicalFamily& family) {
  validate(family);
  const Rational n = r(family.degree);
  const Rational& a = family.alpha;
  const Rational& b = family.beta;
  switch (family.kind) {
    case ClassicalFamily::Kind::Jacobi:
      if ((a + b + r(2)).is_zero()) {
        throw MathError(ErrorKind::InvalidFamily, "alpha + beta = -2 leaves tau constant for " + family.to_string());
      }
      return HypergeomEq(Poly({r(1), r(0), r(-1)}), Poly({b - a, -(a + b + r(2))}), n * (n + a + b + r(1)));
    case ClassicalFamily::Kind::Laguerre:
      return HypergeomEq(Poly::x(), Poly({r(1) + a, r(-1)}), n);
    case ClassicalFamily::Kind::Hermite:
      return HypergeomEq(Poly::constant(r(1)), Poly({r(0), r(-2)}), r(2) * n);
  }
  throw MathError(ErrorKind::InvalidFamily, "unknown family kind");
}

Poly polynomial_solution(const ClassicalFamily& family) {
  validate(family);
  const unsigned n = family.degree;
  const Rational& a = family.alpha;
  const Rational& b = family.beta;
  const Poly x = Poly::x();

  Poly prev = Poly::constant(r(1));
  if (n == 0) return prev;
  Poly cur;
  switch (family.kind) {
    case ClassicalFamily::Kind::Jacobi: {
      cur = Poly::constant(a + r(1)) + (a + b + r(2)) / r(2) * Poly({r(-1), r(1)});
      for (unsigned m = 2; m <= n; ++m) {
        const Rational mm = r(m);
        const Rational c = r(2) * mm + a + b;
        const Rational denom = r(2) * mm * (mm + a + b) * (c - r(2));
        Poly next = (c - r(1)) * (Poly({a * a - b * b, c * (c - r(2))}) * cur) -
                    r(2) * (mm + a - r(1)) * (mm + b - r(1)) * c * prev;
        prev = std::move(cur);
        cur = next / denom;
      }
      return cur;
    }
    case ClassicalFamily::Kind::Laguerre: {
      cur = Poly({r(1) + a, r(-1)});
      for (unsigned m = 1; m < n; ++m) {
        const Rational mm = r(m);
        Poly next = (Poly({r(2) * mm + r(1) + a, r(-1)}) * cur - (mm + a) * prev) / (mm + r(1));
        prev = std::move(cur);
        cur = std::move(next);
      }
      return cur;
    }
    case ClassicalFamily::Kind::Hermite: {
      cur = Poly({r(0), r(2)});
      for (unsigned m = 1; m < n; ++m) {
        Poly next = r(2) * (x * cur) - r(2 * m) * prev;
        prev = std::move(cur);
        cur = std::move(next);
      }
      return cur;
    }
  }
  throw MathError(ErrorKind::InvalidFamily, "unknown family kind");
}

Rational pochhammer(const Rational& a, unsigned j) {
  Rational out(1);
  for (unsigned i = 0; i < j; ++i) out *= a + r(i);
  return out;
}

bool is_negative_half_integer(const Rational& value) {
  const Rational shifted = value + Rational(1, 2);
  return shifted.is_integer() && shifted.sign() <= 0;
}

Poly jacobi_series_gh(const Rational& g, const Rational& h, unsigned k) {
  if (is_negative_half_integer(g) || is_negative_half_integer(h)) {
    throw MathError(ErrorKind::ForbiddenParameter,
                    "g, h must avoid -1/2, -3/2, ...; got g = " + g.to_string() + ", h = " + h.to_string());
  }
  const Rational g_half = g + Rational(1, 2);
  const Poly u({Rational(1, 2), Rational(-1, 2)});  // (1 - x)/2
  Poly sum;
  Poly u_power = Poly::constant(r(1));
  Rational j_factorial(1);
  for (unsigned j = 0; j <= k; ++j) {
    if (j > 0) {
      u_power *= u;
      j_factorial *= r(j);
    }
    const Rational denom = j_factorial * pochhammer(g_half, j);
    if (denom.is_zero()) throw MathError(ErrorKind::ForbiddenParameter, "series denominator (g+1/2)_j vanishes");
    sum += pochhammer(r(-static_cast<std::int64_t>(k)), j) * pochhammer(r(k) + g + h + r(2), j) / denom * u_power;
  }
  Rational k_factorial(1);
  for (unsigned i = 2; i <= k; ++i) k_factorial *= r(i);
  return pochhammer(g_half, k) / k_factorial * sum;
}

std::optional<FittedEquation> fit_hypergeometric(const Poly& sigma, const Poly& z) {
  const Poly dz = derivative(z);
  const Poly x_dz = Poly::x() * dz;
  const Poly known = sigma * derivative(dz);
  std::size_t rows = 1;
  for (const Poly* p : {&dz, &x_dz, &z, &known}) {
    if (p->degree()) rows = std::max(rows, *p->degree() + 1);
  }
  RationalMatrix matrix(rows, std::vector<Rational>(3));
  std::vector<Rational> rhs(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    matrix[i] = {dz.coeff(i), x_dz.coeff(i), z.coeff(i)};
    rhs[i] = -known.coeff(i);
  }
  auto solution = solve_unique(std::move(matrix), std::move(rhs));
  if (!solution) return std::nullopt;
  return FittedEquation{Poly({(*solution)[0], (*solution)[1]}), (*solution)[2]};
}

Poly jacobi_contiguity_residual(const Rational& alpha, const Rational& beta, unsigned n) {
  if (n == 0) throw MathError(ErrorKind::InvalidFamily, "contiguous relation needs n >= 1");
  const Poly pn = polynomial_solution(ClassicalFamily::jacobi(alpha, beta, n));
  const Poly pm = polynomial_solution(ClassicalFamily::jacobi(alpha, beta, n - 1));
  const Rational nn = r(n);
  const Rational c = r(2) * nn + alpha + beta;
  const Poly lhs = c * (Poly({r(1), r(0), r(-1)}) * derivative(pn)) - nn * (Poly({alpha - beta, -c}) * pn);
  return lhs - r(2) * (nn + alpha) * (nn + beta) * pm;
}

}  // namespace hgt
