#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hgt/rational.hpp"

namespace hgt {

/// Dense univariate polynomial over Rational. coeffs()[i] is the coefficient
/// of x^i; the leading coefficient is never zero, and the zero polynomial
/// has no coefficients at all (its degree() is std::nullopt).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t power);
  static Poly x() { return monomial(Rational(1), 1); }
  /// x - root
  static Poly linear_factor(const Rational& root);

  /// Comma-separated ascending coefficients, e.g. "1, 0, -1" for 1 - x^2.
  static Poly parse(std::string_view literal);

  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i, zero past the degree.
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& at) const;

  /// Literal form accepted by parse(); "0" for the zero polynomial.
  std::string to_string() const;
  /// Human-readable form in descending powers, e.g. "-x^2 + 1".
  std::string pretty(std::string_view var = "x") const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& rhs);
  Poly& operator/=(const Rational& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Rational& lhs, Poly rhs) { return rhs *= lhs; }
  friend Poly operator/(Poly lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Poly operator-(Poly p);

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

Poly derivative(const Poly& p);
Rational eval(const Poly& p, const Rational& at);

/// a = q*b + r with deg r < deg b. Throws DivisionByZeroPoly when b = 0.
DivRem divrem(const Poly& a, const Poly& b);
/// Quotient of an exact division; throws InconsistentFactorization when b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);
bool divides(const Poly& b, const Poly& a);

/// Monic associate; the zero polynomial maps to itself.
Poly monic(const Poly& p);
/// Monic greatest common divisor, zero when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

Poly pow(const Poly& p, unsigned exponent);
/// p(shift + scale*x)
Poly compose_affine(const Poly& p, const Rational& shift, const Rational& scale);
/// Largest m with (x - at)^m | p; std::nullopt for the zero polynomial.
std::optional<std::size_t> vanishing_order(const Poly& p, const Rational& at);

struct RootMultiplicity {
  Rational root;
  std::size_t multiplicity = 0;

  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

/// p = cofactor * prod (x - root)^multiplicity, with every rational root of p
/// listed (ascending) and cofactor free of rational roots.
struct RootFactorization {
  std::vector<RootMultiplicity> roots;
  Poly cofactor;
};

/// Rational-root extraction by the rational root theorem. Only linear
/// factors over Q are found; anything else stays in the cofactor.
RootFactorization rational_roots(const Poly& p);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace hgt
