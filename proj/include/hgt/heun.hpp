#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hgt/operator.hpp"
#include "hgt/rational.hpp"

namespace hgt {

/// y'' + (gamma/x + delta/(x-1) + epsilon/(x-mu)) y' + (ab*x + rho)/(x(x-1)(x-mu)) y = 0.
/// Only the product ab = alpha*beta is recoverable from the operator.
struct HeunParameters {
  Rational gamma;
  Rational delta;
  Rational epsilon;
  Rational mu;
  Rational alpha_beta_product;
  Rational rho;

  friend bool operator==(const HeunParameters&, const HeunParameters&) = default;
};

/// Canonical Heun operator (x(x-1)(x-mu), ..., ab*x + rho) for the parameters.
OdeOperator2 heun_operator(const HeunParameters& params);

/// t^2 - (gamma + delta + epsilon - 1) t + ab, whose roots are alpha and beta.
Poly exponent_quadratic(const HeunParameters& params);

enum class SingularKind { Ordinary, RegularSingular, IrregularSingular };

std::string_view to_string(SingularKind kind) noexcept;

struct SingularPoint {
  std::optional<Rational> location;  // std::nullopt is the point at infinity
  SingularKind kind = SingularKind::Ordinary;
  std::size_t c2_multiplicity = 0;   // 0 at infinity

  bool at_infinity() const noexcept { return !location.has_value(); }

  friend bool operator==(const SingularPoint&, const SingularPoint&) = default;
};

/// Finite singular points (rational roots of c2, ascending) followed by the
/// point at infinity. The operator is normalized first. Infinity is tested
/// for regularity only, so it is never reported as ordinary. Throws
/// UnresolvedFactor when c2 keeps a factor of degree >= 2 without rational
/// roots, AllZeroOperator when c2 = 0.
std::vector<SingularPoint> classify_singularities(const OdeOperator2& op);

/// True when every entry (including infinity) is ordinary or regular singular.
bool is_fuchsian(const std::vector<SingularPoint>& points);

/// Matches the normalized operator against the canonical Heun form with
/// singular points 0, 1, mu, infinity. Throws NotHeunReducible with the
/// reason, or ConfluentOrDegenerate when mu would coincide with 0 or 1.
HeunParameters heun_reduce(const OdeOperator2& op);

}  // namespace hgt
