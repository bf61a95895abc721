#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hgt/exceptional.hpp"
#include "hgt/hypergeom.hpp"
#include "hgt/poly.hpp"

namespace hgt::cli {

/// Line-based `key: value` input. Blank lines and lines starting with '#'
/// are ignored. Recognized keys:
///   sigma, tau, lambda    hypergeometric triple (all or none)
///   family                classical family literal, exclusive with the triple
///   A, B                  transform polynomials
///   c2, c1, c0            explicit operator (all or none), exclusive with the above
///   candidate             polynomial to verify
///   x1                    `x1(g, h, k)` literal
///   contiguity            `jacobi(a, b, n)` for the Jacobi contiguous relation
struct EquationSpecFile {
  std::optional<Poly> sigma;
  std::optional<Poly> tau;
  std::optional<Rational> lambda;
  std::optional<ClassicalFamily> family;
  std::optional<Poly> a;
  std::optional<Poly> b;
  std::optional<Poly> c2;
  std::optional<Poly> c1;
  std::optional<Poly> c0;
  std::optional<Poly> candidate;
  std::optional<X1JacobiSpec> x1;
  std::optional<ClassicalFamily> contiguity;

  bool has_equation() const { return sigma.has_value() || family.has_value(); }
  bool has_operator() const { return c2.has_value(); }

  /// The hypergeometric equation from the triple or the family.
  HypergeomEq equation() const;
};

/// Throws ParseError (with line and column) on malformed input, duplicate
/// keys, incomplete groups or mutually exclusive keys. Mathematical
/// validation of the triple (degrees of sigma, tau) happens in equation().
EquationSpecFile parse_spec(std::string_view text);

}  // namespace hgt::cli
