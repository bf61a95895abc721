#pragma once

#include <span>
#include <vector>

#include "hgt/poly.hpp"

namespace hgt {

/// coefficient / (x - pole)^order
struct PartialFractionTerm {
  Rational pole;
  std::size_t order = 1;
  Rational coefficient;

  friend bool operator==(const PartialFractionTerm&, const PartialFractionTerm&) = default;
};

/// num/den = polynomial_part + sum of terms. Terms are grouped by pole in
/// the order the factors were given, ascending order within a pole; terms
/// whose coefficient vanishes are omitted.
struct PartialFractions {
  Poly polynomial_part;
  std::vector<PartialFractionTerm> terms;

  /// Coefficient of 1/(x - pole)^order, zero when absent.
  Rational coefficient(const Rational& pole, std::size_t order = 1) const;
};

/// Expands num / prod (x - root)^multiplicity over the given linear factors.
PartialFractions partial_fractions(const Poly& num, std::span<const RootMultiplicity> den_factors);

/// As above, additionally checking that the factors multiply to `den`
/// (up to its leading coefficient, which is divided out of the result).
PartialFractions partial_fractions(const Poly& num, const Poly& den,
                                   std::span<const RootMultiplicity> den_factors);

/// prod (x - root)^multiplicity
Poly product_of_factors(std::span<const RootMultiplicity> factors);

/// Numerator over product_of_factors(den_factors) of the recombined sum.
Poly recombine(const PartialFractions& pf, std::span<const RootMultiplicity> den_factors);

}  // namespace hgt
