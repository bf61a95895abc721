#include "hgt/partial_fractions.hpp"

#include <algorithm>
#include <set>

#include "hgt/error.hpp"

namespace hgt {

Rational PartialFractions::coefficient(const Rational& pole, std::size_t order) const {
  for (const auto& t : terms) {
    if (t.pole == pole && t.order == order) return t.coefficient;
  }
  return Rational(0);
}

Poly product_of_factors(std::span<const RootMultiplicity> factors) {
  Poly out = Poly::constant(Rational(1));
  for (const auto& f : factors) out *= pow(Poly::linear_factor(f.root), static_cast<unsigned>(f.multiplicity));
  return out;
}

namespace {

void check_factors(std::span<const RootMultiplicity> factors) {
  std::set<Rational> seen;
  for (const auto& f : factors) {
    if (f.multiplicity == 0) {
      throw MathError(ErrorKind::RepeatedRootBeyondSupport, "factor at " + f.root.to_string() + " has multiplicity 0");
    }
    if (!seen.insert(f.root).second) {
      throw MathError(ErrorKind::RepeatedRootBeyondSupport,
                      "pole " + f.root.to_string() + " declared more than once; merge into one multiplicity");
    }
  }
}

// First `count` Taylor coefficients of num/den around 0, den(0) != 0.
std::vector<Rational> series_quotient(const Poly& num, const Poly& den, std::size_t count) {
  std::vector<Rational> out(count);
  const Rational d0 = den.coeff(0);
  for (std::size_t i = 0; i < count; ++i) {
    Rational acc = num.coeff(i);
    for (std::size_t j = 1; j <= i; ++j) acc.sub_product(den.coeff(j), out[i - j]);
    out[i] = acc / d0;
  }
  return out;
}

}  // namespace

PartialFractions partial_fractions(const Poly& num, std::span<const RootMultiplicity> den_factors) {
  check_factors(den_factors);
  const Poly den = product_of_factors(den_factors);
  auto [quot, rem] = divrem(num, den);

  PartialFractions out;
  out.polynomial_part = std::move(quot);
  for (std::size_t k = 0; k < den_factors.size(); ++k) {
    const auto& [pole, mult] = den_factors[k];
    std::vector<RootMultiplicity> others;
    for (std::size_t j = 0; j < den_factors.size(); ++j) {
      if (j != k) others.push_back(den_factors[j]);
    }
    // rem / (x - pole)^mult / g with g = other factors; expand rem/g in t = x - pole.
    const Poly shifted_num = compose_affine(rem, pole, Rational(1));
    const Poly shifted_den = compose_affine(product_of_factors(others), pole, Rational(1));
    const auto series = series_quotient(shifted_num, shifted_den, mult);
    for (std::size_t i = 0; i < mult; ++i) {
      const std::size_t order = mult - i;
      if (!series[i].is_zero()) out.terms.push_back({pole, order, series[i]});
    }
  }
  // ascending order within a pole
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    auto end = it;
    while (end != out.terms.end() && end->pole == it->pole) ++end;
    std::reverse(it, end);
    it = end;
  }
  return out;
}

PartialFractions partial_fractions(const Poly& num, const Poly& den,
                                   std::span<const RootMultiplicity> den_factors) {
  check_factors(den_factors);
  const Poly product = product_of_factors(den_factors);
  if (den.is_zero() || monic(den) != product) {
    throw MathError(ErrorKind::InconsistentFactorization,
                    "declared factors multiply to " + product.pretty() + ", denominator is " + den.pretty());
  }
  return partial_fractions(num / den.leading(), den_factors);
}

Poly recombine(const PartialFractions& pf, std::span<const RootMultiplicity> den_factors) {
  const Poly den = product_of_factors(den_factors);
  Poly num = pf.polynomial_part * den;
  for (const auto& term : pf.terms) {
    Poly cofactor = Poly::constant(Rational(1));
    for (const auto& f : den_factors) {
      const std::size_t m = f.root == term.pole ? f.multiplicity - term.order : f.multiplicity;
      cofactor *= pow(Poly::linear_factor(f.root), static_cast<unsigned>(m));
    }
    num += term.coefficient * cofactor;
  }
  return num;
}

}  // namespace hgt
