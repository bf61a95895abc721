#include "hgt/sweep.hpp"

#include <array>
#include <set>

#include "hgt/error.hpp"
#include "hgt/transform.hpp"

namespace hgt {

std::vector<Rational> sweep_grid(unsigned bound) {
  std::set<Rational> values;
  const auto b = static_cast<std::int64_t>(bound);
  for (std::int64_t q = 1; q <= b; ++q) {
    for (std::int64_t p = -b; p <= b; ++p) values.insert(Rational(p, q));
  }
  return {values.begin(), values.end()};
}

namespace {

bool is_rational_square(const Rational& r) {
  if (r.sign() < 0) return false;
  return mpz_perfect_square_p(r.numerator().get_mpz_t()) && mpz_perfect_square_p(r.denominator().get_mpz_t());
}

}  // namespace

std::array<Rational, 3> sweep_bracket_quotient(const Rational& alpha, const Rational& beta, const Rational& t0,
                                               const Rational& t1, const Rational& lambda) {
  const Rational two(2);
  return {beta * beta - beta * t0 - beta,
          two * alpha * beta - alpha * t0 - beta * t1 + two * beta - lambda,
          alpha * alpha - alpha * t1 + alpha + lambda};
}

namespace {

// After cancelling sigma^2 the leading coefficient is sigma*P, so a Heun cubic
// needs deg P = 1, or deg P = 2 with a rational root shared by the other
// coefficients.
bool may_reduce(const std::array<Rational, 3>& p) {
  if (p[2].is_zero()) return !p[1].is_zero();
  return is_rational_square(p[1] * p[1] - Rational(4) * p[2] * p[0]);
}

}  // namespace

SweepResult heun_sweep(unsigned bound) {
  const std::vector<Rational> grid = sweep_grid(bound);
  const Poly sigma({Rational(0), Rational(-1), Rational(1)});
  const Poly sigma2 = sigma * sigma;

  SweepResult result;
  for (const auto& alpha : grid) {
    for (const auto& beta : grid) {
      const Poly a({beta, alpha});
      for (const auto& t0 : grid) {
        for (const auto& t1 : grid) {
          if (t1.is_zero()) continue;
          const Poly tau({t0, t1});
          for (const auto& lambda : grid) {
            ++result.candidates;
            if (!may_reduce(sweep_bracket_quotient(alpha, beta, t0, t1, lambda))) continue;
            const HypergeomEq eq(sigma, tau, lambda);
            const LinearTransform t(a, sigma);
            try {
              // B = sigma: sigma^2 divides the whole determinant triple exactly.
              const OdeOperator2 det = expand_determinant(eq, t);
              const OdeOperator2 reduced(divide_exact(det.c2(), sigma2), divide_exact(det.c1(), sigma2),
                                         divide_exact(det.c0(), sigma2));
              HeunParameters params = heun_reduce(reduced);
              result.hits.push_back({alpha, beta, t0, t1, lambda, reduced, std::move(params)});
            } catch (const MathError&) {
              // not reducible for this configuration
            }
          }
        }
      }
    }
  }
  return result;
}

}  // namespace hgt
