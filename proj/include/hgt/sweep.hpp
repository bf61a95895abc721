#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hgt/heun.hpp"
#include "hgt/operator.hpp"
#include "hgt/rational.hpp"

namespace hgt {

/// One Heun-reducible configuration of sigma = x^2 - x, B = sigma,
/// A = alpha*x + beta, tau = t0 + t1*x and lambda.
struct SweepHit {
  Rational alpha;
  Rational beta;
  Rational t0;
  Rational t1;
  Rational lambda;
  OdeOperator2 reduced_operator;  // determinant triple divided by sigma^2
  HeunParameters params;
};

struct SweepResult {
  std::size_t candidates = 0;  // configurations examined
  std::vector<SweepHit> hits;  // lexicographic in (alpha, beta, t0, t1, lambda)
};

/// Distinct rationals p/q with |p| <= bound and 1 <= q <= bound, ascending.
std::vector<Rational> sweep_grid(unsigned bound);

/// Coefficients (ascending) of (A*b_bar - B*a_bar)/sigma for the sweep
/// family, written out as scalars so the sweep can prefilter cheaply.
std::array<Rational, 3> sweep_bracket_quotient(const Rational& alpha, const Rational& beta, const Rational& t0,
                                               const Rational& t1, const Rational& lambda);

/// Exhaustive exact sweep over the grid for all five parameters. Every hit
/// comes from the determinant path and a successful heun_reduce.
SweepResult heun_sweep(unsigned bound);

}  // namespace hgt
