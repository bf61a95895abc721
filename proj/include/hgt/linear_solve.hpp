#pragma once

#include <optional>
#include <vector>

#include "hgt/rational.hpp"

namespace hgt {

/// Dense row-major matrix of exact rationals.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves matrix * x = rhs exactly by Gauss-Jordan elimination. Returns
/// std::nullopt unless the system (possibly overdetermined) is consistent
/// with a unique solution.
std::optional<std::vector<Rational>> solve_unique(RationalMatrix matrix, std::vector<Rational> rhs);

}  // namespace hgt
