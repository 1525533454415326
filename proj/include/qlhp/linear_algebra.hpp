#pragma once

#include "qlhp/rational.hpp"

#include <optional>
#include <vector>

namespace qlhp {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves matrix * x = rhs exactly by Gauss-Jordan elimination. Free
/// variables are set to zero. Returns nullopt when the system is
/// inconsistent. `matrix` is row-major with rhs.size() rows.
std::optional<std::vector<Rational>> solve_linear_system(RationalMatrix matrix, std::vector<Rational> rhs,
                                                         std::size_t columns);

std::size_t rank(RationalMatrix matrix);

}  // namespace qlhp
