#pragma once

// Exact rational linear algebra for the brute-force oracles.

#include <optional>
#include <vector>

#include "idnf/rational.hpp"

namespace idnf {

using Matrix = std::vector<std::vector<Rational>>;  // row-major

std::size_t rank(Matrix m);

/// Some x with A x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b);

/// solve(a, b) for every b in rhs, sharing one elimination.
std::vector<std::optional<std::vector<Rational>>> solve_all(
    Matrix a, const std::vector<std::vector<Rational>>& rhs);

}  // namespace idnf
