#pragma once

#include <vector>

#include "gapvir/scalar.hpp"

namespace gapvir {

/// Dense matrix over exact rationals, row major.
using RationalMatrix = std::vector<std::vector<Scalar>>;

/// Basis of the right kernel {v : A v = 0}, computed by exact Gaussian
/// elimination. One vector per free column, in column order, with the free
/// coordinate normalized to 1. Deterministic.
std::vector<std::vector<Scalar>> kernel_basis(RationalMatrix a, std::size_t cols);

}  // namespace gapvir
