#pragma once

#include <cstddef>
#include <random>

#include "boolcum/matrix.hpp"
#include "boolcum/scalar.hpp"
#include "boolcum/scalar_boolean.hpp"

namespace boolcum {

using Rng = std::mt19937_64;

/// p/q with p in [-6, 6] and q in [1, 4].
Scalar random_scalar(Rng& rng);
MatrixB random_matrix(Rng& rng, std::size_t dim);
MomentSeq random_moments(Rng& rng, std::size_t order);
/// Uniform integer in [lo, hi].
std::size_t random_index(Rng& rng, std::size_t lo, std::size_t hi);

}  // namespace boolcum
