#ifndef SNC_RANDOM_HPP
#define SNC_RANDOM_HPP

#include <cstdint>
#include <random>

#include "snc/configuration.hpp"
#include "snc/delta_complex.hpp"

namespace snc
{

using Rng = std::mt19937_64;

/// Random Δ-complex with 1..max_vertices vertices and dimension at most
/// max_dimension (<= 2). Parallel edges and triangles occur.
DeltaComplex random_delta_complex(Rng& rng, Index max_vertices, Index max_dimension);

/**
 * Random configuration over the algebraic closure with an admissible
 * Frobenius of order `order`.
 *
 * Base vertices get orbits of size dividing `order`; strata are orbits of
 * random vertex sets meeting every base orbit at most once, closed under
 * faces. Depth is at most 4.
 */
SncConfiguration random_equivariant_configuration(Rng& rng, std::uint64_t order, Index max_base_vertices);

/// Random integer matrix with entries in [-bound, bound].
IntMatrix random_matrix(Rng& rng, Index rows, Index cols, int bound);

} // namespace snc

#endif
