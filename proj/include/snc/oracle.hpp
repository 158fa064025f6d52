#ifndef SNC_ORACLE_HPP
#define SNC_ORACLE_HPP

#include <cstdint>

#include "snc/delta_complex.hpp"

namespace snc
{

/// Largest complex (total simplex count) the oracle accepts.
inline constexpr Index oracle_size_limit = 1000;

/**
 * dim H_a(Γ; F_p) by row reduction over F_p on machine integers.
 *
 * Independent of the Smith normal form path: it reads only the facet lists
 * and never touches the big-integer matrices. Throws std::length_error above
 * `oracle_size_limit` simplices and std::invalid_argument for non-prime p.
 */
Index oracle_homology(const DeltaComplex& complex, Index degree, std::uint64_t p);

} // namespace snc

#endif
