#ifndef SNC_GALOIS_HPP
#define SNC_GALOIS_HPP

#include <cstdint>

#include "snc/configuration.hpp"
#include "snc/delta_complex.hpp"
#include "snc/galois_module.hpp"
#include "snc/homology.hpp"

namespace snc
{

/**
 * Γ over the degree-f extension F_f: one simplex per orbit of Frobenius^f
 * on the simplices of Γ over the algebraic closure.
 *
 * Quotient vertices are ordered by the smallest vertex of Γ_{X̄} in the
 * orbit; since Frobenius orbits are contiguous in that order this refines
 * the base order by component orbit position. Each simplex takes the id of
 * its first member. `projection` is σ from Γ_{X̄}, with sign the parity of
 * the permutation sorting the orbits of a simplex's vertices.
 */
struct ScalarExtension
{
    std::uint64_t degree = 1;
    DeltaComplex complex;
    ChainMap projection;
};

/// Throws ValidationError "not SNC after extension" when an orbit contains
/// two vertices of one simplex.
ScalarExtension extension_complex(const SncConfiguration& cfg, std::uint64_t f);

/// σ_{E/F}: Γ_{X⊗E} -> Γ_{X⊗F} for E of degree `upper` over F of degree
/// `lower`; `lower` must divide `upper`.
ChainMap extension_chain_map(const SncConfiguration& cfg, std::uint64_t upper, std::uint64_t lower);

struct NormMap
{
    ModuleMap map;
    Subgroup image;
};

/// H_a(Γ_{X⊗F_f}) -> H_a(Γ_X) induced by σ_{F_f/k}, and its image.
NormMap norm_map(const SncConfiguration& cfg, std::uint64_t f, Index degree,
                 Coefficients coefficients = Coefficients::integers());

/// Frobenius as a chain automorphism of Γ_{X̄}.
ChainMap frobenius_chain_map(const SncConfiguration& cfg);

/// H_a(Γ_{X̄}) with the induced Frobenius, of period the action's order.
GaloisModule frobenius_on_homology(const SncConfiguration& cfg, Index degree,
                                   Coefficients coefficients = Coefficients::integers());

/// Parity of the permutation sorting a sequence of distinct values.
int sorting_sign(std::vector<Index> values);

} // namespace snc

#endif
