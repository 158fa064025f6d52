#ifndef SNC_HOMOLOGY_HPP
#define SNC_HOMOLOGY_HPP

#include <cstdint>
#include <memory>
#include <string>

#include "snc/abelian_group.hpp"
#include "snc/delta_complex.hpp"

namespace snc
{

/// Coefficient ring: Z (modulus 0) or Z/n (modulus n >= 2).
struct Coefficients
{
    std::uint64_t modulus = 0;

    static Coefficients integers() { return {0}; }
    static Coefficients modulo(std::uint64_t n);

    bool is_integral() const { return modulus == 0; }
    /// "z" or "z/N"
    std::string to_string() const;
    /// Parses "z", "Z", "z/N".
    static Coefficients parse(const std::string& text);

    friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

/**
 * H_a of a Δ-complex with generators given by explicit representative cycles.
 *
 * `group` is presented on the columns of `representatives` (one chain per
 * column): torsion generators first with their orders as relations, free
 * generators after. `coordinates` expresses an arbitrary cycle in these
 * generators.
 */
class HomologyResult
{
public:
    Index degree = 0;
    Coefficients coefficients;
    bool reduced = false;
    FgAbelianGroup group;
    IntMatrix representatives;

    /// Coordinates of a cycle in the generators of `group`. Throws
    /// std::invalid_argument when `chain` is not a cycle.
    IntVector coordinates(const IntVector& chain) const;

    // Internal state for `coordinates`: cycle lattice basis, its Smith
    // decomposition, and the change of basis onto the kept generators.
    struct Basis
    {
        IntMatrix lattice;
        SmithDecomposition<Integer> lattice_snf;
        IntMatrix to_generators;
    };
    std::shared_ptr<const Basis> basis;
};

/// H_a(Γ; C). Degrees above the dimension give the trivial group.
HomologyResult homology_group(const DeltaComplex& complex, Index degree,
                              Coefficients coefficients = Coefficients::integers());

/// Reduced homology (augmented chain complex).
HomologyResult reduced_homology_group(const DeltaComplex& complex, Index degree,
                                      Coefficients coefficients = Coefficients::integers());

/// Map on H_a induced by a chain map, on the representative generators.
ModuleMap induced_map(const ChainMap& f, Index degree, Coefficients coefficients = Coefficients::integers());

/// Same, reusing already computed homology of source and target.
ModuleMap induced_map(const ChainMap& f, const HomologyResult& source, const HomologyResult& target);

/// dim H_a(Γ; F_p) from the integral homology by universal coefficients:
/// free rank of H_a plus the invariant factors of H_a and H_{a-1} divisible by p.
Index fp_dimension(const DeltaComplex& complex, Index degree, std::uint64_t p);

} // namespace snc

#endif
