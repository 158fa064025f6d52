#ifndef SNC_ABELIAN_GROUP_HPP
#define SNC_ABELIAN_GROUP_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "snc/integer.hpp"
#include "snc/smith.hpp"

namespace snc
{

/// Isomorphism type of a finitely generated abelian group:
/// Z^free_rank + Z/d_1 + ... with 1 < d_1 | d_2 | ...
struct GroupInvariants
{
    std::vector<Integer> torsion;
    Index free_rank = 0;

    bool is_trivial() const { return torsion.empty() && free_rank == 0; }
    bool is_finite() const { return free_rank == 0; }
    /// Order of a finite group; throws for infinite groups.
    Integer order() const;
    /// "Z^r ⊕ Z/d1 ⊕ ..." or "0".
    std::string to_string() const;

    friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

/**
 * Finitely generated abelian group Z^generators / span(relations).
 *
 * Relations are stored as columns. The Smith decomposition of the relation
 * matrix is computed once at construction and shared between copies.
 */
class FgAbelianGroup
{
public:
    FgAbelianGroup();
    FgAbelianGroup(Index generators, IntMatrix relations);

    static FgAbelianGroup free(Index rank);
    static FgAbelianGroup cyclic(const Integer& order);
    static FgAbelianGroup from_invariants(const GroupInvariants& invariants);

    Index generator_count() const { return generators_; }
    const IntMatrix& relations() const { return relations_; }
    const GroupInvariants& invariants() const { return invariants_; }

    bool is_trivial() const { return invariants_.is_trivial(); }
    bool is_zero(const IntVector& element) const;
    bool equal(const IntVector& a, const IntVector& b) const { return is_zero(a - b); }

    /// Canonical coordinates in the cyclic decomposition: torsion summands
    /// first (reduced into [0, d)), then free summands.
    IntVector reduce(const IntVector& element) const;

    /// Generators (as vectors over the presentation generators) of the
    /// non-trivial cyclic summands, ordered as in `reduce`.
    IntMatrix summand_generators() const;

    /// Order of each non-trivial cyclic summand; 0 marks a free summand.
    const std::vector<Integer>& summand_orders() const { return summand_orders_; }

private:
    Index generators_ = 0;
    IntMatrix relations_;
    std::shared_ptr<const SmithDecomposition<Integer>> snf_;
    GroupInvariants invariants_;
    std::vector<Index> summand_index_;
    std::vector<Integer> summand_orders_;
};

/// Homomorphism given by its action on generators (target gens x source gens).
class ModuleMap
{
public:
    ModuleMap() = default;
    /// Throws WellDefinednessError when a source relation does not map into
    /// the target's relation lattice.
    ModuleMap(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix);

    static ModuleMap identity(const FgAbelianGroup& group);
    static ModuleMap zero(const FgAbelianGroup& source, const FgAbelianGroup& target);

    const FgAbelianGroup& source() const { return source_; }
    const FgAbelianGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    IntVector apply(const IntVector& element) const { return matrix_ * element; }

    /// Same generator counts and equal images of every source generator.
    bool equals(const ModuleMap& other) const;

private:
    FgAbelianGroup source_;
    FgAbelianGroup target_;
    IntMatrix matrix_;
};

/// g ∘ f
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

struct Quotient
{
    FgAbelianGroup group;
    ModuleMap projection;
};

struct Subgroup
{
    FgAbelianGroup group;
    ModuleMap inclusion;
};

GroupInvariants normalize(const FgAbelianGroup& group);

Quotient cokernel(const ModuleMap& f);

/// Im(f) as an abstract group; its generators are the images of the source generators.
Subgroup image_subgroup(const ModuleMap& f);

/// Subgroup of `group` generated by the columns of `generators`.
Subgroup subgroup_generated_by(const FgAbelianGroup& group, const IntMatrix& generators);

Subgroup kernel_subgroup(const ModuleMap& f);

bool is_injective(const ModuleMap& f);
bool is_surjective(const ModuleMap& f);

struct TorsionParts
{
    Subgroup torsion;
    Subgroup primary;
};

/// Torsion subgroup and its `prime`-primary component. Throws
/// std::invalid_argument when `prime` is not prime.
TorsionParts torsion_and_primary(const FgAbelianGroup& group, std::uint64_t prime);

/// Torsion elements of order prime to `prime`.
Subgroup prime_to_part(const FgAbelianGroup& group, std::uint64_t prime);

} // namespace snc

#endif
