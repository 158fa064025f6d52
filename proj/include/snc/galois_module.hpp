#ifndef SNC_GALOIS_MODULE_HPP
#define SNC_GALOIS_MODULE_HPP

#include <cstdint>

#include "snc/abelian_group.hpp"

namespace snc
{

/**
 * Finitely generated abelian group with a Frobenius automorphism.
 *
 * `order` is a period of the action: Frobenius^order must be the identity on
 * the group, which also makes Frobenius invertible. Construction throws
 * ValidationError otherwise.
 */
class GaloisModule
{
public:
    GaloisModule() = default;
    GaloisModule(FgAbelianGroup group, IntMatrix frobenius, std::uint64_t order);

    static GaloisModule trivial_action(const FgAbelianGroup& group);

    const FgAbelianGroup& group() const { return group_; }
    const IntMatrix& frobenius_matrix() const { return frobenius_.matrix(); }
    const ModuleMap& frobenius() const { return frobenius_; }
    std::uint64_t order() const { return order_; }

    /// Same group with Frobenius replaced by its f-th power (restriction to
    /// the degree-f extension).
    GaloisModule power(std::uint64_t f) const;

    bool acts_trivially() const;

private:
    FgAbelianGroup group_;
    ModuleMap frobenius_;
    std::uint64_t order_ = 1;
};

/// Does `f` intertwine the Frobenius actions of `source` and `target`?
bool is_equivariant(const ModuleMap& f, const GaloisModule& source, const GaloisModule& target);

/// M / (Frobenius - id) M with its projection.
Quotient coinvariants(const GaloisModule& module);

/// Cokernel of an equivariant map into `target`, with the induced action.
GaloisModule cokernel_module(const GaloisModule& target, const ModuleMap& f);

/// Quotient of `module` by a Frobenius-stable subgroup.
GaloisModule quotient_module(const GaloisModule& module, const Subgroup& stable);

/// Action restricted to a Frobenius-stable subgroup, expressed on the
/// subgroup's generators. Throws ValidationError when the subgroup is not stable.
GaloisModule restrict_module(const GaloisModule& module, const Subgroup& stable);

} // namespace snc

#endif
