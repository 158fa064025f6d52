#include "snc/galois_module.hpp"

#include <numeric>

#include "snc/error.hpp"

namespace snc
{

GaloisModule::GaloisModule(FgAbelianGroup group, IntMatrix frobenius, std::uint64_t order)
    : group_(group), order_(order)
{
    if (order_ == 0)
        throw ValidationError("Frobenius order must be positive");
    frobenius_ = ModuleMap(group_, group_, std::move(frobenius));
    const IntMatrix power = matrix_power(frobenius_.matrix(), order_);
    const Index n = group_.generator_count();
    for (Index j = 0; j < n; ++j) {
        IntVector e = IntVector::Zero(n);
        e(j) = 1;
        if (!group_.equal(power.col(j), e))
            throw ValidationError("Frobenius is not an automorphism of order dividing " +
                                  std::to_string(order_) + " (generator " + std::to_string(j) +
                                  " is moved by its " + std::to_string(order_) + "-th power)");
    }
}

GaloisModule GaloisModule::trivial_action(const FgAbelianGroup& group)
{
    const Index n = group.generator_count();
    return GaloisModule(group, IntMatrix::Identity(n, n), 1);
}

GaloisModule GaloisModule::power(std::uint64_t f) const
{
    const std::uint64_t order = order_ / std::gcd(order_, f == 0 ? order_ : f);
    return GaloisModule(group_, matrix_power(frobenius_.matrix(), f), order);
}

bool GaloisModule::acts_trivially() const
{
    return frobenius_.equals(ModuleMap::identity(group_));
}

bool is_equivariant(const ModuleMap& f, const GaloisModule& source, const GaloisModule& target)
{
    const IntMatrix lhs = target.frobenius_matrix() * f.matrix();
    const IntMatrix rhs = f.matrix() * source.frobenius_matrix();
    for (Index j = 0; j < lhs.cols(); ++j)
        if (!target.group().equal(lhs.col(j), rhs.col(j)))
            return false;
    return true;
}

Quotient coinvariants(const GaloisModule& module)
{
    const Index n = module.group().generator_count();
    const IntMatrix difference = module.frobenius_matrix() - IntMatrix::Identity(n, n);
    return cokernel(ModuleMap(module.group(), module.group(), difference));
}

GaloisModule cokernel_module(const GaloisModule& target, const ModuleMap& f)
{
    const Quotient q = cokernel(f);
    return GaloisModule(q.group, target.frobenius_matrix(), target.order());
}

GaloisModule quotient_module(const GaloisModule& module, const Subgroup& stable)
{
    return cokernel_module(module, stable.inclusion);
}

GaloisModule restrict_module(const GaloisModule& module, const Subgroup& stable)
{
    const IntMatrix& gens = stable.inclusion.matrix();
    const Index s = gens.cols();
    const auto snf = smith_normal_form(hcat(gens, module.group().relations()));
    const IntMatrix images = module.frobenius_matrix() * gens;
    IntMatrix restricted(s, s);
    for (Index j = 0; j < s; ++j) {
        auto solution = solve_integer(snf, IntVector(images.col(j)));
        if (!solution)
            throw ValidationError("subgroup is not stable under Frobenius");
        restricted.col(j) = solution->head(s);
    }
    return GaloisModule(stable.group, restricted, module.order());
}

} // namespace snc
