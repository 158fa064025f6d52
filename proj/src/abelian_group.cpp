#include "snc/abelian_group.hpp"

#include <sstream>
#include <stdexcept>

#include "snc/error.hpp"

namespace snc
{

namespace
{

IntMatrix diagonal_relations(const std::vector<Integer>& orders)
{
    const auto n = static_cast<Index>(orders.size());
    IntMatrix r = IntMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i)
        r(i, i) = orders[static_cast<std::size_t>(i)];
    return r;
}

} // namespace

Integer GroupInvariants::order() const
{
    if (free_rank > 0)
        throw std::logic_error("order of an infinite group");
    Integer n = 1;
    for (const auto& d : torsion)
        n *= d;
    return n;
}

std::string GroupInvariants::to_string() const
{
    if (is_trivial())
        return "0";
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (!first)
            out << " ⊕ ";
        first = false;
    };
    if (free_rank == 1) {
        sep();
        out << "Z";
    }
    else if (free_rank > 1) {
        sep();
        out << "Z^" << free_rank;
    }
    for (const auto& d : torsion) {
        sep();
        out << "Z/" << d;
    }
    return out.str();
}

FgAbelianGroup::FgAbelianGroup() : FgAbelianGroup(0, IntMatrix(0, 0)) {}

FgAbelianGroup::FgAbelianGroup(Index generators, IntMatrix relations)
    : generators_(generators), relations_(std::move(relations))
{
    if (generators_ < 0)
        throw std::invalid_argument("negative generator count");
    if (relations_.rows() != generators_) {
        if (relations_.cols() != 0)
            throw ValidationError("relation vectors have length " + std::to_string(relations_.rows()) +
                                  ", expected " + std::to_string(generators_));
        relations_.resize(generators_, 0);
    }
    snf_ = std::make_shared<const SmithDecomposition<Integer>>(smith_normal_form(relations_));
    for (Index i = 0; i < generators_; ++i) {
        if (i < snf_->rank) {
            const Integer& d = snf_->D(i, i);
            if (d == 1)
                continue;
            invariants_.torsion.push_back(d);
            summand_orders_.push_back(d);
        }
        else {
            ++invariants_.free_rank;
            summand_orders_.push_back(0);
        }
        summand_index_.push_back(i);
    }
}

FgAbelianGroup FgAbelianGroup::free(Index rank) { return FgAbelianGroup(rank, IntMatrix(rank, 0)); }

FgAbelianGroup FgAbelianGroup::cyclic(const Integer& order)
{
    IntMatrix r(1, 1);
    r(0, 0) = order;
    return FgAbelianGroup(1, r);
}

FgAbelianGroup FgAbelianGroup::from_invariants(const GroupInvariants& invariants)
{
    const auto t = static_cast<Index>(invariants.torsion.size());
    IntMatrix r = IntMatrix::Zero(t + invariants.free_rank, t);
    r.topRows(t) = diagonal_relations(invariants.torsion);
    return FgAbelianGroup(t + invariants.free_rank, r);
}

bool FgAbelianGroup::is_zero(const IntVector& element) const
{
    if (element.size() != generators_)
        throw std::invalid_argument("element has wrong length");
    const IntVector y = snf_->U * element;
    for (Index i = 0; i < generators_; ++i) {
        if (i < snf_->rank) {
            if (y(i) % snf_->D(i, i) != 0)
                return false;
        }
        else if (y(i) != 0) {
            return false;
        }
    }
    return true;
}

IntVector FgAbelianGroup::reduce(const IntVector& element) const
{
    if (element.size() != generators_)
        throw std::invalid_argument("element has wrong length");
    const IntVector y = snf_->U * element;
    IntVector out(static_cast<Index>(summand_index_.size()));
    for (std::size_t k = 0; k < summand_index_.size(); ++k) {
        const Integer& y_k = y(summand_index_[k]);
        const Integer& d = summand_orders_[k];
        out(static_cast<Index>(k)) = d == 0 ? y_k : floor_mod(y_k, d);
    }
    return out;
}

IntMatrix FgAbelianGroup::summand_generators() const
{
    IntMatrix out(generators_, static_cast<Index>(summand_index_.size()));
    for (std::size_t k = 0; k < summand_index_.size(); ++k)
        out.col(static_cast<Index>(k)) = snf_->U_inverse.col(summand_index_[k]);
    return out;
}

ModuleMap::ModuleMap(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
    if (matrix_.rows() != target_.generator_count() || matrix_.cols() != source_.generator_count()) {
        if (matrix_.size() == 0 && (source_.generator_count() == 0 || target_.generator_count() == 0))
            matrix_ = IntMatrix::Zero(target_.generator_count(), source_.generator_count());
        else
            throw WellDefinednessError("map matrix is " + std::to_string(matrix_.rows()) + "x" +
                                       std::to_string(matrix_.cols()) + ", expected " +
                                       std::to_string(target_.generator_count()) + "x" +
                                       std::to_string(source_.generator_count()));
    }
    const IntMatrix images = matrix_ * source_.relations();
    for (Index j = 0; j < images.cols(); ++j) {
        if (!target_.is_zero(images.col(j)))
            throw WellDefinednessError("source relation " + std::to_string(j) +
                                       " does not map into the target relations");
    }
}

ModuleMap ModuleMap::identity(const FgAbelianGroup& group)
{
    const Index n = group.generator_count();
    return ModuleMap(group, group, IntMatrix::Identity(n, n));
}

ModuleMap ModuleMap::zero(const FgAbelianGroup& source, const FgAbelianGroup& target)
{
    return ModuleMap(source, target, IntMatrix::Zero(target.generator_count(), source.generator_count()));
}

bool ModuleMap::equals(const ModuleMap& other) const
{
    if (matrix_.rows() != other.matrix_.rows() || matrix_.cols() != other.matrix_.cols())
        return false;
    for (Index j = 0; j < matrix_.cols(); ++j)
        if (!target_.equal(matrix_.col(j), other.matrix_.col(j)))
            return false;
    return true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f)
{
    if (f.target().generator_count() != g.source().generator_count())
        throw std::invalid_argument("compose: generator counts do not match");
    return ModuleMap(f.source(), g.target(), g.matrix() * f.matrix());
}

GroupInvariants normalize(const FgAbelianGroup& group) { return group.invariants(); }

Quotient cokernel(const ModuleMap& f)
{
    const FgAbelianGroup& target = f.target();
    FgAbelianGroup q(target.generator_count(), hcat(target.relations(), f.matrix()));
    ModuleMap projection(target, q,
                         IntMatrix::Identity(target.generator_count(), target.generator_count()));
    return {std::move(q), std::move(projection)};
}

Subgroup subgroup_generated_by(const FgAbelianGroup& group, const IntMatrix& generators)
{
    if (generators.rows() != group.generator_count())
        throw std::invalid_argument("subgroup generators have wrong length");
    const Index s = generators.cols();
    const IntMatrix kernel = integer_kernel(hcat(generators, group.relations()));
    FgAbelianGroup h(s, kernel.topRows(s));
    ModuleMap inclusion(h, group, generators);
    return {std::move(h), std::move(inclusion)};
}

Subgroup image_subgroup(const ModuleMap& f) { return subgroup_generated_by(f.target(), f.matrix()); }

Subgroup kernel_subgroup(const ModuleMap& f)
{
    const Index s = f.source().generator_count();
    const IntMatrix kernel = integer_kernel(hcat(f.matrix(), f.target().relations()));
    return subgroup_generated_by(f.source(), kernel.topRows(s));
}

bool is_injective(const ModuleMap& f) { return kernel_subgroup(f).group.is_trivial(); }

bool is_surjective(const ModuleMap& f) { return cokernel(f).group.is_trivial(); }

namespace
{

Subgroup diagonal_subgroup(const FgAbelianGroup& group, const std::vector<IntVector>& generators,
                           const std::vector<Integer>& orders)
{
    FgAbelianGroup h(static_cast<Index>(orders.size()), diagonal_relations(orders));
    ModuleMap inclusion(h, group, matrix_from_columns(generators, group.generator_count()));
    return {std::move(h), std::move(inclusion)};
}

} // namespace

TorsionParts torsion_and_primary(const FgAbelianGroup& group, std::uint64_t prime)
{
    if (!is_prime(prime))
        throw std::invalid_argument(std::to_string(prime) + " is not prime");
    const IntMatrix basis = group.summand_generators();
    const auto& orders = group.summand_orders();
    std::vector<IntVector> torsion_gens, primary_gens;
    std::vector<Integer> torsion_orders, primary_orders;
    for (std::size_t k = 0; k < orders.size(); ++k) {
        const Integer& d = orders[k];
        if (d == 0)
            continue;
        const IntVector u = basis.col(static_cast<Index>(k));
        torsion_gens.push_back(u);
        torsion_orders.push_back(d);
        const Integer p = prime_power_part(d, prime);
        if (p > 1) {
            primary_gens.push_back(IntVector(Integer(d / p) * u));
            primary_orders.push_back(p);
        }
    }
    return {diagonal_subgroup(group, torsion_gens, torsion_orders),
            diagonal_subgroup(group, primary_gens, primary_orders)};
}

Subgroup prime_to_part(const FgAbelianGroup& group, std::uint64_t prime)
{
    if (!is_prime(prime))
        throw std::invalid_argument(std::to_string(prime) + " is not prime");
    const IntMatrix basis = group.summand_generators();
    const auto& orders = group.summand_orders();
    std::vector<IntVector> gens;
    std::vector<Integer> part_orders;
    for (std::size_t k = 0; k < orders.size(); ++k) {
        const Integer& d = orders[k];
        if (d == 0)
            continue;
        const Integer p = prime_power_part(d, prime);
        if (d / p > 1) {
            gens.push_back(IntVector(p * basis.col(static_cast<Index>(k))));
            part_orders.push_back(d / p);
        }
    }
    return diagonal_subgroup(group, gens, part_orders);
}

} // namespace snc
