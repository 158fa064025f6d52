#include "snc/homology.hpp"

#include <stdexcept>

#include "snc/error.hpp"

namespace snc
{

Coefficients Coefficients::modulo(std::uint64_t n)
{
    if (n < 2)
        throw std::invalid_argument("coefficient modulus must be at least 2");
    return {n};
}

std::string Coefficients::to_string() const
{
    return is_integral() ? std::string("z") : "z/" + std::to_string(modulus);
}

Coefficients Coefficients::parse(const std::string& text)
{
    if (text == "z" || text == "Z")
        return integers();
    if (text.size() > 2 && (text[0] == 'z' || text[0] == 'Z') && text[1] == '/') {
        std::size_t used = 0;
        unsigned long long n = 0;
        try {
            n = std::stoull(text.substr(2), &used);
        }
        catch (const std::exception&) {
            used = 0;
        }
        if (used == text.size() - 2)
            return modulo(n);
    }
    throw std::invalid_argument("coefficients must be 'z' or 'z/N', got '" + text + "'");
}

IntVector HomologyResult::coordinates(const IntVector& chain) const
{
    if (!basis)
        return IntVector(0);
    auto y = solve_integer(basis->lattice_snf, chain);
    if (!y)
        throw std::invalid_argument("chain is not a cycle");
    return basis->to_generators * *y;
}

namespace
{

HomologyResult compute(const DeltaComplex& complex, Index degree, Coefficients coefficients, bool reduced)
{
    HomologyResult out;
    out.degree = degree;
    out.coefficients = coefficients;
    out.reduced = reduced;

    const Index n = complex.count(degree);
    if (degree < 0 || n == 0) {
        out.representatives = IntMatrix(std::max<Index>(n, 0), 0);
        return out;
    }

    const IntMatrix down = degree == 0 ? (reduced ? complex.augmentation() : IntMatrix(0, n))
                                       : complex.boundary_matrix(degree);
    IntMatrix relations = complex.boundary_matrix(degree + 1);
    IntMatrix lattice;
    if (coefficients.is_integral()) {
        lattice = integer_kernel(down);
    }
    else {
        const Integer m = coefficients.modulus;
        const IntMatrix scaled = m * IntMatrix::Identity(down.rows(), down.rows());
        lattice = integer_kernel(hcat(down, scaled)).topRows(n);
        relations = hcat(relations, IntMatrix(m * IntMatrix::Identity(n, n)));
    }

    auto basis = std::make_shared<HomologyResult::Basis>();
    basis->lattice = lattice;
    basis->lattice_snf = smith_normal_form(lattice);

    const Index k = lattice.cols();
    IntMatrix coords(k, relations.cols());
    for (Index j = 0; j < relations.cols(); ++j) {
        auto y = solve_integer(basis->lattice_snf, IntVector(relations.col(j)));
        if (!y)
            throw std::logic_error("boundary does not lie in the cycle lattice");
        coords.col(j) = *y;
    }

    const auto snf = smith_normal_form(coords);
    std::vector<Index> kept;
    std::vector<Integer> orders;
    for (Index i = 0; i < k; ++i) {
        const Integer d = i < snf.rank ? snf.D(i, i) : Integer(0);
        if (d == 1)
            continue;
        kept.push_back(i);
        orders.push_back(d);
    }
    const auto g = static_cast<Index>(kept.size());
    const IntMatrix new_basis = lattice * snf.U_inverse;
    out.representatives.resize(n, g);
    basis->to_generators.resize(g, k);
    Index torsion = 0;
    for (Index j = 0; j < g; ++j) {
        out.representatives.col(j) = new_basis.col(kept[static_cast<std::size_t>(j)]);
        basis->to_generators.row(j) = snf.U.row(kept[static_cast<std::size_t>(j)]);
        if (orders[static_cast<std::size_t>(j)] != 0)
            ++torsion;
    }
    if (!coefficients.is_integral()) {
        const Integer m = coefficients.modulus;
        out.representatives = out.representatives.unaryExpr([&](const Integer& x) { return floor_mod(x, m); });
    }
    IntMatrix group_relations = IntMatrix::Zero(g, torsion);
    for (Index j = 0; j < torsion; ++j)
        group_relations(j, j) = orders[static_cast<std::size_t>(j)];
    out.group = FgAbelianGroup(g, group_relations);
    out.basis = std::move(basis);
    return out;
}

} // namespace

HomologyResult homology_group(const DeltaComplex& complex, Index degree, Coefficients coefficients)
{
    return compute(complex, degree, coefficients, false);
}

HomologyResult reduced_homology_group(const DeltaComplex& complex, Index degree, Coefficients coefficients)
{
    return compute(complex, degree, coefficients, true);
}

ModuleMap induced_map(const ChainMap& f, const HomologyResult& source, const HomologyResult& target)
{
    if (source.degree != target.degree || !(source.coefficients == target.coefficients))
        throw std::invalid_argument("induced_map: homology degrees or coefficients differ");
    const IntMatrix images = f.matrix(source.degree) * source.representatives;
    IntMatrix m(target.group.generator_count(), images.cols());
    for (Index j = 0; j < images.cols(); ++j)
        m.col(j) = target.coordinates(images.col(j));
    return ModuleMap(source.group, target.group, m);
}

ModuleMap induced_map(const ChainMap& f, Index degree, Coefficients coefficients)
{
    return induced_map(f, homology_group(f.source(), degree, coefficients),
                       homology_group(f.target(), degree, coefficients));
}

Index fp_dimension(const DeltaComplex& complex, Index degree, std::uint64_t p)
{
    auto divisible = [p](const GroupInvariants& g) {
        Index count = 0;
        for (const auto& d : g.torsion)
            if (d % p == 0)
                ++count;
        return count;
    };
    const auto top = homology_group(complex, degree).group.invariants();
    const auto below = homology_group(complex, degree - 1).group.invariants();
    return top.free_rank + divisible(top) + divisible(below);
}

} // namespace snc
