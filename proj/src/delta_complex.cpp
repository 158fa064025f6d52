#include "snc/delta_complex.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "snc/error.hpp"

namespace snc
{

namespace
{

const std::vector<Simplex> no_simplices;

} // namespace

Index DeltaComplex::add_vertex(std::string id)
{
    if (simplices_.empty())
        simplices_.emplace_back();
    auto& vertices = simplices_[0];
    const auto index = static_cast<Index>(vertices.size());
    vertices.push_back({std::move(id), {index}, {}});
    return index;
}

Index DeltaComplex::add(std::string id, std::vector<Index> vertices, std::vector<Index> facets)
{
    const auto a = static_cast<Index>(vertices.size()) - 1;
    if (a < 1)
        throw ValidationError("simplex '" + id + "' needs at least two vertices (use add_vertex)");
    if (dimension() < a - 1)
        throw ValidationError("simplex '" + id + "' added before any simplex of dimension " +
                              std::to_string(a - 1));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0 || vertices[i] >= count(0))
            throw ValidationError("simplex '" + id + "' has an unknown vertex");
        if (i > 0 && vertices[i] <= vertices[i - 1])
            throw ValidationError("simplex '" + id + "' vertices are not strictly increasing");
    }
    if (a == 1 && facets.empty())
        facets = {vertices[1], vertices[0]};
    if (static_cast<Index>(facets.size()) != a + 1)
        throw ValidationError("simplex '" + id + "' has " + std::to_string(facets.size()) + " facets, expected " +
                              std::to_string(a + 1));
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (facets[i] < 0 || facets[i] >= count(a - 1))
            throw ValidationError("simplex '" + id + "' has an unknown facet");
        std::vector<Index> expected = vertices;
        expected.erase(expected.begin() + static_cast<std::ptrdiff_t>(i));
        if (simplex(a - 1, facets[i]).vertices != expected)
            throw ValidationError("facet " + std::to_string(i) + " of simplex '" + id +
                                  "' does not omit exactly vertex position " + std::to_string(i));
    }
    if (dimension() < a)
        simplices_.emplace_back();
    auto& list = simplices_[static_cast<std::size_t>(a)];
    list.push_back({std::move(id), std::move(vertices), std::move(facets)});
    return static_cast<Index>(list.size()) - 1;
}

Index DeltaComplex::count(Index a) const { return static_cast<Index>(simplices(a).size()); }

const std::vector<Simplex>& DeltaComplex::simplices(Index a) const
{
    if (a < 0 || a > dimension())
        return no_simplices;
    return simplices_[static_cast<std::size_t>(a)];
}

std::optional<Index> DeltaComplex::find(Index a, const std::string& id) const
{
    const auto& list = simplices(a);
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i].id == id)
            return static_cast<Index>(i);
    return std::nullopt;
}

IntMatrix DeltaComplex::boundary_matrix(Index a) const
{
    if (a <= 0)
        return IntMatrix::Zero(0, count(0));
    IntMatrix b = IntMatrix::Zero(count(a - 1), count(a));
    const auto& list = simplices(a);
    for (std::size_t j = 0; j < list.size(); ++j) {
        const auto& facets = list[j].facets;
        for (std::size_t i = 0; i < facets.size(); ++i)
            b(facets[i], static_cast<Index>(j)) += facet_sign(i);
    }
    return b;
}

IntMatrix DeltaComplex::augmentation() const { return IntMatrix::Ones(1, count(0)); }

Integer DeltaComplex::euler_characteristic() const
{
    Integer chi = 0;
    for (Index a = 0; a <= dimension(); ++a)
        chi += (a % 2 == 0 ? 1 : -1) * count(a);
    return chi;
}

std::vector<Index> DeltaComplex::counts() const
{
    std::vector<Index> out;
    for (Index a = 0; a <= dimension(); ++a)
        out.push_back(count(a));
    return out;
}

bool operator==(const Simplex& a, const Simplex& b)
{
    return a.id == b.id && a.vertices == b.vertices && a.facets == b.facets;
}

bool operator==(const DeltaComplex& a, const DeltaComplex& b) { return a.simplices_ == b.simplices_; }

bool same_structure(const DeltaComplex& a, const DeltaComplex& b)
{
    if (a.dimension() != b.dimension())
        return false;
    for (Index d = 0; d <= a.dimension(); ++d) {
        if (a.count(d) != b.count(d))
            return false;
        for (Index i = 0; i < a.count(d); ++i) {
            if (a.simplex(d, i).vertices != b.simplex(d, i).vertices ||
                a.simplex(d, i).facets != b.simplex(d, i).facets)
                return false;
        }
    }
    return true;
}

ChainMap::ChainMap(DeltaComplex source, DeltaComplex target, std::vector<std::vector<SignedSimplex>> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
{
    images_.resize(static_cast<std::size_t>(std::max<Index>(source_.dimension() + 1, 0)));
    for (Index a = 0; a <= source_.dimension(); ++a) {
        const auto& row = images_[static_cast<std::size_t>(a)];
        if (static_cast<Index>(row.size()) != source_.count(a))
            throw ValidationError("chain map has " + std::to_string(row.size()) + " images in degree " +
                                  std::to_string(a) + ", expected " + std::to_string(source_.count(a)));
        for (const auto& im : row)
            if (im.index < 0 || im.index >= target_.count(a) || (im.sign != 1 && im.sign != -1))
                throw ValidationError("chain map image out of range in degree " + std::to_string(a));
    }
    for (Index a = 1; a <= source_.dimension(); ++a) {
        const IntMatrix lhs = target_.boundary_matrix(a) * matrix(a);
        const IntMatrix rhs = matrix(a - 1) * source_.boundary_matrix(a);
        if (lhs != rhs)
            throw ValidationError("chain map does not commute with the boundary in degree " + std::to_string(a));
    }
}

ChainMap ChainMap::identity(const DeltaComplex& complex)
{
    std::vector<std::vector<SignedSimplex>> images;
    for (Index a = 0; a <= complex.dimension(); ++a) {
        auto& row = images.emplace_back();
        for (Index i = 0; i < complex.count(a); ++i)
            row.push_back({i, 1});
    }
    return ChainMap(complex, complex, std::move(images));
}

IntMatrix ChainMap::matrix(Index a) const
{
    IntMatrix m = IntMatrix::Zero(target_.count(a), source_.count(a));
    if (a < 0 || a > source_.dimension())
        return m;
    const auto& row = images_[static_cast<std::size_t>(a)];
    for (std::size_t i = 0; i < row.size(); ++i)
        m(row[i].index, static_cast<Index>(i)) = row[i].sign;
    return m;
}

bool operator==(const ChainMap& a, const ChainMap& b)
{
    return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
}

ChainMap compose(const ChainMap& g, const ChainMap& f)
{
    if (!(f.target() == g.source()))
        throw ValidationError("compose: chain maps are not composable");
    std::vector<std::vector<SignedSimplex>> images;
    for (Index a = 0; a <= f.source().dimension(); ++a) {
        auto& row = images.emplace_back();
        for (Index i = 0; i < f.source().count(a); ++i) {
            const auto& first = f.image(a, i);
            const auto& second = g.image(a, first.index);
            row.push_back({second.index, first.sign * second.sign});
        }
    }
    return ChainMap(f.source(), g.target(), std::move(images));
}

DeltaComplex build_dual_complex(const SncConfiguration& cfg)
{
    require_valid(cfg);
    DeltaComplex complex;
    std::map<std::string, Index> vertex_of;
    for (std::size_t pos : component_order(cfg)) {
        const auto& c = cfg.components[pos];
        vertex_of[c.id] = complex.add_vertex(c.id);
    }
    const auto facets = resolved_facets(cfg);
    std::map<std::string, Index> index_of;
    for (std::size_t depth = 2; depth <= cfg.max_depth(); ++depth) {
        for (const auto& s : cfg.strata_of_depth(depth)) {
            std::vector<Index> vertices;
            for (const auto& c : s.on)
                vertices.push_back(vertex_of.at(c));
            std::sort(vertices.begin(), vertices.end());
            std::vector<Index> facet_indices;
            if (depth >= 3) {
                const auto& table = facets.at(s.id);
                for (Index v : vertices)
                    facet_indices.push_back(index_of.at(table.at(complex.simplex(0, v).id)));
            }
            index_of[s.id] = complex.add(s.id, vertices, facet_indices);
        }
    }
    return complex;
}

DeltaComplex suspend(const DeltaComplex& complex, const std::string& apex_zero, const std::string& apex_infinity)
{
    if (complex.empty())
        throw ValidationError("cannot suspend the empty complex");
    if (apex_zero == apex_infinity || complex.find(0, apex_zero) || complex.find(0, apex_infinity))
        throw ValidationError("apex id collision");

    DeltaComplex s;
    for (const auto& v : complex.simplices(0))
        s.add_vertex(v.id);
    const std::array<std::string, 2> apexes{apex_zero, apex_infinity};
    for (const auto& apex : apexes)
        s.add_vertex(apex);

    // Index in S of the cone over τ (dimension b) towards apex k.
    auto cone_index = [&](Index b, Index tau, Index k) {
        const Index below = b < 0 ? 1 : complex.count(b);
        return complex.count(b + 1) + k * below + tau;
    };

    for (Index a = 1; a <= complex.dimension() + 1; ++a) {
        for (const auto& sigma : complex.simplices(a))
            s.add(sigma.id, sigma.vertices, sigma.facets);
        for (Index k = 0; k < 2; ++k) {
            const Index apex_vertex = complex.count(0) + k;
            const auto& base = complex.simplices(a - 1);
            for (std::size_t t = 0; t < base.size(); ++t) {
                const auto& sigma = base[t];
                std::vector<Index> vertices = sigma.vertices;
                vertices.push_back(apex_vertex);
                std::vector<Index> facets;
                if (a == 1) {
                    facets = {apex_vertex, sigma.vertices[0]};
                }
                else {
                    for (Index f : sigma.facets)
                        facets.push_back(cone_index(a - 2, f, k));
                    facets.push_back(static_cast<Index>(t));
                }
                s.add(sigma.id + "*" + apexes[static_cast<std::size_t>(k)], vertices, facets);
            }
        }
    }
    return s;
}

} // namespace snc
