#include "snc/galois.hpp"

#include <algorithm>
#include <stdexcept>

#include "snc/error.hpp"

namespace snc
{

int sorting_sign(std::vector<Index> values)
{
    int sign = 1;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if (values[j] < values[i])
                sign = -sign;
    }
    return sign;
}

namespace
{

std::uint64_t action_order(const SncConfiguration& cfg) { return cfg.frobenius ? cfg.frobenius->order : 1; }

// Index of Frobenius(τ) for every simplex τ of Γ_{X̄}, per dimension.
std::vector<std::vector<Index>> frobenius_images(const SncConfiguration& cfg, const DeltaComplex& complex)
{
    std::vector<std::vector<Index>> images;
    for (Index a = 0; a <= complex.dimension(); ++a) {
        auto& row = images.emplace_back();
        for (const auto& s : complex.simplices(a)) {
            const std::string id = a == 0 ? frobenius_component(cfg, s.id)
                                          : frobenius_stratum(cfg, static_cast<std::size_t>(a + 1), s.id);
            row.push_back(*complex.find(a, id));
        }
    }
    return images;
}

struct OrbitQuotient
{
    DeltaComplex cover;
    DeltaComplex complex;
    // Per dimension: orbit index of each simplex of `cover`, and the first
    // member of each orbit.
    std::vector<std::vector<Index>> orbit_of;
    std::vector<std::vector<Index>> first_member;
};

OrbitQuotient orbit_quotient(const SncConfiguration& cfg, std::uint64_t f)
{
    if (f == 0)
        throw std::invalid_argument("extension degree must be positive");
    OrbitQuotient q;
    q.cover = build_dual_complex(cfg);
    const auto phi = frobenius_images(cfg, q.cover);
    const std::uint64_t power = f % action_order(cfg);

    for (Index a = 0; a <= q.cover.dimension(); ++a) {
        const auto& step = phi[static_cast<std::size_t>(a)];
        auto& orbit = q.orbit_of.emplace_back(static_cast<std::size_t>(q.cover.count(a)), -1);
        auto& first = q.first_member.emplace_back();
        for (Index i = 0; i < q.cover.count(a); ++i) {
            if (orbit[static_cast<std::size_t>(i)] >= 0)
                continue;
            const auto k = static_cast<Index>(first.size());
            first.push_back(i);
            Index j = i;
            do {
                orbit[static_cast<std::size_t>(j)] = k;
                for (std::uint64_t t = 0; t < power; ++t)
                    j = step[static_cast<std::size_t>(j)];
            } while (j != i);
        }
    }

    for (Index k : q.first_member.empty() ? std::vector<Index>{} : q.first_member[0])
        q.complex.add_vertex(q.cover.simplex(0, k).id);
    for (Index a = 1; a <= q.cover.dimension(); ++a) {
        const auto& vertex_orbit = q.orbit_of[0];
        for (Index m : q.first_member[static_cast<std::size_t>(a)]) {
            const auto& s = q.cover.simplex(a, m);
            std::vector<Index> orbits;
            for (Index v : s.vertices)
                orbits.push_back(vertex_orbit[static_cast<std::size_t>(v)]);
            std::vector<Index> sorted = orbits;
            std::sort(sorted.begin(), sorted.end());
            const auto repeated = std::adjacent_find(sorted.begin(), sorted.end());
            if (repeated != sorted.end()) {
                std::vector<std::string> names;
                for (std::size_t i = 0; i < orbits.size(); ++i)
                    if (orbits[i] == *repeated)
                        names.push_back(q.cover.simplex(0, s.vertices[i]).id);
                throw ValidationError("not SNC after extension: stratum '" + s.id + "' has components '" + names[0] +
                                      "' and '" + names[1] + "' in one orbit of Frobenius^" + std::to_string(f));
            }
            std::vector<Index> facets(sorted.size());
            for (std::size_t j = 0; j < orbits.size(); ++j) {
                const auto position = std::lower_bound(sorted.begin(), sorted.end(), orbits[j]) - sorted.begin();
                facets[static_cast<std::size_t>(position)] =
                    q.orbit_of[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(s.facets[j])];
            }
            q.complex.add(s.id, sorted, facets);
        }
    }
    return q;
}

} // namespace

ScalarExtension extension_complex(const SncConfiguration& cfg, std::uint64_t f)
{
    auto q = orbit_quotient(cfg, f);
    std::vector<std::vector<SignedSimplex>> images;
    for (Index a = 0; a <= q.cover.dimension(); ++a) {
        auto& row = images.emplace_back();
        for (Index i = 0; i < q.cover.count(a); ++i) {
            std::vector<Index> orbits;
            for (Index v : q.cover.simplex(a, i).vertices)
                orbits.push_back(q.orbit_of[0][static_cast<std::size_t>(v)]);
            row.push_back({q.orbit_of[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)], sorting_sign(orbits)});
        }
    }
    ChainMap projection(q.cover, q.complex, std::move(images));
    return {f, std::move(q.complex), std::move(projection)};
}

ChainMap extension_chain_map(const SncConfiguration& cfg, std::uint64_t upper, std::uint64_t lower)
{
    if (lower == 0 || upper % lower != 0)
        throw std::invalid_argument("extension degrees must satisfy lower | upper");
    const auto top = orbit_quotient(cfg, upper);
    const auto bottom = orbit_quotient(cfg, lower);
    std::vector<std::vector<SignedSimplex>> images;
    for (Index a = 0; a <= top.complex.dimension(); ++a) {
        auto& row = images.emplace_back();
        const auto& members = top.first_member[static_cast<std::size_t>(a)];
        for (Index k = 0; k < top.complex.count(a); ++k) {
            std::vector<Index> orbits;
            for (Index w : top.complex.simplex(a, k).vertices) {
                const Index v = top.first_member[0][static_cast<std::size_t>(w)];
                orbits.push_back(bottom.orbit_of[0][static_cast<std::size_t>(v)]);
            }
            const Index m = members[static_cast<std::size_t>(k)];
            row.push_back({bottom.orbit_of[static_cast<std::size_t>(a)][static_cast<std::size_t>(m)],
                           sorting_sign(orbits)});
        }
    }
    return ChainMap(top.complex, bottom.complex, std::move(images));
}

NormMap norm_map(const SncConfiguration& cfg, std::uint64_t f, Index degree, Coefficients coefficients)
{
    const auto sigma = extension_chain_map(cfg, f, 1);
    auto map = induced_map(sigma, degree, coefficients);
    auto image = image_subgroup(map);
    return {std::move(map), std::move(image)};
}

ChainMap frobenius_chain_map(const SncConfiguration& cfg)
{
    const auto complex = build_dual_complex(cfg);
    const auto phi = frobenius_images(cfg, complex);
    std::vector<std::vector<SignedSimplex>> images;
    for (Index a = 0; a <= complex.dimension(); ++a) {
        auto& row = images.emplace_back();
        for (Index i = 0; i < complex.count(a); ++i) {
            std::vector<Index> moved;
            for (Index v : complex.simplex(a, i).vertices)
                moved.push_back(phi[0][static_cast<std::size_t>(v)]);
            row.push_back({phi[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)], sorting_sign(moved)});
        }
    }
    return ChainMap(complex, complex, std::move(images));
}

GaloisModule frobenius_on_homology(const SncConfiguration& cfg, Index degree, Coefficients coefficients)
{
    const auto phi = frobenius_chain_map(cfg);
    const auto h = homology_group(phi.source(), degree, coefficients);
    const auto map = induced_map(phi, h, h);
    return GaloisModule(h.group, map.matrix(), action_order(cfg));
}

} // namespace snc
