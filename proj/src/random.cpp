#include "snc/random.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace snc
{

namespace
{

Index uniform(Rng& rng, Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng); }

} // namespace

DeltaComplex random_delta_complex(Rng& rng, Index max_vertices, Index max_dimension)
{
    DeltaComplex c;
    const Index n = uniform(rng, 1, max_vertices);
    for (Index v = 0; v < n; ++v)
        c.add_vertex("v" + std::to_string(v));
    if (max_dimension < 1)
        return c;

    std::map<std::pair<Index, Index>, std::vector<Index>> edges;
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            const Index multiplicity = std::max<Index>(0, uniform(rng, -2, 2));
            for (Index k = 0; k < multiplicity; ++k)
                edges[{i, j}].push_back(c.add("e" + std::to_string(c.count(1)), {i, j}));
        }
    }
    if (max_dimension < 2)
        return c;
    Index triangles = 0;
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            for (Index k = j + 1; k < n; ++k) {
                const auto& jk = edges[{j, k}];
                const auto& ik = edges[{i, k}];
                const auto& ij = edges[{i, j}];
                if (jk.empty() || ik.empty() || ij.empty())
                    continue;
                const Index count = std::max<Index>(0, uniform(rng, -1, 2));
                for (Index t = 0; t < count; ++t) {
                    auto pick = [&](const std::vector<Index>& list) {
                        return list[static_cast<std::size_t>(uniform(rng, 0, static_cast<Index>(list.size()) - 1))];
                    };
                    const Index a = pick(jk), b = pick(ik), d = pick(ij);
                    c.add("t" + std::to_string(triangles++), {i, j, k}, {a, b, d});
                }
            }
        }
    }
    return c;
}

SncConfiguration random_equivariant_configuration(Rng& rng, std::uint64_t order, Index max_base_vertices)
{
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t d = 1; d <= order; ++d)
        if (order % d == 0)
            divisors.push_back(d);

    const Index base = uniform(rng, 2, std::max<Index>(2, max_base_vertices));
    std::vector<std::uint64_t> size(static_cast<std::size_t>(base));
    for (auto& s : size)
        s = divisors[static_cast<std::size_t>(uniform(rng, 0, static_cast<Index>(divisors.size()) - 1))];

    using Vertex = std::pair<Index, std::uint64_t>;
    auto vertex_id = [](const Vertex& v) { return "c" + std::to_string(v.first) + "." + std::to_string(v.second); };
    auto shift = [&](const std::vector<Vertex>& s, std::uint64_t k) {
        std::vector<Vertex> out;
        for (const auto& [b, i] : s)
            out.push_back({b, (i + k) % size[static_cast<std::size_t>(b)]});
        return out;
    };

    // Simplices are vertex sets (sorted); collect orbits closed under faces.
    std::set<std::vector<Vertex>> simplices;
    auto add_orbit = [&](std::vector<Vertex> s) {
        for (std::uint64_t k = 0; k < order; ++k) {
            auto t = shift(s, k);
            std::sort(t.begin(), t.end());
            simplices.insert(t);
            for (std::size_t drop = 0; drop < t.size() && t.size() > 2; ++drop) {
                auto face = t;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
                simplices.insert(face);
                if (face.size() > 2)
                    for (std::size_t d2 = 0; d2 < face.size(); ++d2) {
                        auto edge = face;
                        edge.erase(edge.begin() + static_cast<std::ptrdiff_t>(d2));
                        simplices.insert(edge);
                    }
            }
        }
    };
    const Index seeds = uniform(rng, 1, base + 2);
    for (Index s = 0; s < seeds; ++s) {
        const Index dim = std::min<Index>(uniform(rng, 2, 4), base);
        std::vector<Index> chosen(static_cast<std::size_t>(base));
        std::iota(chosen.begin(), chosen.end(), 0);
        std::shuffle(chosen.begin(), chosen.end(), rng);
        chosen.resize(static_cast<std::size_t>(dim));
        std::vector<Vertex> simplex;
        for (Index b : chosen)
            simplex.push_back(
                {b, static_cast<std::uint64_t>(uniform(rng, 0, static_cast<Index>(size[static_cast<std::size_t>(b)]) - 1))});
        std::sort(simplex.begin(), simplex.end());
        add_orbit(simplex);
    }

    SncConfiguration cfg;
    cfg.name = "random";
    FrobeniusAction action;
    action.order = order;
    for (Index b = 0; b < base; ++b) {
        for (std::uint64_t i = 0; i < size[static_cast<std::size_t>(b)]; ++i) {
            const Vertex v{b, i};
            cfg.components.push_back({vertex_id(v), {}});
            action.components[vertex_id(v)] = vertex_id({b, (i + 1) % size[static_cast<std::size_t>(b)]});
        }
    }
    auto stratum_id = [&](const std::vector<Vertex>& s) {
        std::string id = "s";
        for (const auto& v : s)
            id += "_" + vertex_id(v);
        return id;
    };
    for (const auto& s : simplices) {
        StratumRecord r;
        r.id = stratum_id(s);
        for (const auto& v : s)
            r.on.push_back(vertex_id(v));
        cfg.strata[s.size()].push_back(std::move(r));
        auto image = shift(s, 1);
        std::sort(image.begin(), image.end());
        action.strata[s.size()][stratum_id(s)] = stratum_id(image);
    }
    cfg.frobenius = std::move(action);
    return cfg;
}

IntMatrix random_matrix(Rng& rng, Index rows, Index cols, int bound)
{
    std::uniform_int_distribution<int> entry(-bound, bound);
    IntMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r)
        for (Index c = 0; c < cols; ++c)
            m(r, c) = entry(rng);
    return m;
}

} // namespace snc
