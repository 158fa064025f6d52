#ifndef SNC_DELTA_COMPLEX_HPP
#define SNC_DELTA_COMPLEX_HPP

#include <optional>
#include <string>
#include <vector>

#include "snc/configuration.hpp"
#include "snc/integer.hpp"

namespace snc
{

/// One a-simplex. `vertices` are increasing vertex indices; `facets[i]` is
/// the (a-1)-simplex omitting vertex position i and enters the boundary
/// with sign (-1)^i. Vertices have no facets.
struct Simplex
{
    std::string id;
    std::vector<Index> vertices;
    std::vector<Index> facets;
};

inline int facet_sign(std::size_t position) { return position % 2 == 0 ? 1 : -1; }

/**
 * Generalized simplicial complex with explicit facet incidence.
 *
 * Several simplices may share a vertex tuple. Simplices are appended
 * dimension by dimension; `add` checks the facet/vertex compatibility.
 */
class DeltaComplex
{
public:
    Index add_vertex(std::string id);
    /// Appends an a-simplex with a = vertices.size() - 1 >= 1. For edges the
    /// facets may be left empty and default to the vertices.
    Index add(std::string id, std::vector<Index> vertices, std::vector<Index> facets = {});

    /// Highest non-empty dimension, -1 for the empty complex.
    Index dimension() const { return static_cast<Index>(simplices_.size()) - 1; }
    Index count(Index a) const;
    const std::vector<Simplex>& simplices(Index a) const;
    const Simplex& simplex(Index a, Index i) const { return simplices(a)[static_cast<std::size_t>(i)]; }
    std::optional<Index> find(Index a, const std::string& id) const;
    bool empty() const { return simplices_.empty(); }

    /// Boundary C_a -> C_{a-1}: rows are (a-1)-simplices, columns a-simplices.
    /// Degree 0 yields a 0 x n_0 matrix.
    IntMatrix boundary_matrix(Index a) const;
    /// Augmentation C_0 -> Z as a 1 x n_0 row of ones.
    IntMatrix augmentation() const;

    Integer euler_characteristic() const;
    std::vector<Index> counts() const;

    friend bool operator==(const DeltaComplex& a, const DeltaComplex& b);

private:
    std::vector<std::vector<Simplex>> simplices_;
};

bool operator==(const Simplex& a, const Simplex& b);

/// Same simplices, vertex tuples and facet indices, ignoring ids.
bool same_structure(const DeltaComplex& a, const DeltaComplex& b);

struct SignedSimplex
{
    Index index = 0;
    int sign = 1;

    friend bool operator==(const SignedSimplex&, const SignedSimplex&) = default;
};

/**
 * Simplicial chain map sending each simplex to a signed simplex of the same
 * dimension. Construction verifies that it commutes with the boundary.
 */
class ChainMap
{
public:
    ChainMap() = default;
    ChainMap(DeltaComplex source, DeltaComplex target, std::vector<std::vector<SignedSimplex>> images);

    static ChainMap identity(const DeltaComplex& complex);

    const DeltaComplex& source() const { return source_; }
    const DeltaComplex& target() const { return target_; }
    const std::vector<std::vector<SignedSimplex>>& images() const { return images_; }
    const SignedSimplex& image(Index a, Index i) const
    {
        return images_[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];
    }

    /// Degree-a chain matrix (target a-simplices x source a-simplices).
    IntMatrix matrix(Index a) const;

    friend bool operator==(const ChainMap&, const ChainMap&);

private:
    DeltaComplex source_;
    DeltaComplex target_;
    std::vector<std::vector<SignedSimplex>> images_;
};

/// g ∘ f
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Dual complex: one vertex per component (ordered by `component_order`),
/// one (r-1)-simplex per depth-r stratum in list order. Throws
/// ValidationError for invalid configurations.
DeltaComplex build_dual_complex(const SncConfiguration& cfg);

/**
 * Suspension: the vertices of Γ plus two apexes placed last, and for every
 * simplex σ the simplices σ, σ*apex_zero and σ*apex_infinity. The apexes
 * are not joined to each other. Cone simplex ids are "<σ id>*<apex id>".
 */
DeltaComplex suspend(const DeltaComplex& complex, const std::string& apex_zero = "O",
                     const std::string& apex_infinity = "inf");

} // namespace snc

#endif
