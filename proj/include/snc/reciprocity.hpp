#ifndef SNC_RECIPROCITY_HPP
#define SNC_RECIPROCITY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "snc/configuration.hpp"
#include "snc/galois_module.hpp"
#include "snc/homology.hpp"

namespace snc
{

/// π1 data of one component D̄_j: its group, the map into π1(Ȳ0), and the
/// Frobenius map π1(D̄_j) -> π1(D̄_{φ(j)}) (identity when absent).
struct ComponentMap
{
    std::string component;
    FgAbelianGroup group;
    IntMatrix to_y0;
    std::optional<IntMatrix> frobenius;
};

/// Components absent from `component_maps` contribute the zero group.
struct Pi1Input
{
    GaloisModule y0;
    std::vector<ComponentMap> component_maps;
};

/// Edge id of Γ_{D̄} -> element of y0 on its generators. Missing edges are zero.
using EdgeLabelCochain = std::map<std::string, IntVector>;

/// Direct sum of the component groups with its Frobenius and the summed map
/// into y0. Throws ValidationError on unknown components, ill-defined or
/// non-equivariant maps.
struct ComponentSum
{
    GaloisModule source;
    ModuleMap map;
};
ComponentSum component_sum(const SncConfiguration& divisor, const Pi1Input& pi1);

struct Theta
{
    GaloisModule full;       ///< Θ = Coker(⊕ π1(D̄_j) -> π1(Ȳ0))
    ModuleMap to_full;       ///< y0 -> Θ
    GaloisModule localized;  ///< Θ_ℓ: Θ modulo its prime-to-ℓ torsion
    ModuleMap to_localized;  ///< Θ -> Θ_ℓ
};

Theta compute_theta(const SncConfiguration& divisor, const Pi1Input& pi1, std::uint64_t ell);

/// Labels as a (y0 generators x edges) matrix in the edge order of Γ_{D̄}.
/// Throws ValidationError naming unknown edges or wrong-length labels.
IntMatrix label_matrix(const DeltaComplex& dual, const EdgeLabelCochain& labels, Index y0_generators);

/// Equivariance in y0 and the cocycle condition in Θ. Throws ValidationError
/// naming the offending edge or 2-simplex.
void validate_labels(const SncConfiguration& divisor, const EdgeLabelCochain& labels, const Pi1Input& pi1);

struct AlphaResult
{
    HomologyResult h1;  ///< H1(Γ_{D̄}, Z)
    ModuleMap map;      ///< α: H1 -> Θ_ℓ
    Subgroup image;
    bool surjective = false;
    bool image_in_torsion = true;
};

AlphaResult alpha_map(const SncConfiguration& divisor, const EdgeLabelCochain& labels, const Pi1Input& pi1,
                      std::uint64_t ell);

/// An orbit of components of Y^(2) over F_f and whether it has a rational point.
struct PointCheck
{
    std::vector<std::string> members;
    bool has_point = false;
};

enum class Verdict
{
    exact,
    bound
};

std::string to_string(Verdict verdict);

struct KernelReport
{
    std::uint64_t ell = 2;
    std::uint64_t degree = 1;  ///< extension degree f
    GroupInvariants h1_extension;  ///< H1(Γ_{D⊗F_f}, Z)
    bool norm_surjective = false;  ///< H1(Γ_{D̄}) -> H1(Γ_{D⊗F_f}) onto, so G(Y) = Ker ρ
    GroupInvariants theta;
    GroupInvariants theta_localized;
    GroupInvariants theta_torsion;
    std::vector<PointCheck> rational_points;
    bool points_assumption = false;
    bool trivial_action_assumption = false;
    bool composite_injective = true;
    GroupInvariants alpha_image;
    bool alpha_surjective = false;
    bool alpha_in_torsion = true;
    Verdict verdict = Verdict::bound;
    /// Im α for "exact", (Θ_ℓ)_tors for "bound".
    GroupInvariants predicted_kernel;
    std::vector<std::string> warnings;
};

/// Main theorem over the degree-f extension.
KernelReport predict_kernel(const SncConfiguration& divisor, const Pi1Input& pi1, const EdgeLabelCochain& labels,
                            std::uint64_t ell, std::uint64_t f = 1);

enum class Trend
{
    stable,
    shrinking,
    eventually_trivial,
    varying
};

std::string to_string(Trend trend);

struct Sweep
{
    std::vector<KernelReport> reports;  ///< f = 1 .. F_max
    Trend trend = Trend::stable;
};

Sweep sweep_extensions(const SncConfiguration& divisor, const Pi1Input& pi1, const EdgeLabelCochain& labels,
                       std::uint64_t ell, std::uint64_t f_max);

} // namespace snc

#endif
