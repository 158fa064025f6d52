#ifndef SNC_CONFIGURATION_HPP
#define SNC_CONFIGURATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace snc
{

/// An irreducible component over the algebraic closure.
struct ComponentRecord
{
    std::string id;
    /// Degrees of known closed points; a point of degree d becomes rational
    /// over every extension whose degree is a multiple of d.
    std::vector<std::uint64_t> point_degrees;
};

/// An irreducible component of the depth-r intersection locus.
struct StratumRecord
{
    std::string id;
    std::vector<std::string> on;
    /// Depth r-1 strata bounding this one, needed only when several strata
    /// share a component set.
    std::optional<std::vector<std::string>> facets;
    std::vector<std::uint64_t> point_degrees;
};

/// Geometric Frobenius as permutations of component and stratum ids.
/// Ids missing from a map are fixed.
struct FrobeniusAction
{
    std::uint64_t order = 1;
    std::map<std::string, std::string> components;
    std::map<std::size_t, std::map<std::string, std::string>> strata;
};

struct SncConfiguration
{
    std::string name;
    std::vector<ComponentRecord> components;
    /// Depth (>= 2) to strata of that depth.
    std::map<std::size_t, std::vector<StratumRecord>> strata;
    std::optional<FrobeniusAction> frobenius;

    const std::vector<StratumRecord>& strata_of_depth(std::size_t depth) const;
    std::size_t max_depth() const;
    std::optional<std::size_t> component_position(const std::string& id) const;
};

struct ValidationReport
{
    std::vector<std::string> errors;

    bool ok() const { return errors.empty(); }
    std::string message() const;
};

/// Checks the combinatorial SNC constraints, facet resolution and the
/// Frobenius action. Collects every violation found.
ValidationReport validate_config(const SncConfiguration& cfg);

/// Throws ValidationError carrying all violations.
void require_valid(const SncConfiguration& cfg);

/// For each stratum of depth >= 3: omitted component id -> facet stratum id.
/// Depth-2 strata have components as facets and are not listed.
/// Assumes the facet checks of validate_config pass.
std::map<std::string, std::map<std::string, std::string>> resolved_facets(const SncConfiguration& cfg);

/// Global vertex order: component positions sorted by (first position of
/// the Frobenius orbit, own position). Equals list order without Frobenius.
std::vector<std::size_t> component_order(const SncConfiguration& cfg);

/// Image of a component id under Frobenius^power.
std::string frobenius_component(const SncConfiguration& cfg, const std::string& id, std::uint64_t power = 1);

/// Image of a depth-`depth` stratum id under Frobenius^power.
std::string frobenius_stratum(const SncConfiguration& cfg, std::size_t depth, const std::string& id,
                              std::uint64_t power = 1);

/// Some recorded point degree divides `extension_degree`.
bool has_rational_point(const std::vector<std::uint64_t>& point_degrees, std::uint64_t extension_degree);

/**
 * Configuration of (Y0 x O) ∪ (Y0 x ∞) ∪ (D x P1) for a divisor D.
 *
 * Components of D keep their ids (standing for D_j x P1) and the two
 * sections become the last two components. Strata s of D keep their ids
 * (s x P1); the new strata s x O and s x ∞ get ids "s*<apex>". Frobenius
 * fixes both sections.
 */
SncConfiguration suspension_configuration(const SncConfiguration& divisor, const std::string& apex_zero = "O",
                                          const std::string& apex_infinity = "inf");

} // namespace snc

#endif
