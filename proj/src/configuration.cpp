#include "snc/configuration.hpp"

#include <algorithm>
#include <set>

#include "snc/error.hpp"

namespace snc
{

namespace
{

const std::vector<StratumRecord> no_strata;

std::string quoted(const std::string& s) { return "'" + s + "'"; }

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

const StratumRecord* find_stratum(const SncConfiguration& cfg, std::size_t depth, const std::string& id)
{
    for (const auto& s : cfg.strata_of_depth(depth))
        if (s.id == id)
            return &s;
    return nullptr;
}

std::string apply_map(const std::map<std::string, std::string>& perm, const std::string& id)
{
    auto it = perm.find(id);
    return it == perm.end() ? id : it->second;
}

// Checks that a partial permutation (missing ids fixed) is a bijection of `domain`.
void check_permutation(const std::map<std::string, std::string>& perm, const std::set<std::string>& domain,
                       const std::string& what, std::vector<std::string>& errors)
{
    std::set<std::string> images;
    for (const auto& id : domain) {
        const std::string image = apply_map(perm, id);
        if (!domain.count(image))
            errors.push_back("Frobenius maps " + what + " " + quoted(id) + " to unknown id " + quoted(image));
        else if (!images.insert(image).second)
            errors.push_back("Frobenius on " + what + "s is not a permutation (" + quoted(image) +
                             " is hit twice)");
    }
    for (const auto& [from, to] : perm)
        if (!domain.count(from))
            errors.push_back("Frobenius moves unknown " + what + " " + quoted(from));
}

// Facet resolution for one stratum of depth >= 3; records errors, returns
// omitted component -> facet id for the facets that resolved.
std::map<std::string, std::string> resolve_one(const SncConfiguration& cfg, std::size_t depth,
                                               const StratumRecord& s, std::vector<std::string>* errors)
{
    std::map<std::string, std::string> out;
    const auto on = as_set(s.on);
    if (s.facets) {
        if (s.facets->size() != depth) {
            if (errors)
                errors->push_back("stratum " + quoted(s.id) + " of depth " + std::to_string(depth) + " lists " +
                                  std::to_string(s.facets->size()) + " facets, expected " +
                                  std::to_string(depth));
            return out;
        }
        for (const auto& fid : *s.facets) {
            const StratumRecord* f = find_stratum(cfg, depth - 1, fid);
            if (!f) {
                if (errors)
                    errors->push_back("stratum " + quoted(s.id) + " lists unknown facet " + quoted(fid) +
                                      " (expected a depth-" + std::to_string(depth - 1) + " stratum)");
                continue;
            }
            const auto fon = as_set(f->on);
            std::vector<std::string> missing;
            std::set_difference(on.begin(), on.end(), fon.begin(), fon.end(), std::back_inserter(missing));
            if (!std::includes(on.begin(), on.end(), fon.begin(), fon.end()) || missing.size() != 1) {
                if (errors)
                    errors->push_back("facet " + quoted(fid) + " of stratum " + quoted(s.id) +
                                      " does not lie on all but one of its components");
                continue;
            }
            if (!out.emplace(missing.front(), fid).second && errors)
                errors->push_back("stratum " + quoted(s.id) + " lists two facets omitting component " +
                                  quoted(missing.front()));
        }
        return out;
    }
    for (const auto& c : s.on) {
        auto rest = on;
        rest.erase(c);
        std::vector<std::string> candidates;
        for (const auto& f : cfg.strata_of_depth(depth - 1))
            if (as_set(f.on) == rest)
                candidates.push_back(f.id);
        if (candidates.size() == 1) {
            out.emplace(c, candidates.front());
        }
        else if (errors && candidates.empty()) {
            errors->push_back("stratum " + quoted(s.id) + " has no facet omitting component " + quoted(c));
        }
        else if (errors) {
            std::string names;
            for (const auto& id : candidates)
                names += (names.empty() ? "" : ", ") + quoted(id);
            errors->push_back("facet ambiguity: stratum " + quoted(s.id) + " has " +
                              std::to_string(candidates.size()) + " candidate facets omitting component " +
                              quoted(c) + " (" + names + "); list its facets explicitly");
        }
    }
    return out;
}

void validate_frobenius(const SncConfiguration& cfg, std::vector<std::string>& errors)
{
    const FrobeniusAction& action = *cfg.frobenius;
    if (action.order == 0) {
        errors.push_back("Frobenius order must be positive");
        return;
    }
    std::set<std::string> component_ids;
    for (const auto& c : cfg.components)
        component_ids.insert(c.id);
    const std::size_t before = errors.size();
    check_permutation(action.components, component_ids, "component", errors);
    for (const auto& [depth, perm] : action.strata) {
        if (!cfg.strata.count(depth) && !perm.empty()) {
            errors.push_back("Frobenius permutes strata of depth " + std::to_string(depth) +
                             ", which has no strata");
            continue;
        }
        std::set<std::string> ids;
        for (const auto& s : cfg.strata_of_depth(depth))
            ids.insert(s.id);
        check_permutation(perm, ids, "stratum", errors);
    }
    if (errors.size() != before)
        return;

    for (const auto& c : cfg.components) {
        if (frobenius_component(cfg, c.id, action.order) != c.id) {
            errors.push_back("Frobenius permutation order does not divide " + std::to_string(action.order) +
                             " (component " + quoted(c.id) + ")");
            return;
        }
    }
    const auto facets = resolved_facets(cfg);
    for (const auto& [depth, list] : cfg.strata) {
        for (const auto& s : list) {
            if (frobenius_stratum(cfg, depth, s.id, action.order) != s.id) {
                errors.push_back("Frobenius permutation order does not divide " + std::to_string(action.order) +
                                 " (stratum " + quoted(s.id) + ")");
                return;
            }
            const std::string image_id = frobenius_stratum(cfg, depth, s.id);
            const StratumRecord* image = find_stratum(cfg, depth, image_id);
            std::set<std::string> mapped_on;
            for (const auto& c : s.on)
                mapped_on.insert(frobenius_component(cfg, c));
            if (mapped_on != as_set(image->on)) {
                errors.push_back("Frobenius does not respect incidence: stratum " + quoted(s.id) + " maps to " +
                                 quoted(image_id) + " but its components map elsewhere");
                continue;
            }
            if (depth >= 3) {
                const auto& own = facets.at(s.id);
                const auto& theirs = facets.at(image_id);
                for (const auto& [omitted, facet] : own) {
                    const std::string mapped = frobenius_stratum(cfg, depth - 1, facet);
                    auto it = theirs.find(frobenius_component(cfg, omitted));
                    if (it == theirs.end() || it->second != mapped)
                        errors.push_back("Frobenius does not preserve the facets of stratum " + quoted(s.id));
                }
            }
            bool collapsed = false;
            for (std::size_t i = 0; i < s.on.size() && !collapsed; ++i) {
                for (std::uint64_t k = 1; k < action.order && !collapsed; ++k) {
                    const std::string moved = frobenius_component(cfg, s.on[i], k);
                    if (moved == s.on[i])
                        break;
                    for (std::size_t j = 0; j < s.on.size(); ++j) {
                        if (j != i && s.on[j] == moved) {
                            errors.push_back("not SNC after extension: stratum " + quoted(s.id) + " has components " +
                                             quoted(s.on[i]) + " and " + quoted(moved) +
                                             " in one Frobenius orbit");
                            collapsed = true;
                            break;
                        }
                    }
                }
            }
        }
    }
}

} // namespace

const std::vector<StratumRecord>& SncConfiguration::strata_of_depth(std::size_t depth) const
{
    auto it = strata.find(depth);
    return it == strata.end() ? no_strata : it->second;
}

std::size_t SncConfiguration::max_depth() const
{
    std::size_t depth = components.empty() ? 0 : 1;
    for (const auto& [d, list] : strata)
        if (!list.empty())
            depth = std::max(depth, d);
    return depth;
}

std::optional<std::size_t> SncConfiguration::component_position(const std::string& id) const
{
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].id == id)
            return i;
    return std::nullopt;
}

std::string ValidationReport::message() const
{
    std::string out;
    for (const auto& e : errors)
        out += (out.empty() ? "" : "; ") + e;
    return out;
}

ValidationReport validate_config(const SncConfiguration& cfg)
{
    ValidationReport report;
    auto& errors = report.errors;
    if (cfg.components.empty())
        errors.push_back("at least one component required");

    std::set<std::string> ids;
    std::set<std::string> component_ids;
    auto check_degrees = [&](const std::string& id, const std::vector<std::uint64_t>& degrees) {
        for (auto d : degrees)
            if (d == 0)
                errors.push_back("point degree of " + quoted(id) + " must be positive");
    };
    for (const auto& c : cfg.components) {
        if (c.id.empty())
            errors.push_back("component with empty id");
        if (!ids.insert(c.id).second)
            errors.push_back("duplicate id " + quoted(c.id));
        component_ids.insert(c.id);
        check_degrees(c.id, c.point_degrees);
    }
    for (const auto& [depth, list] : cfg.strata) {
        if (depth < 2 && !list.empty()) {
            errors.push_back("strata depth must be at least 2 (got " + std::to_string(depth) + ")");
            continue;
        }
        for (const auto& s : list) {
            if (!ids.insert(s.id).second)
                errors.push_back("duplicate id " + quoted(s.id));
            check_degrees(s.id, s.point_degrees);
            if (s.on.size() != depth)
                errors.push_back("stratum " + quoted(s.id) + " of depth " + std::to_string(depth) + " lies on " +
                                 std::to_string(s.on.size()) + " components");
            std::set<std::string> seen;
            for (const auto& c : s.on) {
                if (!component_ids.count(c))
                    errors.push_back("stratum " + quoted(s.id) + " lies on unknown component " + quoted(c));
                else if (!seen.insert(c).second)
                    errors.push_back("stratum " + quoted(s.id) + " lies on repeated component " + quoted(c));
            }
        }
    }
    if (!errors.empty())
        return report;

    for (const auto& [depth, list] : cfg.strata) {
        for (const auto& s : list) {
            if (depth == 2) {
                if (s.facets && as_set(*s.facets) != as_set(s.on))
                    errors.push_back("facets of stratum " + quoted(s.id) + " must be its two components");
                continue;
            }
            resolve_one(cfg, depth, s, &errors);
        }
    }
    if (errors.empty() && cfg.frobenius)
        validate_frobenius(cfg, errors);
    return report;
}

void require_valid(const SncConfiguration& cfg)
{
    const auto report = validate_config(cfg);
    if (!report.ok())
        throw ValidationError(report.message());
}

std::map<std::string, std::map<std::string, std::string>> resolved_facets(const SncConfiguration& cfg)
{
    std::map<std::string, std::map<std::string, std::string>> out;
    for (const auto& [depth, list] : cfg.strata) {
        if (depth < 3)
            continue;
        for (const auto& s : list)
            out.emplace(s.id, resolve_one(cfg, depth, s, nullptr));
    }
    return out;
}

std::vector<std::size_t> component_order(const SncConfiguration& cfg)
{
    const std::size_t n = cfg.components.size();
    std::vector<std::size_t> first(n);
    for (std::size_t i = 0; i < n; ++i) {
        first[i] = i;
        if (!cfg.frobenius)
            continue;
        std::string id = frobenius_component(cfg, cfg.components[i].id);
        while (id != cfg.components[i].id) {
            first[i] = std::min(first[i], *cfg.component_position(id));
            id = frobenius_component(cfg, id);
        }
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return first[a] < first[b]; });
    return order;
}

std::string frobenius_component(const SncConfiguration& cfg, const std::string& id, std::uint64_t power)
{
    if (!cfg.frobenius)
        return id;
    std::string out = id;
    for (std::uint64_t k = 0; k < power; ++k)
        out = apply_map(cfg.frobenius->components, out);
    return out;
}

std::string frobenius_stratum(const SncConfiguration& cfg, std::size_t depth, const std::string& id,
                              std::uint64_t power)
{
    if (!cfg.frobenius)
        return id;
    auto it = cfg.frobenius->strata.find(depth);
    if (it == cfg.frobenius->strata.end())
        return id;
    std::string out = id;
    for (std::uint64_t k = 0; k < power; ++k)
        out = apply_map(it->second, out);
    return out;
}

bool has_rational_point(const std::vector<std::uint64_t>& point_degrees, std::uint64_t extension_degree)
{
    return std::any_of(point_degrees.begin(), point_degrees.end(),
                       [&](std::uint64_t d) { return d != 0 && extension_degree % d == 0; });
}

SncConfiguration suspension_configuration(const SncConfiguration& divisor, const std::string& apex_zero,
                                          const std::string& apex_infinity)
{
    require_valid(divisor);
    if (apex_zero == apex_infinity)
        throw ValidationError("apex ids must differ");
    for (const auto& c : divisor.components)
        if (c.id == apex_zero || c.id == apex_infinity)
            throw ValidationError("apex id " + quoted(c.id) + " collides with a component");

    SncConfiguration y;
    y.name = divisor.name + " suspension";
    y.components = divisor.components;
    y.components.push_back({apex_zero, {1}});
    y.components.push_back({apex_infinity, {1}});

    const auto facets = resolved_facets(divisor);
    const std::size_t top = divisor.max_depth();
    for (std::size_t depth = 2; depth <= top + 1; ++depth) {
        auto& list = y.strata[depth];
        for (const auto& s : divisor.strata_of_depth(depth)) {
            StratumRecord copy = s;
            if (depth >= 3) {
                std::vector<std::string> f;
                for (const auto& c : s.on)
                    f.push_back(facets.at(s.id).at(c));
                copy.facets = f;
            }
            list.push_back(copy);
        }
        for (const auto& apex : {apex_zero, apex_infinity}) {
            if (depth == 2) {
                for (const auto& c : divisor.components)
                    list.push_back({c.id + "*" + apex, {c.id, apex}, std::nullopt, c.point_degrees});
                continue;
            }
            for (const auto& s : divisor.strata_of_depth(depth - 1)) {
                StratumRecord cone{s.id + "*" + apex, s.on, std::vector<std::string>{}, s.point_degrees};
                cone.on.push_back(apex);
                for (const auto& c : s.on) {
                    const std::string face = depth - 1 == 2 ? (s.on[0] == c ? s.on[1] : s.on[0])
                                                            : facets.at(s.id).at(c);
                    cone.facets->push_back(face + "*" + apex);
                }
                cone.facets->push_back(s.id);
                list.push_back(cone);
            }
        }
    }
    if (divisor.frobenius) {
        FrobeniusAction action = *divisor.frobenius;
        for (std::size_t depth = 2; depth <= top + 1; ++depth) {
            for (const auto& apex : {apex_zero, apex_infinity}) {
                if (depth == 2) {
                    for (const auto& c : divisor.components)
                        action.strata[2][c.id + "*" + apex] = frobenius_component(divisor, c.id) + "*" + apex;
                    continue;
                }
                for (const auto& s : divisor.strata_of_depth(depth - 1))
                    action.strata[depth][s.id + "*" + apex] =
                        frobenius_stratum(divisor, depth - 1, s.id) + "*" + apex;
            }
        }
        y.frobenius = action;
    }
    return y;
}

} // namespace snc
