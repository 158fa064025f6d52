#include "snc/reciprocity.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "snc/error.hpp"
#include "snc/galois.hpp"

namespace snc
{

namespace
{

std::uint64_t action_order(const SncConfiguration& cfg) { return cfg.frobenius ? cfg.frobenius->order : 1; }

bool is_torsion_element(const FgAbelianGroup& group, const IntVector& x)
{
    Integer exponent = 1;
    for (const auto& d : group.invariants().torsion)
        exponent = d;
    return group.is_zero(exponent * x);
}

// Size for trend comparison: (free rank, order of torsion).
std::pair<Index, Integer> size_of(const GroupInvariants& g)
{
    Integer order = 1;
    for (const auto& d : g.torsion)
        order *= d;
    return {g.free_rank, order};
}

} // namespace

ComponentSum component_sum(const SncConfiguration& divisor, const Pi1Input& pi1)
{
    const FgAbelianGroup& y0 = pi1.y0.group();
    std::map<std::string, const ComponentMap*> by_id;
    for (const auto& cm : pi1.component_maps) {
        if (!divisor.component_position(cm.component))
            throw ValidationError("component map for unknown component '" + cm.component + "'");
        if (!by_id.emplace(cm.component, &cm).second)
            throw ValidationError("duplicate component map for '" + cm.component + "'");
        if (cm.to_y0.rows() != y0.generator_count() || cm.to_y0.cols() != cm.group.generator_count())
            throw ValidationError("component map '" + cm.component + "' has a matrix of the wrong shape");
        try {
            ModuleMap(cm.group, y0, cm.to_y0);
        }
        catch (const ValidationError& e) {
            throw ValidationError("component map '" + cm.component + "' is not well defined: " + e.what());
        }
    }

    const Index n = static_cast<Index>(divisor.components.size());
    std::vector<FgAbelianGroup> groups(static_cast<std::size_t>(n));
    std::vector<Index> offset(static_cast<std::size_t>(n) + 1, 0);
    for (Index c = 0; c < n; ++c) {
        auto it = by_id.find(divisor.components[static_cast<std::size_t>(c)].id);
        if (it != by_id.end())
            groups[static_cast<std::size_t>(c)] = it->second->group;
        offset[static_cast<std::size_t>(c) + 1] =
            offset[static_cast<std::size_t>(c)] + groups[static_cast<std::size_t>(c)].generator_count();
    }
    const Index total = offset.back();

    std::vector<IntMatrix> relation_blocks;
    IntMatrix to_y0 = IntMatrix::Zero(y0.generator_count(), total);
    IntMatrix frobenius = IntMatrix::Zero(total, total);
    for (Index c = 0; c < n; ++c) {
        const auto& id = divisor.components[static_cast<std::size_t>(c)].id;
        const auto& g = groups[static_cast<std::size_t>(c)];
        relation_blocks.push_back(g.relations());
        const Index k = g.generator_count();
        if (k == 0)
            continue;
        const auto* cm = by_id.at(id);
        const Index start = offset[static_cast<std::size_t>(c)];
        to_y0.middleCols(start, k) = cm->to_y0;

        const std::string image_id = frobenius_component(divisor, id);
        const Index d = static_cast<Index>(*divisor.component_position(image_id));
        const auto& target = groups[static_cast<std::size_t>(d)];
        IntMatrix f;
        if (cm->frobenius)
            f = *cm->frobenius;
        else if (target.generator_count() == k)
            f = IntMatrix::Identity(k, k);
        else
            throw ValidationError("component map '" + id + "' needs a frobenius matrix into the group of '" +
                                  image_id + "'");
        if (f.rows() != target.generator_count() || f.cols() != k)
            throw ValidationError("component map '" + id + "' has a frobenius matrix of the wrong shape");
        try {
            ModuleMap(g, target, f);
        }
        catch (const ValidationError& e) {
            throw ValidationError("frobenius of component map '" + id + "' is not well defined: " + e.what());
        }
        frobenius.block(offset[static_cast<std::size_t>(d)], start, target.generator_count(), k) = f;

        const IntMatrix lhs = pi1.y0.frobenius_matrix() * cm->to_y0;
        const IntMatrix rhs = (target.generator_count() == 0 ? IntMatrix::Zero(y0.generator_count(), k)
                                                              : IntMatrix(by_id.at(image_id)->to_y0 * f));
        for (Index j = 0; j < k; ++j)
            if (!y0.equal(lhs.col(j), rhs.col(j)))
                throw ValidationError("component map '" + id + "' is not Frobenius-equivariant");
    }

    FgAbelianGroup source(total, block_diagonal(relation_blocks));
    const std::uint64_t order = std::lcm(pi1.y0.order(), action_order(divisor));
    GaloisModule module;
    try {
        module = GaloisModule(source, frobenius, order);
    }
    catch (const ValidationError& e) {
        throw ValidationError(std::string("component groups: ") + e.what());
    }
    return {std::move(module), ModuleMap(source, y0, to_y0)};
}

Theta compute_theta(const SncConfiguration& divisor, const Pi1Input& pi1, std::uint64_t ell)
{
    if (!is_prime(ell))
        throw std::invalid_argument(std::to_string(ell) + " is not prime");
    const auto sum = component_sum(divisor, pi1);
    const Quotient q = cokernel(sum.map);
    GaloisModule full(q.group, pi1.y0.frobenius_matrix(), pi1.y0.order());
    const Subgroup away = prime_to_part(full.group(), ell);
    GaloisModule localized = quotient_module(full, away);
    const Index n = full.group().generator_count();
    ModuleMap to_localized(full.group(), localized.group(), IntMatrix::Identity(n, n));
    return {std::move(full), q.projection, std::move(localized), std::move(to_localized)};
}

IntMatrix label_matrix(const DeltaComplex& dual, const EdgeLabelCochain& labels, Index y0_generators)
{
    IntMatrix m = IntMatrix::Zero(y0_generators, dual.count(1));
    for (const auto& [edge, label] : labels) {
        const auto index = dual.find(1, edge);
        if (!index)
            throw ValidationError("edge label for unknown edge '" + edge + "'");
        if (label.size() != y0_generators)
            throw ValidationError("edge label for '" + edge + "' has length " + std::to_string(label.size()) +
                                  ", expected " + std::to_string(y0_generators));
        m.col(*index) = label;
    }
    return m;
}

void validate_labels(const SncConfiguration& divisor, const EdgeLabelCochain& labels, const Pi1Input& pi1)
{
    const auto phi = frobenius_chain_map(divisor);
    const DeltaComplex& dual = phi.source();
    const FgAbelianGroup& y0 = pi1.y0.group();
    const IntMatrix l = label_matrix(dual, labels, y0.generator_count());

    for (Index e = 0; e < dual.count(1); ++e) {
        const auto& image = phi.image(1, e);
        const IntVector moved = pi1.y0.frobenius_matrix() * l.col(e);
        if (!y0.equal(IntVector(image.sign * l.col(image.index)), moved))
            throw ValidationError("edge labels are not Frobenius-equivariant at edge '" + dual.simplex(1, e).id +
                                  "' (its image is '" + dual.simplex(1, image.index).id + "')");
    }

    const Quotient theta = cokernel(component_sum(divisor, pi1).map);
    const IntMatrix around = l * dual.boundary_matrix(2);
    for (Index t = 0; t < around.cols(); ++t)
        if (!theta.group.is_zero(around.col(t)))
            throw ValidationError("labels do not descend to H1: cocycle condition fails on 2-simplex '" +
                                  dual.simplex(2, t).id + "'");
}

AlphaResult alpha_map(const SncConfiguration& divisor, const EdgeLabelCochain& labels, const Pi1Input& pi1,
                      std::uint64_t ell)
{
    validate_labels(divisor, labels, pi1);
    const auto theta = compute_theta(divisor, pi1, ell);
    const DeltaComplex dual = build_dual_complex(divisor);
    AlphaResult out;
    out.h1 = homology_group(dual, 1);
    const IntMatrix l = label_matrix(dual, labels, pi1.y0.group().generator_count());
    const FgAbelianGroup& target = theta.localized.group();
    out.map = ModuleMap(out.h1.group, target, l * out.h1.representatives);
    out.image = image_subgroup(out.map);
    out.surjective = is_surjective(out.map);
    for (Index j = 0; j < out.map.matrix().cols(); ++j)
        if (!is_torsion_element(target, out.map.matrix().col(j)))
            out.image_in_torsion = false;
    return out;
}

std::string to_string(Verdict verdict) { return verdict == Verdict::exact ? "exact" : "bound"; }

std::string to_string(Trend trend)
{
    switch (trend) {
    case Trend::stable:
        return "stable";
    case Trend::shrinking:
        return "shrinking";
    case Trend::eventually_trivial:
        return "eventually trivial";
    case Trend::varying:
        break;
    }
    return "varying";
}

KernelReport predict_kernel(const SncConfiguration& divisor, const Pi1Input& pi1, const EdgeLabelCochain& labels,
                            std::uint64_t ell, std::uint64_t f)
{
    if (f == 0)
        throw std::invalid_argument("extension degree must be positive");
    require_valid(divisor);
    KernelReport r;
    r.ell = ell;
    r.degree = f;

    const auto alpha = alpha_map(divisor, labels, pi1, ell);
    const auto extension = extension_complex(divisor, f);
    const auto h1_extension = homology_group(extension.complex, 1);
    r.h1_extension = h1_extension.group.invariants();
    r.norm_surjective = is_surjective(induced_map(extension.projection, alpha.h1, h1_extension));

    const auto theta = compute_theta(divisor, pi1, ell);
    r.theta = theta.full.group().invariants();
    r.theta_localized = theta.localized.group().invariants();
    const GaloisModule local = theta.localized.power(f);
    const Subgroup torsion = torsion_and_primary(local.group(), ell).torsion;
    r.theta_torsion = torsion.group.invariants();

    const auto y = suspension_configuration(divisor);
    std::set<std::string> seen;
    for (const auto& s : y.strata_of_depth(2)) {
        if (seen.count(s.id))
            continue;
        PointCheck check;
        std::string id = s.id;
        do {
            seen.insert(id);
            check.members.push_back(id);
            for (const auto& t : y.strata_of_depth(2))
                if (t.id == id && has_rational_point(t.point_degrees, f))
                    check.has_point = true;
            id = frobenius_stratum(y, 2, id, f);
        } while (id != s.id);
        r.rational_points.push_back(std::move(check));
    }
    r.points_assumption = true;
    for (const auto& c : r.rational_points)
        r.points_assumption = r.points_assumption && c.has_point;

    const IntMatrix& t_gens = torsion.inclusion.matrix();
    const IntMatrix moved = local.frobenius_matrix() * t_gens;
    r.trivial_action_assumption = true;
    for (Index j = 0; j < t_gens.cols(); ++j)
        if (!local.group().equal(moved.col(j), t_gens.col(j)))
            r.trivial_action_assumption = false;

    const Quotient co = coinvariants(local);
    r.composite_injective = is_injective(compose(co.projection, torsion.inclusion));

    r.alpha_image = alpha.image.group.invariants();
    r.alpha_surjective = alpha.surjective;
    r.alpha_in_torsion = alpha.image_in_torsion;
    if (!r.alpha_in_torsion)
        r.warnings.push_back("image of alpha is not contained in the torsion of Theta_" + std::to_string(ell));
    if (r.trivial_action_assumption && !r.composite_injective)
        r.warnings.push_back("torsion of Theta_" + std::to_string(ell) +
                             " does not inject into the coinvariants of Theta_" + std::to_string(ell));

    if (r.points_assumption && r.trivial_action_assumption) {
        r.verdict = Verdict::exact;
        r.predicted_kernel = r.alpha_image;
    }
    else {
        r.verdict = Verdict::bound;
        r.predicted_kernel = r.theta_torsion;
    }
    return r;
}

Sweep sweep_extensions(const SncConfiguration& divisor, const Pi1Input& pi1, const EdgeLabelCochain& labels,
                       std::uint64_t ell, std::uint64_t f_max)
{
    if (f_max == 0)
        throw std::invalid_argument("sweep bound must be positive");
    Sweep s;
    for (std::uint64_t f = 1; f <= f_max; ++f)
        s.reports.push_back(predict_kernel(divisor, pi1, labels, ell, f));

    bool constant = true, nonincreasing = true;
    for (std::size_t i = 1; i < s.reports.size(); ++i) {
        const auto& prev = s.reports[i - 1].predicted_kernel;
        const auto& next = s.reports[i].predicted_kernel;
        constant = constant && prev == next;
        nonincreasing = nonincreasing && size_of(next) <= size_of(prev);
    }
    if (constant)
        s.trend = Trend::stable;
    else if (s.reports.back().predicted_kernel.is_trivial() && nonincreasing)
        s.trend = Trend::eventually_trivial;
    else if (nonincreasing)
        s.trend = Trend::shrinking;
    else
        s.trend = Trend::varying;
    return s;
}

} // namespace snc
