#include "snc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "snc/error.hpp"
#include "snc/examples.hpp"
#include "snc/galois.hpp"
#include "snc/oracle.hpp"
#include "snc/random.hpp"

namespace snc
{

namespace
{

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Options
{
    bool json = false;
    std::string config;
    Index degree = 1;
    std::string coeff = "z";
    std::uint64_t f = 0;
    bool suspend = false;
    bool reduced = false;
    std::uint64_t ell = 0;
    std::uint64_t sweep = 0;
    std::string kind;
    std::uint64_t n = 5;
    bool cover = false;
    std::string out;
    std::uint64_t count = 100;
    std::uint64_t seed = 1;
};

struct Outcome
{
    Json results = Json::object();
    std::string human;
    int status = 0;
};

struct Loaded
{
    Document doc;
    std::string digest;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Loaded load(const std::string& path)
{
    const std::string text = read_file(path);
    return {parse_document(text), fnv1a_digest(text)};
}

std::string chain_text(const DeltaComplex& complex, Index degree, const IntVector& chain)
{
    std::ostringstream s;
    bool first = true;
    for (Index i = 0; i < chain.size(); ++i) {
        const Integer& c = chain(i);
        if (c == 0)
            continue;
        const bool negative = c < 0;
        if (first)
            s << (negative ? "-" : "");
        else
            s << (negative ? " - " : " + ");
        if (abs_value(c) != 1)
            s << abs_value(c) << " ";
        s << complex.simplex(degree, i).id;
        first = false;
    }
    return first ? "0" : s.str();
}

Json chain_json(const DeltaComplex& complex, Index degree, const IntVector& chain)
{
    Json out = Json::object();
    for (Index i = 0; i < chain.size(); ++i)
        if (chain(i) != 0)
            out[complex.simplex(degree, i).id] = integer_to_json(chain(i));
    return out;
}

Json complex_json(const DeltaComplex& complex)
{
    Json dims = Json::array();
    for (Index a = 0; a <= complex.dimension(); ++a) {
        Json list = Json::array();
        for (const auto& s : complex.simplices(a)) {
            Json vertices = Json::array(), facets = Json::array();
            for (Index v : s.vertices)
                vertices.push_back(complex.simplex(0, v).id);
            for (Index f : s.facets)
                facets.push_back(complex.simplex(a - 1, f).id);
            list.push_back(Json{{"id", s.id}, {"vertices", vertices}, {"facets", facets}});
        }
        dims.push_back(std::move(list));
    }
    return Json{{"dimension", complex.dimension()},
                {"counts", complex.counts()},
                {"euler_characteristic", integer_to_json(complex.euler_characteristic())},
                {"simplices", dims}};
}

std::string complex_text(const DeltaComplex& complex)
{
    std::ostringstream s;
    s << "dimension " << complex.dimension() << ", simplex counts";
    for (Index c : complex.counts())
        s << " " << c;
    s << ", euler characteristic " << complex.euler_characteristic() << "\n";
    for (Index a = 0; a <= complex.dimension(); ++a) {
        for (const auto& simplex : complex.simplices(a)) {
            s << "  " << a << "-simplex " << simplex.id;
            if (a > 0) {
                s << " [";
                for (std::size_t i = 0; i < simplex.vertices.size(); ++i)
                    s << (i ? " " : "") << complex.simplex(0, simplex.vertices[i]).id;
                s << "]";
            }
            s << "\n";
        }
    }
    return s.str();
}

Json homology_json(const DeltaComplex& complex, const HomologyResult& h)
{
    Json reps = Json::array();
    for (Index j = 0; j < h.representatives.cols(); ++j)
        reps.push_back(chain_json(complex, h.degree, h.representatives.col(j)));
    return Json{{"degree", h.degree},
                {"coefficients", h.coefficients.to_string()},
                {"reduced", h.reduced},
                {"group", invariants_to_json(h.group.invariants())},
                {"representatives", reps}};
}

std::string homology_label(Index degree, const Coefficients& c, bool reduced, const std::string& space = "Γ")
{
    return std::string(reduced ? "~H_" : "H_") + std::to_string(degree) + "(" + space + "; " +
           (c.is_integral() ? "Z" : "Z/" + std::to_string(c.modulus)) + ")";
}

Json map_json(const ModuleMap& m)
{
    return Json{{"source", invariants_to_json(m.source().invariants())},
                {"target", invariants_to_json(m.target().invariants())},
                {"matrix", matrix_to_json(m.matrix())}};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Outcome cmd_validate(const Options& o, std::string& digest)
{
    auto loaded = load(o.config);
    digest = loaded.digest;
    const auto& cfg = loaded.doc.config;
    Outcome r;
    Json strata = Json::object();
    std::ostringstream s;
    s << "valid: " << (cfg.name.empty() ? o.config : cfg.name) << " (" << cfg.components.size() << " components";
    for (const auto& [depth, list] : cfg.strata) {
        strata[std::to_string(depth)] = list.size();
        s << ", " << list.size() << " strata of depth " << depth;
    }
    s << ")\n";
    r.results = Json{{"valid", true},
                     {"name", cfg.name},
                     {"components", cfg.components.size()},
                     {"strata", strata},
                     {"frobenius_order", cfg.frobenius ? cfg.frobenius->order : 1}};
    r.human = s.str();
    return r;
}

Outcome cmd_dual_complex(const Options& o, std::string& digest)
{
    auto loaded = load(o.config);
    digest = loaded.digest;
    const auto& cfg = loaded.doc.config;
    const DeltaComplex complex = o.f ? extension_complex(cfg, o.f).complex : build_dual_complex(cfg);
    Outcome r;
    r.results = complex_json(complex);
    r.results["extension_degree"] = o.f ? Json(o.f) : Json(nullptr);
    r.human = std::string(o.f ? "dual complex over F_" + std::to_string(o.f) : "dual complex over the algebraic closure") +
              ": " + complex_text(complex);
    return r;
}

Outcome cmd_homology(const Options& o, std::string& digest)
{
    auto loaded = load(o.config);
    digest = loaded.digest;
    const auto coeff = Coefficients::parse(o.coeff);
    DeltaComplex complex = o.f ? extension_complex(loaded.doc.config, o.f).complex
                               : build_dual_complex(loaded.doc.config);
    if (o.suspend)
        complex = suspend(complex);
    if (o.degree < 0)
        throw UsageError("degree must be non-negative");
    const auto h = o.reduced ? reduced_homology_group(complex, o.degree, coeff)
                             : homology_group(complex, o.degree, coeff);
    Outcome r;
    r.results = homology_json(complex, h);
    r.results["suspended"] = o.suspend;
    r.results["extension_degree"] = o.f ? Json(o.f) : Json(nullptr);
    std::ostringstream s;
    s << homology_label(o.degree, coeff, o.reduced) << " of " << (o.suspend ? "the suspension of " : "")
      << "the dual complex: " << h.group.invariants().to_string() << "\n";
    for (Index j = 0; j < h.representatives.cols(); ++j) {
        const auto& order = h.group.relations().cols() > j ? h.group.relations()(j, j) : Integer(0);
        s << "  generator " << j + 1 << " (" << (order == 0 ? std::string("infinite order") : "order " + to_string(order))
          << "): " << chain_text(complex, o.degree, h.representatives.col(j)) << "\n";
    }
    r.human = s.str();
    return r;
}

Outcome cmd_suspend(const Options& o, std::string& digest)
{
    auto loaded = load(o.config);
    digest = loaded.digest;
    const auto coeff = Coefficients::parse(o.coeff);
    const auto& cfg = loaded.doc.config;
    const DeltaComplex base = build_dual_complex(cfg);
    const DeltaComplex s = suspend(base);
    const bool matches = build_dual_complex(suspension_configuration(cfg)) == s;
    Outcome r;
    Json degrees = Json::array();
    std::ostringstream text;
    text << "suspension: " << complex_text(s);
    text << "dual complex of (Y0 x O) u (Y0 x inf) u (D x P1) equals the suspension: " << yes_no(matches) << "\n";
    for (Index a = 0; a <= base.dimension(); ++a) {
        const auto upper = homology_group(s, a + 1, coeff).group.invariants();
        const auto lower = reduced_homology_group(base, a, coeff).group.invariants();
        degrees.push_back(Json{{"degree", a},
                               {"suspension", invariants_to_json(upper)},
                               {"reduced_base", invariants_to_json(lower)},
                               {"isomorphic", upper == lower}});
        text << "  " << homology_label(a + 1, coeff, false, "SΓ") << " = " << upper.to_string() << ", "
             << homology_label(a, coeff, true) << " = " << lower.to_string() << "\n";
    }
    r.results = Json{{"complex", complex_json(s)},
                     {"matches_configuration", matches},
                     {"coefficients", coeff.to_string()},
                     {"suspension_isomorphism", degrees}};
    r.human = text.str();
    return r;
}

Outcome cmd_extend(const Options& o, std::string& digest)
{
    auto loaded = load(o.config);
    digest = loaded.digest;
    if (o.f == 0)
        throw UsageError("--f is required");
    const auto ext = extension_complex(loaded.doc.config, o.f);
    Outcome r;
    Json projection = Json::array();
    std::ostringstream s;
    s << "extension of degree " << o.f << ": " << complex_text(ext.complex) << "norm chain map:\n";
    const auto& cover = ext.projection.source();
    for (Index a = 0; a <= cover.dimension(); ++a) {
        Json list = Json::array();
        for (Index i = 0; i < cover.count(a); ++i) {
            const auto& im = ext.projection.image(a, i);
            const auto& to = ext.complex.simplex(a, im.index).id;
            list.push_back(Json{{"from", cover.simplex(a, i).id}, {"to", to}, {"sign", im.sign}});
            s << "  " << cover.simplex(a, i).id << " -> " << (im.sign < 0 ? "-" : "") << to << "\n";
        }
        projection.push_back(std::move(list));
    }
    r.results = Json{{"extension_degree", o.f}, {"complex", complex_json(ext.complex)}, {"projection", projection}};
    r.human = s.str();
    return r;
}

Outcome cmd_norm(const Options& o, std::string& digest)
{
    auto loaded = load(o.config);
    digest = loaded.digest;
    const auto& cfg = loaded.doc.config;
    const auto coeff = Coefficients::parse(o.coeff);
    const std::uint64_t f = o.f ? o.f : (cfg.frobenius ? cfg.frobenius->order : 1);
    const auto norm = norm_map(cfg, f, o.degree, coeff);
    const auto co = cokernel(norm.map).group.invariants();
    Outcome r;
    r.results = map_json(norm.map);
    r.results["extension_degree"] = f;
    r.results["degree"] = o.degree;
    r.results["coefficients"] = coeff.to_string();
    r.results["image"] = invariants_to_json(norm.image.group.invariants());
    r.results["cokernel"] = invariants_to_json(co);
    r.results["surjective"] = co.is_trivial();
    std::ostringstream s;
    s << "norm map " << homology_label(o.degree, coeff, false) << " over F_" << f << " -> over k: "
      << norm.map.source().invariants().to_string() << " -> " << norm.map.target().invariants().to_string() << "\n"
      << "  matrix " << matrix_to_json(norm.map.matrix()).dump() << "\n"
      << "  image " << norm.image.group.invariants().to_string() << ", cokernel " << co.to_string() << "\n";
    r.human = s.str();
    return r;
}

std::uint64_t require_ell(const Options& o)
{
    if (o.ell == 0)
        throw UsageError("--ell is required");
    if (!is_prime(o.ell))
        throw UsageError("--ell must be prime, got " + std::to_string(o.ell));
    return o.ell;
}

Outcome cmd_theta(const Options& o, std::string& digest)
{
    auto loaded = load(o.config);
    digest = loaded.digest;
    const auto ell = require_ell(o);
    const std::uint64_t f = o.f ? o.f : 1;
    const auto theta = compute_theta(loaded.doc.config, loaded.doc.pi1, ell);
    const auto local = theta.localized.power(f);
    const auto torsion = torsion_and_primary(local.group(), ell).torsion;
    const IntMatrix moved = local.frobenius_matrix() * torsion.inclusion.matrix();
    bool trivial = true;
    for (Index j = 0; j < moved.cols(); ++j)
        trivial = trivial && local.group().equal(moved.col(j), torsion.inclusion.matrix().col(j));
    Outcome r;
    r.results = Json{{"ell", ell},
                     {"extension_degree", f},
                     {"theta", invariants_to_json(theta.full.group().invariants())},
                     {"theta_ell", invariants_to_json(local.group().invariants())},
                     {"frobenius", matrix_to_json(local.frobenius_matrix())},
                     {"torsion", invariants_to_json(torsion.group.invariants())},
                     {"acts_trivially", local.acts_trivially()},
                     {"acts_trivially_on_torsion", trivial}};
    std::ostringstream s;
    s << "Theta = " << theta.full.group().invariants().to_string() << "\n"
      << "Theta_" << ell << " = " << local.group().invariants().to_string() << ", torsion "
      << torsion.group.invariants().to_string() << "\n"
      << "Frobenius^" << f << " " << matrix_to_json(local.frobenius_matrix()).dump() << ", trivial on torsion: "
      << yes_no(trivial) << "\n";
    r.human = s.str();
    return r;
}

Outcome cmd_alpha(const Options& o, std::string& digest)
{
    auto loaded = load(o.config);
    digest = loaded.digest;
    const auto ell = require_ell(o);
    const auto alpha = alpha_map(loaded.doc.config, loaded.doc.labels, loaded.doc.pi1, ell);
    const DeltaComplex dual = build_dual_complex(loaded.doc.config);
    Outcome r;
    r.results = map_json(alpha.map);
    r.results["ell"] = ell;
    r.results["h1"] = homology_json(dual, alpha.h1);
    r.results["image"] = invariants_to_json(alpha.image.group.invariants());
    r.results["surjective"] = alpha.surjective;
    r.results["image_in_torsion"] = alpha.image_in_torsion;
    std::ostringstream s;
    s << "alpha: H_1 = " << alpha.h1.group.invariants().to_string() << " -> Theta_" << ell << " = "
      << alpha.map.target().invariants().to_string() << "\n";
    for (Index j = 0; j < alpha.h1.representatives.cols(); ++j)
        s << "  " << chain_text(dual, 1, alpha.h1.representatives.col(j)) << " -> "
          << matrix_to_json(IntMatrix(alpha.map.matrix().col(j))).dump() << "\n";
    s << "  image " << alpha.image.group.invariants().to_string() << ", surjective " << yes_no(alpha.surjective)
      << ", inside the torsion " << yes_no(alpha.image_in_torsion) << "\n";
    r.human = s.str();
    return r;
}

Json kernel_json(const KernelReport& k)
{
    Json points = Json::array();
    for (const auto& p : k.rational_points)
        points.push_back(Json{{"members", p.members}, {"has_point", p.has_point}});
    return Json{{"extension_degree", k.degree},
                {"ell", k.ell},
                {"h1_extension", invariants_to_json(k.h1_extension)},
                {"norm_surjective", k.norm_surjective},
                {"theta", invariants_to_json(k.theta)},
                {"theta_ell", invariants_to_json(k.theta_localized)},
                {"theta_ell_torsion", invariants_to_json(k.theta_torsion)},
                {"assumptions",
                 Json{{"rational_points", points},
                      {"points", k.points_assumption},
                      {"trivial_action_on_torsion", k.trivial_action_assumption}}},
                {"composite_injective", k.composite_injective},
                {"alpha", Json{{"image", invariants_to_json(k.alpha_image)},
                               {"surjective", k.alpha_surjective},
                               {"image_in_torsion", k.alpha_in_torsion}}},
                {"verdict", to_string(k.verdict)},
                {"predicted_kernel", invariants_to_json(k.predicted_kernel)},
                {"warnings", k.warnings}};
}

Outcome cmd_kernel(const Options& o, std::string& digest)
{
    auto loaded = load(o.config);
    digest = loaded.digest;
    const auto ell = require_ell(o);
    const auto& d = loaded.doc;
    std::vector<KernelReport> reports;
    std::optional<Trend> trend;
    if (o.sweep) {
        auto sweep = sweep_extensions(d.config, d.pi1, d.labels, ell, o.sweep);
        reports = std::move(sweep.reports);
        trend = sweep.trend;
    }
    else {
        reports.push_back(predict_kernel(d.config, d.pi1, d.labels, ell, o.f ? o.f : 1));
    }
    Outcome r;
    Json list = Json::array();
    std::ostringstream s;
    s << "kernel prediction for " << (d.config.name.empty() ? o.config : d.config.name) << ", ell = " << ell << "\n";
    s << std::left << std::setw(4) << "f" << std::setw(12) << "H1(D_F)" << std::setw(12) << "Theta_l" << std::setw(12)
      << "torsion" << std::setw(6) << "(i)" << std::setw(6) << "(ii)" << std::setw(8) << "verdict"
      << "G(Y){l}\n";
    for (const auto& k : reports) {
        list.push_back(kernel_json(k));
        s << std::setw(4) << k.degree << std::setw(12) << k.h1_extension.to_string() << std::setw(12)
          << k.theta_localized.to_string() << std::setw(12) << k.theta_torsion.to_string() << std::setw(6)
          << yes_no(k.points_assumption) << std::setw(6) << yes_no(k.trivial_action_assumption) << std::setw(8)
          << to_string(k.verdict) << (k.verdict == Verdict::bound ? "subquotient of " : "")
          << k.predicted_kernel.to_string() << "\n";
        if (!k.norm_surjective)
            s << "    f = " << k.degree << ": norm map on H1 is not surjective, G(Y) may be smaller than Ker(rho)\n";
        for (const auto& w : k.warnings)
            s << "    warning (f = " << k.degree << "): " << w << "\n";
    }
    r.results = Json{{"ell", ell}, {"reports", list}};
    if (trend) {
        r.results["trend"] = to_string(*trend);
        s << "trend: " << to_string(*trend) << "\n";
    }
    r.human = s.str();
    return r;
}

Outcome cmd_example(const Options& o, std::string& digest)
{
    digest = fnv1a_digest("example " + o.kind + " " + std::to_string(o.n) + (o.cover ? " cover" : ""));
    if (o.kind == "rulings" && o.cover)
        throw UsageError("--cover applies to the fermat example only");
    Example ex;
    try {
        ex = generate_example(o.kind, o.n);
    }
    catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const Json doc = o.cover ? config_to_json(*ex.cover) : to_json(ex.document);
    Outcome r;
    r.results = Json{{"kind", o.kind}, {"document", doc}, {"notes", ex.notes}};
    if (o.kind == "fermat")
        r.results["n"] = o.n;
    if (!o.out.empty()) {
        std::ofstream out(o.out);
        if (!out)
            throw UsageError("cannot write '" + o.out + "'");
        out << doc.dump(2) << "\n";
        r.results["written"] = o.out;
        r.human = "wrote " + o.out + "\n";
    }
    else {
        r.human = doc.dump(2) + "\n";
    }
    return r;
}

Outcome cmd_oracle_check(const Options& o, std::string& digest)
{
    std::vector<DeltaComplex> complexes;
    if (!o.config.empty()) {
        auto loaded = load(o.config);
        digest = loaded.digest;
        complexes.push_back(build_dual_complex(loaded.doc.config));
        complexes.push_back(suspend(complexes.front()));
    }
    else {
        digest = fnv1a_digest("oracle-check " + std::to_string(o.count) + " " + std::to_string(o.seed));
        Rng rng(o.seed);
        for (std::uint64_t i = 0; i < o.count; ++i)
            complexes.push_back(random_delta_complex(rng, 8, 2));
    }
    Outcome r;
    Json mismatches = Json::array();
    std::size_t checks = 0;
    for (std::size_t c = 0; c < complexes.size(); ++c) {
        for (std::uint64_t p : {2, 3, 5}) {
            for (Index a = 0; a <= complexes[c].dimension(); ++a) {
                const Index expected = oracle_homology(complexes[c], a, p);
                const Index computed = fp_dimension(complexes[c], a, p);
                ++checks;
                if (expected != computed)
                    mismatches.push_back(Json{{"complex", c}, {"p", p}, {"degree", a}, {"oracle", expected},
                                              {"snf", computed}});
            }
        }
    }
    r.results = Json{{"complexes", complexes.size()}, {"checks", checks}, {"mismatches", mismatches}};
    r.status = mismatches.empty() ? 0 : 1;
    r.human = "oracle check: " + std::to_string(checks) + " comparisons on " + std::to_string(complexes.size()) +
              " complexes, " + std::to_string(mismatches.size()) + " mismatches\n";
    return r;
}

} // namespace

std::string fnv1a_digest(const std::string& bytes)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << h;
    return s.str();
}

Json report_to_json(const RunReport& report)
{
    return Json{{"command", report.command},
                {"inputs_digest", report.inputs_digest},
                {"results", report.results},
                {"exit_status", report.exit_status}};
}

RunReport report_from_json(const Json& json)
{
    RunReport r;
    r.command = json.at("command").get<std::string>();
    r.inputs_digest = json.at("inputs_digest").get<std::string>();
    r.results = json.at("results");
    r.exit_status = json.at("exit_status").get<int>();
    return r;
}

CommandResult run_command(const std::vector<std::string>& args)
{
    Options o;
    CLI::App app{"Dual complexes, norm maps and reciprocity kernels of SNC configurations", "snc"};
    app.add_flag("--json", o.json, "emit the machine-readable report");
    app.require_subcommand(1);
    app.fallthrough();

    auto config_arg = [&](CLI::App* sub) { sub->add_option("config", o.config, "configuration document")->required(); };

    auto* validate = app.add_subcommand("validate", "check a configuration document");
    config_arg(validate);
    auto* dual = app.add_subcommand("dual-complex", "print the dual complex");
    config_arg(dual);
    dual->add_option("--f", o.f, "over the degree-f extension instead of the algebraic closure");
    auto* homology = app.add_subcommand("homology", "homology of the dual complex");
    config_arg(homology);
    homology->add_option("--degree", o.degree, "homological degree")->required();
    homology->add_option("--coeff", o.coeff, "z or z/N");
    homology->add_option("--f", o.f, "over the degree-f extension");
    homology->add_flag("--suspend", o.suspend, "of the suspension");
    homology->add_flag("--reduced", o.reduced, "reduced homology");
    auto* susp = app.add_subcommand("suspend", "suspension and the suspension isomorphism");
    config_arg(susp);
    susp->add_option("--coeff", o.coeff, "z or z/N");
    auto* extend = app.add_subcommand("extend", "quotient complex over the degree-f extension");
    config_arg(extend);
    extend->add_option("--f", o.f, "extension degree")->required();
    auto* norm = app.add_subcommand("norm", "norm map on homology");
    config_arg(norm);
    norm->add_option("--degree", o.degree, "homological degree")->required();
    norm->add_option("--f", o.f, "extension degree (default: the Frobenius order)");
    norm->add_option("--coeff", o.coeff, "z or z/N");
    auto* theta = app.add_subcommand("theta", "the module Theta_l");
    config_arg(theta);
    theta->add_option("--ell", o.ell, "prime l")->required();
    theta->add_option("--f", o.f, "extension degree");
    auto* alpha = app.add_subcommand("alpha", "the map alpha");
    config_arg(alpha);
    alpha->add_option("--ell", o.ell, "prime l")->required();
    auto* kernel = app.add_subcommand("kernel", "predicted kernel of the reciprocity map");
    config_arg(kernel);
    kernel->add_option("--ell", o.ell, "prime l")->required();
    kernel->add_option("--sweep", o.sweep, "report every extension degree 1..F_MAX");
    kernel->add_option("--f", o.f, "single extension degree");
    auto* example = app.add_subcommand("example", "write a bundled example document");
    example->add_option("kind", o.kind, "rulings or fermat")->required()->check(CLI::IsMember({"rulings", "fermat"}));
    example->add_option("--n", o.n, "n for the fermat example");
    example->add_flag("--cover", o.cover, "the cover configuration (fermat)");
    example->add_option("--out", o.out, "output file");
    auto* oracle = app.add_subcommand("oracle-check", "compare F_p homology with the elimination oracle");
    oracle->add_option("config", o.config, "configuration document (random complexes when absent)");
    oracle->add_option("--count", o.count, "number of random complexes");
    oracle->add_option("--seed", o.seed, "random seed");

    CommandResult result;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&) {
        result.out = app.help();
        return result;
    }
    catch (const CLI::ParseError& e) {
        const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        result.report.command = sub == &app ? "" : sub->get_name();
        result.report.exit_status = 2;
        result.report.results = Json{{"error", e.what()}};
        result.err = std::string("error: ") + e.what() + "\n" + sub->help();
        if (o.json)
            result.out = report_to_json(result.report).dump(2) + "\n";
        return result;
    }

    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    result.report.command = name;
    Outcome outcome;
    std::string digest = fnv1a_digest("");
    try {
        if (name == "validate")
            outcome = cmd_validate(o, digest);
        else if (name == "dual-complex")
            outcome = cmd_dual_complex(o, digest);
        else if (name == "homology")
            outcome = cmd_homology(o, digest);
        else if (name == "suspend")
            outcome = cmd_suspend(o, digest);
        else if (name == "extend")
            outcome = cmd_extend(o, digest);
        else if (name == "norm")
            outcome = cmd_norm(o, digest);
        else if (name == "theta")
            outcome = cmd_theta(o, digest);
        else if (name == "alpha")
            outcome = cmd_alpha(o, digest);
        else if (name == "kernel")
            outcome = cmd_kernel(o, digest);
        else if (name == "example")
            outcome = cmd_example(o, digest);
        else
            outcome = cmd_oracle_check(o, digest);
    }
    catch (const ValidationError& e) {
        outcome = Outcome{Json{{"error", e.what()}}, "", 1};
        result.err = std::string("validation error: ") + e.what() + "\n";
    }
    catch (const std::length_error& e) {
        outcome = Outcome{Json{{"error", e.what()}}, "", 1};
        result.err = std::string("error: ") + e.what() + "\n";
    }
    catch (const UsageError& e) {
        outcome = Outcome{Json{{"error", e.what()}}, "", 2};
        result.err = std::string("usage error: ") + e.what() + "\n" + sub->help();
    }
    catch (const std::invalid_argument& e) {
        outcome = Outcome{Json{{"error", e.what()}}, "", 2};
        result.err = std::string("usage error: ") + e.what() + "\n" + sub->help();
    }
    result.report.inputs_digest = digest;
    result.report.results = std::move(outcome.results);
    result.report.exit_status = outcome.status;
    if (o.json)
        result.out = report_to_json(result.report).dump(2) + "\n";
    else
        result.out = outcome.human;
    return result;
}

} // namespace snc
