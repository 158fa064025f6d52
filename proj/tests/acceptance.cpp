// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "snc/cli.hpp"
#include "snc/examples.hpp"
#include "snc/galois.hpp"
#include "snc/io.hpp"
#include "snc/oracle.hpp"
#include "snc/random.hpp"

using namespace snc;
namespace fs = std::filesystem;

namespace
{

struct Outcome
{
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

fs::path work_dir()
{
    static const fs::path dir = [] {
        auto p = fs::temp_directory_path() / ("snc-acceptance-" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& text)
{
    const auto path = work_dir() / name;
    std::ofstream(path) << text;
    return path.string();
}

Json run_json(std::vector<std::string> args, Outcome& out)
{
    args.insert(args.begin(), "--json");
    const auto r = run_command(args);
    if (r.report.exit_status != 0) {
        out.fail(args[1] + " exited " + std::to_string(r.report.exit_status) + ": " + r.err);
        return Json::object();
    }
    return Json::parse(r.out);
}

Json group_json(std::initializer_list<int> torsion, int rank)
{
    return Json{{"invariant_factors", Json(std::vector<int>(torsion))}, {"free_rank", rank}};
}

bool same_group(const Json& g, const Json& expected)
{
    return g.is_object() && g["invariant_factors"] == expected["invariant_factors"] &&
           g["free_rank"] == expected["free_rank"];
}

Integer power(const Integer& b, Index e)
{
    Integer out = 1;
    for (Index i = 0; i < e; ++i)
        out *= b;
    return out;
}

// Fraction-free elimination.
Integer bareiss_determinant(IntMatrix m)
{
    const Index n = m.rows();
    Integer sign = 1;
    Integer previous = 1;
    for (Index k = 0; k < n; ++k) {
        if (m(k, k) == 0) {
            Index swap = k + 1;
            while (swap < n && m(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            m.row(k).swap(m.row(swap));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i)
            for (Index j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
        previous = m(k, k);
    }
    return n == 0 ? Integer(1) : Integer(sign * m(n - 1, n - 1));
}

// Criteria 3, 4 and 7 share their complexes.
std::vector<DeltaComplex> suspension_complexes()
{
    Rng rng(2024);
    std::vector<DeltaComplex> out;
    for (int i = 0; i < 50; ++i)
        out.push_back(random_delta_complex(rng, 6, 2));
    return out;
}

std::vector<DeltaComplex> oracle_complexes()
{
    Rng rng(4048);
    std::vector<DeltaComplex> out;
    for (int i = 0; i < 100; ++i)
        out.push_back(random_delta_complex(rng, 8, 2));
    return out;
}

Outcome rulings_end_to_end()
{
    Outcome out;
    const auto file = (work_dir() / "rulings.json").string();
    if (run_command({"example", "rulings", "--out", file}).report.exit_status != 0) {
        out.fail("example rulings failed");
        return out;
    }
    for (int ell : {2, 3, 5}) {
        const auto j = run_json({"kernel", file, "--ell", std::to_string(ell), "--sweep", "3"}, out);
        if (!out.pass)
            return out;
        const auto& reports = j["results"]["reports"];
        if (reports.size() != 3)
            out.fail("expected 3 reports");
        for (const auto& r : reports) {
            const std::string at = "ell=" + std::to_string(ell) + " f=" + r["extension_degree"].dump();
            if (!same_group(r["h1_extension"], group_json({}, 1)))
                out.fail(at + ": H1 = " + r["h1_extension"]["text"].get<std::string>());
            if (!same_group(r["theta_ell"], group_json({}, 0)))
                out.fail(at + ": Theta_l = " + r["theta_ell"]["text"].get<std::string>());
            if (!same_group(r["predicted_kernel"], group_json({}, 0)))
                out.fail(at + ": kernel = " + r["predicted_kernel"]["text"].get<std::string>());
        }
    }
    out.detail = out.pass ? "H1 = Z, Theta_l = 0, kernel 0 for l in {2,3,5}, f = 1..3" : out.detail;
    return out;
}

Outcome fermat_end_to_end()
{
    Outcome out;
    for (int n : {5, 3, 7}) {
        const auto ex = fermat_example(static_cast<std::uint64_t>(n));
        const auto cover = build_dual_complex(*ex.cover);
        const auto tag = "n=" + std::to_string(n) + ": ";
        if (cover.counts() != std::vector<Index>{2 * n, 2 * n} ||
            homology_group(cover, 0).group.invariants() != GroupInvariants{{}, 1} ||
            homology_group(cover, 1).group.invariants() != GroupInvariants{{}, 1})
            out.fail(tag + "cover complex is not a " + std::to_string(2 * n) + "-cycle");
        for (Index v = 0; v < cover.count(0); ++v) {
            Index degree = 0;
            for (const auto& e : cover.simplices(1))
                degree += std::count(e.vertices.begin(), e.vertices.end(), v);
            if (degree != 2)
                out.fail(tag + "cover vertex of degree " + std::to_string(degree));
        }

        const auto file = write_file("fermat" + std::to_string(n) + ".json", to_json(ex.document).dump(2));
        const auto dual = run_json({"dual-complex", file}, out);
        if (!out.pass)
            return out;
        if (dual["results"]["counts"] != Json::array({2, 2}))
            out.fail(tag + "quotient is not 2 vertices and 2 edges");
        const auto h1 = run_json({"homology", file, "--degree", "1", "--coeff", "z"}, out);
        if (!same_group(h1["results"]["group"], group_json({}, 1)))
            out.fail(tag + "quotient H1 is not Z");

        const auto j = run_json({"kernel", file, "--ell", std::to_string(n), "--sweep", "4"}, out);
        if (!out.pass)
            return out;
        const auto& reports = j["results"]["reports"];
        if (reports.size() != 4)
            out.fail(tag + "expected 4 reports");
        for (const auto& r : reports) {
            const std::string at = tag + "f=" + r["extension_degree"].dump() + ": ";
            if (!same_group(r["theta_ell"], group_json({n}, 0)))
                out.fail(at + "Theta_l = " + r["theta_ell"]["text"].get<std::string>());
            if (r["assumptions"]["trivial_action_on_torsion"] != true)
                out.fail(at + "Frobenius is not trivial on Theta_l");
            if (r["alpha"]["surjective"] != true)
                out.fail(at + "alpha is not surjective");
            if (r["verdict"] != "exact")
                out.fail(at + "verdict " + r["verdict"].dump());
            if (!same_group(r["predicted_kernel"], group_json({n}, 0)))
                out.fail(at + "kernel = " + r["predicted_kernel"]["text"].get<std::string>());
        }
    }
    out.detail = out.pass ? "2n-cycle cover, 2-gon quotient, exact Z/n for f = 1..4, n in {5,3,7}" : out.detail;
    return out;
}

Outcome suspension_isomorphism(const std::vector<DeltaComplex>& complexes)
{
    Outcome out;
    std::size_t checks = 0;
    for (std::size_t i = 0; i < complexes.size(); ++i) {
        const auto& g = complexes[i];
        const auto s = suspend(g);
        const auto tag = "complex " + std::to_string(i) + ": ";
        for (std::uint64_t n : {2, 3, 4, 6}) {
            const auto coeff = Coefficients::modulo(n);
            ++checks;
            if (homology_group(s, 2, coeff).group.invariants() != homology_group(g, 1, coeff).group.invariants())
                out.fail(tag + "H2(SG; Z/" + std::to_string(n) + ") differs from H1(G; Z/" + std::to_string(n) + ")");
        }
        for (Index a = 0; a <= 1; ++a) {
            ++checks;
            if (homology_group(s, a + 1).group.invariants() != reduced_homology_group(g, a).group.invariants())
                out.fail(tag + "H" + std::to_string(a + 1) + "(SG; Z) differs from reduced H" + std::to_string(a));
        }
    }
    if (out.pass)
        out.detail = std::to_string(complexes.size()) + " complexes, " + std::to_string(checks) + " comparisons";
    return out;
}

Outcome oracle_equivalence(const std::vector<DeltaComplex>& complexes)
{
    Outcome out;
    std::size_t checks = 0;
    for (std::size_t i = 0; i < complexes.size(); ++i) {
        const auto& c = complexes[i];
        for (std::uint64_t p : {2, 3, 5}) {
            for (Index a = 0; a <= c.dimension(); ++a) {
                ++checks;
                const auto h = homology_group(c, a, Coefficients::modulo(p)).group.invariants();
                const auto dim = static_cast<Index>(h.torsion.size()) + h.free_rank;
                const auto expected = oracle_homology(c, a, p);
                if (dim != expected)
                    out.fail("complex " + std::to_string(i) + ", p=" + std::to_string(p) + ", degree " +
                             std::to_string(a) + ": " + std::to_string(dim) + " vs oracle " +
                             std::to_string(expected));
            }
        }
    }
    if (out.pass)
        out.detail = std::to_string(checks) + " dimensions, 0 mismatches";
    return out;
}

Outcome smith_contract()
{
    Outcome out;
    Rng rng(777);
    std::uniform_int_distribution<Index> size(1, 8);
    for (int t = 0; t < 200; ++t) {
        const IntMatrix a = random_matrix(rng, size(rng), size(rng), 9);
        const auto snf = smith_normal_form(a);
        const auto tag = "matrix " + std::to_string(t) + ": ";
        if (IntMatrix(snf.U * a * snf.V) != snf.D)
            out.fail(tag + "U A V != D");
        if (abs_value(bareiss_determinant(snf.U)) != 1 || abs_value(bareiss_determinant(snf.V)) != 1)
            out.fail(tag + "transform not unimodular");
        for (Index i = 0; i < snf.D.rows(); ++i)
            for (Index j = 0; j < snf.D.cols(); ++j)
                if (i != j && snf.D(i, j) != 0)
                    out.fail(tag + "D is not diagonal");
        for (Index i = 0; i < snf.rank; ++i) {
            if (snf.D(i, i) <= 0)
                out.fail(tag + "non-positive invariant factor");
            if (i + 1 < snf.rank && snf.D(i + 1, i + 1) % snf.D(i, i) != 0)
                out.fail(tag + "divisibility chain broken");
        }
        for (Index i = snf.rank; i < std::min(snf.D.rows(), snf.D.cols()); ++i)
            if (snf.D(i, i) != 0)
                out.fail(tag + "nonzero entry past the rank");
    }
    if (out.pass)
        out.detail = "200 matrices up to 8x8, 0 failures";
    return out;
}

Outcome tower_functoriality()
{
    Outcome out;
    Rng rng(99);
    const std::vector<std::uint64_t> orders{2, 3, 4, 6};
    std::size_t towers = 0;
    for (int t = 0; t < 20; ++t) {
        const auto e = orders[static_cast<std::size_t>(t) % orders.size()];
        const auto cfg = random_equivariant_configuration(rng, e, 4);
        const auto tag = "action " + std::to_string(t) + " (e=" + std::to_string(e) + "): ";
        for (std::uint64_t upper = 1; upper <= 2 * e; ++upper) {
            if ((2 * e) % upper != 0)
                continue;
            for (std::uint64_t mid = 1; mid <= upper; ++mid) {
                if (upper % mid != 0)
                    continue;
                ++towers;
                const auto direct = extension_chain_map(cfg, upper, 1);
                const auto top = extension_chain_map(cfg, upper, mid);
                const auto bottom = extension_chain_map(cfg, mid, 1);
                const auto via = compose(bottom, top);
                const auto where = tag + std::to_string(mid) + " | " + std::to_string(upper);
                if (!(via == direct))
                    out.fail(where + ": chain maps differ");
                for (Index a = 0; a <= 1; ++a)
                    if (!induced_map(direct, a).equals(compose(induced_map(bottom, a), induced_map(top, a))))
                        out.fail(where + ": maps on H" + std::to_string(a) + " differ");
            }
        }
    }
    if (out.pass)
        out.detail = "20 actions, " + std::to_string(towers) + " towers on chains, H0 and H1";
    return out;
}

Outcome universal_coefficients(const std::vector<DeltaComplex>& first, const std::vector<DeltaComplex>& second)
{
    Outcome out;
    std::size_t checks = 0;
    std::vector<DeltaComplex> all = first;
    all.insert(all.end(), second.begin(), second.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& c = all[i];
        for (std::uint64_t n : {2, 3, 4, 6}) {
            const Integer m = n;
            for (Index a = 0; a <= c.dimension(); ++a) {
                ++checks;
                const auto top = homology_group(c, a).group.invariants();
                const auto below = homology_group(c, a - 1).group.invariants();
                Integer expected = power(m, top.free_rank);
                for (const auto& d : top.torsion)
                    expected *= gcd(d, m);
                for (const auto& d : below.torsion)
                    expected *= gcd(d, m);
                const auto actual = homology_group(c, a, Coefficients::modulo(n)).group.invariants().order();
                if (actual != expected)
                    out.fail("complex " + std::to_string(i) + ", degree " + std::to_string(a) + ", n=" +
                             std::to_string(n));
            }
        }
    }
    if (out.pass)
        out.detail = std::to_string(all.size()) + " complexes, " + std::to_string(checks) + " identities";
    return out;
}

Document collapsing_document()
{
    Document doc;
    auto& cfg = doc.config;
    cfg.name = "collapsing rotation";
    FrobeniusAction action;
    action.order = 4;
    for (int i = 0; i < 4; ++i) {
        const std::string v = "v" + std::to_string(i);
        cfg.components.push_back({v, {1}});
        cfg.strata[2].push_back({"e" + std::to_string(i), {v, "v" + std::to_string((i + 1) % 4)}, std::nullopt, {1}});
        action.components[v] = "v" + std::to_string((i + 1) % 4);
        action.strata[2]["e" + std::to_string(i)] = "e" + std::to_string((i + 1) % 4);
    }
    cfg.frobenius = action;
    doc.pi1.y0 = GaloisModule::trivial_action(FgAbelianGroup::free(0));
    return doc;
}

Json non_cocycle_document()
{
    Document doc;
    auto& cfg = doc.config;
    cfg.name = "triangle";
    cfg.components = {{"A", {1}}, {"B", {1}}, {"C", {1}}};
    cfg.strata[2] = {{"ab", {"A", "B"}, std::nullopt, {1}},
                     {"ac", {"A", "C"}, std::nullopt, {1}},
                     {"bc", {"B", "C"}, std::nullopt, {1}}};
    cfg.strata[3] = {{"t", {"A", "B", "C"}, std::nullopt, {1}}};
    doc.pi1.y0 = GaloisModule::trivial_action(FgAbelianGroup::cyclic(5));
    IntVector one(1);
    one(0) = 1;
    doc.labels = {{"ab", one}};
    return to_json(doc);
}

Json non_equivariant_document()
{
    Document doc;
    auto& cfg = doc.config;
    cfg.name = "swap";
    cfg.components = {{"A", {2}}, {"B", {2}}, {"C", {1}}};
    cfg.strata[2] = {{"p", {"A", "C"}, std::nullopt, {2}}, {"q", {"B", "C"}, std::nullopt, {2}}};
    FrobeniusAction action;
    action.order = 2;
    action.components = {{"A", "B"}, {"B", "A"}};
    action.strata[2] = {{"p", "q"}, {"q", "p"}};
    cfg.frobenius = action;
    IntMatrix negate(1, 1);
    negate(0, 0) = 2;
    doc.pi1.y0 = GaloisModule(FgAbelianGroup::cyclic(3), negate, 2);
    IntVector one(1);
    one(0) = 1;
    doc.labels = {{"p", one}, {"q", one}};
    return to_json(doc);
}

Outcome validation_negatives()
{
    Outcome out;
    struct Case
    {
        std::string name;
        std::string text;
        std::vector<std::string> expected;
    };
    const std::vector<Case> cases{
        {"collapse.json", to_json(collapsing_document()).dump(2), {"not SNC after extension", "'e0'"}},
        {"cocycle.json", non_cocycle_document().dump(2), {"cocycle", "'t'"}},
        {"equivariance.json", non_equivariant_document().dump(2), {"not Frobenius-equivariant", "'p'"}},
    };
    for (const auto& c : cases) {
        const auto file = write_file(c.name, c.text);
        for (const auto& command : {"validate", "kernel"}) {
            std::vector<std::string> args{command, file};
            if (std::string(command) == "kernel")
                args.insert(args.end(), {"--ell", "3"});
            const auto r = run_command(args);
            if (r.report.exit_status != 1)
                out.fail(c.name + ": " + command + " exited " + std::to_string(r.report.exit_status));
            for (const auto& text : c.expected)
                if (r.err.find(text) == std::string::npos)
                    out.fail(c.name + ": message lacks " + text + " (" + r.err + ")");
        }
    }
    if (out.pass)
        out.detail = "collapse, cocycle and equivariance rejected with exit 1, objects named";
    return out;
}

} // namespace

int main()
{
    using Clock = std::chrono::steady_clock;
    const auto suspension_set = suspension_complexes();
    const auto oracle_set = oracle_complexes();

    struct Criterion
    {
        std::string name;
        std::function<Outcome()> run;
        double limit_seconds;
    };
    const std::vector<Criterion> criteria{
        {"rulings end-to-end", rulings_end_to_end, 1.0},
        {"fermat end-to-end", fermat_end_to_end, 1.0},
        {"suspension isomorphism", [&] { return suspension_isomorphism(suspension_set); }, 30.0},
        {"oracle equivalence", [&] { return oracle_equivalence(oracle_set); }, 0},
        {"smith normal form contract", smith_contract, 0},
        {"norm-map tower functoriality", tower_functoriality, 0},
        {"universal coefficients", [&] { return universal_coefficients(suspension_set, oracle_set); }, 0},
        {"validation negatives", validation_negatives, 0},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = Clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        }
        catch (const std::exception& e) {
            outcome.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds >= c.limit_seconds && outcome.pass) {
            std::ostringstream limit;
            limit << "runtime over " << c.limit_seconds << " s";
            outcome.fail(limit.str());
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << (outcome.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << c.name << " [" << seconds << " s]: "
             << outcome.detail;
        std::cout << line.str() << '\n';
        if (!outcome.pass)
            ++failures;
    }
    fs::remove_all(work_dir());
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
