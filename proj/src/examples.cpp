#include "snc/examples.hpp"

#include <numeric>
#include <stdexcept>

namespace snc
{

Example rulings_example()
{
    Example ex;
    auto& cfg = ex.document.config;
    cfg.name = "rulings";
    for (const char* id : {"H1", "H2", "V1", "V2"})
        cfg.components.push_back({id, {1}});
    for (const char* h : {"H1", "H2"})
        for (const char* v : {"V1", "V2"})
            cfg.strata[2].push_back({std::string(h) + "." + v, {h, v}, std::nullopt, {1}});
    ex.document.pi1.y0 = GaloisModule::trivial_action(FgAbelianGroup::free(0));
    return ex;
}

Example fermat_example(std::uint64_t n)
{
    if (n < 2)
        throw std::invalid_argument("fermat example needs n > 1");
    Example ex;

    SncConfiguration cover;
    cover.name = "fermat-" + std::to_string(n) + "-cover";
    auto line = [](int i, std::uint64_t j) {
        return "L" + std::to_string(i) + (j == 0 ? std::string() : "^" + std::to_string(j));
    };
    FrobeniusAction tau;
    tau.order = n;
    for (std::uint64_t j = 0; j < n; ++j) {
        for (int i = 1; i <= 2; ++i) {
            cover.components.push_back({line(i, j), {1}});
            tau.components[line(i, j)] = line(i, (j + 1) % n);
        }
    }
    for (std::uint64_t j = 0; j < n; ++j) {
        const std::string p = "P" + std::to_string(j);
        const std::string q = "Q" + std::to_string(j);
        cover.strata[2].push_back({p, {line(1, j), line(2, j)}, std::nullopt, {1}});
        cover.strata[2].push_back({q, {line(2, j), line(1, (j + 1) % n)}, std::nullopt, {1}});
        tau.strata[2][p] = "P" + std::to_string((j + 1) % n);
        tau.strata[2][q] = "Q" + std::to_string((j + 1) % n);
    }
    cover.frobenius = tau;
    ex.cover = cover;

    auto& cfg = ex.document.config;
    cfg.name = "fermat-" + std::to_string(n);
    cfg.components = {{"C1", {1}}, {"C2", {1}}};
    cfg.strata[2] = {{"P", {"C1", "C2"}, std::nullopt, {1}}, {"Q", {"C1", "C2"}, std::nullopt, {1}}};

    auto& pi1 = ex.document.pi1;
    pi1.y0 = GaloisModule::trivial_action(FgAbelianGroup::cyclic(Integer(n)));
    for (const char* c : {"C1", "C2"})
        pi1.component_maps.push_back({c, FgAbelianGroup::free(0), IntMatrix::Zero(1, 0), std::nullopt});
    ex.document.labels["P"] = IntVector::Ones(1);
    ex.document.labels["Q"] = IntVector::Zero(1);

    if (std::gcd(n, std::uint64_t{6}) != 1)
        ex.notes.push_back("n = " + std::to_string(n) +
                           " is not prime to 6; the surface construction needs (n, 6 ch(k)) = 1");
    ex.notes.push_back("k must contain a primitive " + std::to_string(n) + "-th root of unity");
    return ex;
}

Example generate_example(const std::string& kind, std::uint64_t n)
{
    if (kind == "rulings")
        return rulings_example();
    if (kind == "fermat")
        return fermat_example(n);
    throw std::invalid_argument("unknown example '" + kind + "' (expected rulings or fermat)");
}

} // namespace snc
