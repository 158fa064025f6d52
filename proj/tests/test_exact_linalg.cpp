#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "snc/error.hpp"
#include "snc/galois_module.hpp"
#include "snc/random.hpp"

using namespace snc;
using testing::invariants;
using testing::mat;
using testing::vec;

namespace
{

void check_smith_contract(const IntMatrix& a)
{
    const auto snf = smith_normal_form(a);
    REQUIRE(IntMatrix(snf.U * a * snf.V) == snf.D);
    CHECK(IntMatrix(snf.U * snf.U_inverse) == IntMatrix::Identity(a.rows(), a.rows()));
    CHECK(IntMatrix(snf.V * snf.V_inverse) == IntMatrix::Identity(a.cols(), a.cols()));
    CHECK(abs_value(determinant(snf.U)) == 1);
    CHECK(abs_value(determinant(snf.V)) == 1);
    for (Index r = 0; r < snf.D.rows(); ++r)
        for (Index c = 0; c < snf.D.cols(); ++c)
            if (r != c)
                CHECK(snf.D(r, c) == 0);
    const Index k = std::min(a.rows(), a.cols());
    for (Index i = 0; i < k; ++i) {
        CHECK(snf.D(i, i) >= 0);
        if (i + 1 < k) {
            if (snf.D(i, i) == 0)
                CHECK(snf.D(i + 1, i + 1) == 0);
            else
                CHECK(snf.D(i + 1, i + 1) % snf.D(i, i) == 0);
        }
    }
}

// Size of the subgroup of Z/d_1 x ... generated by `gens`, by closure.
std::size_t generated_size(const std::vector<long long>& d, const std::vector<std::vector<long long>>& gens)
{
    std::set<std::vector<long long>> seen{std::vector<long long>(d.size(), 0)};
    std::vector<std::vector<long long>> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& x : frontier) {
            for (const auto& g : gens) {
                auto y = x;
                for (std::size_t i = 0; i < d.size(); ++i)
                    y[i] = ((y[i] + g[i]) % d[i] + d[i]) % d[i];
                if (seen.insert(y).second)
                    next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

} // namespace

TEST_CASE("smith form of diag(2,3) is diag(1,6)")
{
    const IntMatrix a = mat({{2, 0}, {0, 3}});
    const auto snf = smith_normal_form(a);
    CHECK(snf.D == mat({{1, 0}, {0, 6}}));
    CHECK(oracle::determinantal_factors(testing::to_oracle(a)) == std::vector<long long>{1, 6});
    check_smith_contract(a);
}

TEST_CASE("smith form fixes the identity and the zero matrix")
{
    CHECK(smith_normal_form(IntMatrix(IntMatrix::Identity(3, 3))).D == IntMatrix::Identity(3, 3));
    const IntMatrix zero = IntMatrix::Zero(2, 4);
    const auto snf = smith_normal_form(zero);
    CHECK(snf.D == zero);
    CHECK(snf.rank == 0);
    check_smith_contract(zero);
}

TEST_CASE("smith form of empty matrices")
{
    for (auto [r, c] : {std::pair<Index, Index>{0, 0}, {0, 3}, {3, 0}}) {
        const IntMatrix a(r, c);
        const auto snf = smith_normal_form(a);
        CHECK(snf.U.rows() == r);
        CHECK(snf.V.rows() == c);
        CHECK(snf.rank == 0);
    }
}

TEST_CASE("smith contract and determinantal divisors on random matrices")
{
    Rng rng(11);
    std::uniform_int_distribution<Index> size(1, 6);
    for (int t = 0; t < 60; ++t) {
        const Index rows = size(rng), cols = size(rng);
        const IntMatrix a = random_matrix(rng, rows, cols, 9);
        check_smith_contract(a);
        if (rows <= 5 && cols <= 5) {
            const auto expected = oracle::determinantal_factors(testing::to_oracle(a));
            const auto snf = smith_normal_form(a);
            for (std::size_t i = 0; i < expected.size(); ++i)
                CHECK(snf.D(static_cast<Index>(i), static_cast<Index>(i)) == expected[i]);
        }
    }
}

TEST_CASE("smith form is deterministic")
{
    Rng rng(5);
    const IntMatrix a = random_matrix(rng, 5, 4, 9);
    const auto first = smith_normal_form(a), second = smith_normal_form(a);
    CHECK(first.U == second.U);
    CHECK(first.V == second.V);
}

TEST_CASE("integer solving and kernels")
{
    const IntMatrix a = mat({{2, 4}, {0, 6}});
    auto x = solve_integer(a, vec({2, 6}));
    REQUIRE(x);
    CHECK(IntVector(a * *x) == vec({2, 6}));
    CHECK_FALSE(solve_integer(a, vec({1, 0})));
    const IntMatrix b = mat({{1, 2, 3}, {2, 4, 6}});
    const IntMatrix k = integer_kernel(b);
    CHECK(k.cols() == 2);
    CHECK(is_zero(IntMatrix(b * k)));
    CHECK(integer_kernel(IntMatrix(0, 3)).cols() == 3);
}

TEST_CASE("normalize")
{
    SUBCASE("cyclic presentation")
    {
        for (long long n : {2, 5, 12})
            CHECK(normalize(FgAbelianGroup(1, mat({{n}}))) == invariants({n}, 0));
    }
    SUBCASE("free group")
    {
        CHECK(normalize(FgAbelianGroup(2, IntMatrix(2, 0))) == invariants({}, 2));
    }
    SUBCASE("Z/2 + Z/3 is Z/6")
    {
        CHECK(normalize(FgAbelianGroup(2, mat({{2, 0}, {0, 3}}))) == invariants({6}, 0));
    }
    SUBCASE("idempotent")
    {
        const FgAbelianGroup g(3, mat({{4, 0}, {6, 2}, {0, 0}}));
        const auto once = normalize(g);
        CHECK(normalize(FgAbelianGroup::from_invariants(once)) == once);
    }
    SUBCASE("text")
    {
        CHECK(invariants({2, 4}, 1).to_string() == "Z ⊕ Z/2 ⊕ Z/4");
        CHECK(invariants({}, 0).to_string() == "0");
        CHECK(invariants({}, 3).to_string() == "Z^3");
    }
}

TEST_CASE("normalize is invariant under unimodular changes of presentation")
{
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        const Index n = 4;
        const IntMatrix relations = random_matrix(rng, n, 3, 6);
        // Random unimodular matrices as products of elementary operations.
        IntMatrix p = IntMatrix::Identity(n, n), q = IntMatrix::Identity(3, 3);
        std::uniform_int_distribution<Index> pick_row(0, n - 1), pick_col(0, 2);
        std::uniform_int_distribution<int> factor(-3, 3);
        for (int s = 0; s < 8; ++s) {
            const Index i = pick_row(rng), j = pick_row(rng);
            if (i != j)
                p.row(i) += factor(rng) * p.row(j);
            const Index a = pick_col(rng), b = pick_col(rng);
            if (a != b)
                q.col(a) += factor(rng) * q.col(b);
        }
        CHECK(normalize(FgAbelianGroup(n, relations)) == normalize(FgAbelianGroup(n, IntMatrix(p * relations * q))));
    }
}

TEST_CASE("reduced coordinates")
{
    const FgAbelianGroup g(2, mat({{2, 0}, {0, 3}}));
    CHECK(g.is_zero(vec({2, 3})));
    CHECK_FALSE(g.is_zero(vec({1, 0})));
    CHECK(g.reduce(vec({3, 4})) == g.reduce(vec({1, 1})));
    CHECK(g.equal(vec({4, 6}), vec({0, 0})));
}

TEST_CASE("module maps check well-definedness")
{
    const FgAbelianGroup z4 = FgAbelianGroup::cyclic(4), z = FgAbelianGroup::free(1);
    CHECK_NOTHROW(ModuleMap(z4, FgAbelianGroup::cyclic(2), mat({{1}})));
    CHECK_THROWS_AS(ModuleMap(z4, FgAbelianGroup::cyclic(3), mat({{1}})), WellDefinednessError);
    CHECK_THROWS_AS(ModuleMap(z4, z, mat({{1}})), WellDefinednessError);
    CHECK_NOTHROW(ModuleMap(z4, FgAbelianGroup(), IntMatrix(0, 1)));
}

TEST_CASE("cokernel")
{
    SUBCASE("of the zero map into Z/n")
    {
        const auto q = cokernel(ModuleMap(FgAbelianGroup(), FgAbelianGroup::cyclic(7), IntMatrix(1, 0)));
        CHECK(q.group.invariants() == invariants({7}, 0));
    }
    SUBCASE("of the identity")
    {
        const FgAbelianGroup g(2, mat({{2, 0}, {0, 0}}));
        CHECK(cokernel(ModuleMap::identity(g)).group.is_trivial());
    }
    SUBCASE("of multiplication by 2")
    {
        const auto z = FgAbelianGroup::free(1);
        CHECK(cokernel(ModuleMap(z, z, mat({{2}}))).group.invariants() == invariants({2}, 0));
    }
}

TEST_CASE("image subgroup")
{
    SUBCASE("surjection onto Z/n")
    {
        CHECK(image_subgroup(ModuleMap(FgAbelianGroup::free(1), FgAbelianGroup::cyclic(5), mat({{1}})))
                  .group.invariants() == invariants({5}, 0));
    }
    SUBCASE("zero map")
    {
        const auto g = FgAbelianGroup::free(2);
        CHECK(image_subgroup(ModuleMap::zero(g, FgAbelianGroup::cyclic(3))).group.is_trivial());
    }
    SUBCASE("1 -> (0,2) in Z + Z/4")
    {
        const FgAbelianGroup target(2, mat({{0}, {4}}));
        const auto image = image_subgroup(ModuleMap(FgAbelianGroup::free(1), target, mat({{0}, {2}})));
        long long order = 1;
        while (order * 2 % 4 != 0)
            ++order;
        CHECK(image.group.invariants() == invariants({order}, 0));
    }
}

TEST_CASE("kernel, injectivity and surjectivity")
{
    const auto z = FgAbelianGroup::free(1);
    const ModuleMap to_z6(z, FgAbelianGroup::cyclic(6), mat({{2}}));
    CHECK_FALSE(is_injective(to_z6));
    CHECK_FALSE(is_surjective(to_z6));
    CHECK(kernel_subgroup(to_z6).group.invariants() == invariants({}, 1));
    const ModuleMap z6_to_z3(FgAbelianGroup::cyclic(6), FgAbelianGroup::cyclic(3), mat({{1}}));
    CHECK(kernel_subgroup(z6_to_z3).group.invariants() == invariants({2}, 0));
    CHECK(is_surjective(z6_to_z3));
    CHECK(is_injective(ModuleMap(FgAbelianGroup::cyclic(3), FgAbelianGroup::cyclic(6), mat({{2}}))));
}

TEST_CASE("image and cokernel orders multiply to the target order")
{
    Rng rng(9);
    std::uniform_int_distribution<long long> order(2, 12);
    std::uniform_int_distribution<Index> gens(0, 3);
    for (int t = 0; t < 40; ++t) {
        std::vector<long long> d{order(rng), order(rng)};
        IntMatrix rel = IntMatrix::Zero(2, 2);
        rel(0, 0) = d[0];
        rel(1, 1) = d[1];
        const FgAbelianGroup target(2, rel);
        const Index s = gens(rng);
        const IntMatrix m = random_matrix(rng, 2, s, 9);
        const ModuleMap f(FgAbelianGroup::free(s), target, m);
        std::vector<std::vector<long long>> images;
        for (Index j = 0; j < s; ++j)
            images.push_back({static_cast<long long>(m(0, j)), static_cast<long long>(m(1, j))});
        const auto image_order = generated_size(d, images);
        CHECK(image_subgroup(f).group.invariants().order() == Integer(image_order));
        CHECK(cokernel(f).group.invariants().order() * Integer(image_order) == Integer(d[0] * d[1]));
    }
}

TEST_CASE("torsion and primary parts")
{
    SUBCASE("Z + Z/12 at 2")
    {
        const FgAbelianGroup g(2, mat({{0}, {12}}));
        const auto parts = torsion_and_primary(g, 2);
        CHECK(parts.torsion.group.invariants() == invariants({12}, 0));
        CHECK(parts.primary.group.invariants() == invariants({4}, 0));
        long long two_power = 0;
        for (long long x = 0; x < 12; ++x) {
            long long k = 1;
            while (k * x % 12 != 0)
                ++k;
            if ((k & (k - 1)) == 0)
                ++two_power;
        }
        CHECK(parts.primary.group.invariants().order() == two_power);
    }
    SUBCASE("free groups have no torsion")
    {
        const auto parts = torsion_and_primary(FgAbelianGroup::free(3), 3);
        CHECK(parts.torsion.group.is_trivial());
        CHECK(parts.primary.group.is_trivial());
    }
    SUBCASE("prime not dividing n")
    {
        CHECK(torsion_and_primary(FgAbelianGroup::cyclic(15), 7).primary.group.is_trivial());
    }
    SUBCASE("non-prime rejected")
    {
        CHECK_THROWS_AS(torsion_and_primary(FgAbelianGroup::cyclic(4), 4), std::invalid_argument);
    }
    SUBCASE("prime-to part")
    {
        CHECK(prime_to_part(FgAbelianGroup::cyclic(12), 2).group.invariants() == invariants({3}, 0));
    }
}

TEST_CASE("torsion is the direct sum of its primary parts")
{
    Rng rng(21);
    for (int t = 0; t < 25; ++t) {
        const IntMatrix rel = random_matrix(rng, 3, 3, 9);
        const FgAbelianGroup g(3, rel);
        const auto torsion = torsion_and_primary(g, 2).torsion.group.invariants();
        std::vector<IntMatrix> blocks;
        Index generators = 0;
        for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
            const auto part = torsion_and_primary(g, p).primary.group;
            blocks.push_back(part.relations());
            generators += part.generator_count();
        }
        Integer rest = 1;
        for (const auto& d : torsion.torsion)
            rest *= d;
        for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23})
            while (rest % p == 0)
                rest /= p;
        if (rest != 1)
            continue;
        CHECK(normalize(FgAbelianGroup(generators, block_diagonal(blocks))) == torsion);
    }
}

TEST_CASE("coinvariants")
{
    SUBCASE("trivial action on Z/n")
    {
        const auto m = GaloisModule::trivial_action(FgAbelianGroup::cyclic(5));
        CHECK(coinvariants(m).group.invariants() == invariants({5}, 0));
    }
    SUBCASE("swap on Z^2")
    {
        const GaloisModule m(FgAbelianGroup::free(2), mat({{0, 1}, {1, 0}}), 2);
        CHECK(coinvariants(m).group.invariants() == invariants({}, 1));
        CHECK(oracle::determinantal_factors({{-1, 1}, {1, -1}}) == std::vector<long long>{1, 0});
    }
    SUBCASE("minus one on Z")
    {
        const GaloisModule m(FgAbelianGroup::free(1), mat({{-1}}), 2);
        CHECK(coinvariants(m).group.invariants() == invariants({2}, 0));
    }
    SUBCASE("non-invertible Frobenius rejected")
    {
        CHECK_THROWS_AS(GaloisModule(FgAbelianGroup::free(1), mat({{2}}), 4), ValidationError);
        CHECK_THROWS_AS(GaloisModule(FgAbelianGroup::free(1), mat({{-1}}), 3), ValidationError);
    }
    SUBCASE("trivial action leaves the isomorphism type unchanged")
    {
        Rng rng(2);
        for (int t = 0; t < 10; ++t) {
            const FgAbelianGroup g(3, random_matrix(rng, 3, 2, 9));
            CHECK(coinvariants(GaloisModule::trivial_action(g)).group.invariants() == g.invariants());
        }
    }
}

TEST_CASE("galois modules: powers, restriction and quotients")
{
    const GaloisModule m(FgAbelianGroup::cyclic(3), mat({{2}}), 2);
    CHECK_FALSE(m.acts_trivially());
    CHECK(m.power(2).acts_trivially());
    CHECK(m.power(2).order() == 1);
    CHECK_FALSE(m.power(3).acts_trivially());

    const GaloisModule swap(FgAbelianGroup::free(2), mat({{0, 1}, {1, 0}}), 2);
    const auto diagonal = subgroup_generated_by(swap.group(), mat({{1}, {1}}));
    CHECK(restrict_module(swap, diagonal).acts_trivially());
    const auto line = subgroup_generated_by(swap.group(), mat({{1}, {0}}));
    CHECK_THROWS_AS(restrict_module(swap, line), ValidationError);
    const auto q = quotient_module(swap, diagonal);
    CHECK(q.group().invariants() == invariants({}, 1));
    CHECK_FALSE(q.acts_trivially());
    CHECK(is_equivariant(ModuleMap::identity(swap.group()), swap, swap));
    CHECK_FALSE(is_equivariant(ModuleMap(swap.group(), swap.group(), mat({{1, 0}, {0, 0}})), swap, swap));
}
