#include "snc/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace snc
{

namespace
{

using Row = std::vector<std::int64_t>;

std::int64_t inverse_mod(std::int64_t a, std::int64_t p)
{
    std::int64_t result = 1;
    std::int64_t base = a % p;
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
    }
    return result;
}

// Rank over F_p of the boundary map out of dimension `a`.
Index boundary_rank(const DeltaComplex& complex, Index a, std::int64_t p)
{
    if (a <= 0 || a > complex.dimension())
        return 0;
    const auto& simplices = complex.simplices(a);
    const auto rows = static_cast<std::size_t>(complex.count(a - 1));
    std::vector<Row> m(rows, Row(simplices.size(), 0));
    for (std::size_t j = 0; j < simplices.size(); ++j) {
        const auto& facets = simplices[j].facets;
        for (std::size_t i = 0; i < facets.size(); ++i) {
            auto& entry = m[static_cast<std::size_t>(facets[i])][j];
            entry = ((entry + (i % 2 == 0 ? 1 : p - 1)) % p + p) % p;
        }
    }
    Index rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < simplices.size() && pivot_row < rows; ++col) {
        std::size_t found = pivot_row;
        while (found < rows && m[found][col] == 0)
            ++found;
        if (found == rows)
            continue;
        std::swap(m[found], m[pivot_row]);
        const std::int64_t inv = inverse_mod(m[pivot_row][col], p);
        for (auto& x : m[pivot_row])
            x = x * inv % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || m[r][col] == 0)
                continue;
            const std::int64_t factor = m[r][col];
            for (std::size_t c = 0; c < simplices.size(); ++c)
                m[r][c] = ((m[r][c] - factor * m[pivot_row][c]) % p + p) % p;
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

} // namespace

Index oracle_homology(const DeltaComplex& complex, Index degree, std::uint64_t p)
{
    if (p < 2)
        throw std::invalid_argument("oracle modulus must be prime");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw std::invalid_argument("oracle modulus must be prime");
    Index total = 0;
    for (Index a = 0; a <= complex.dimension(); ++a)
        total += complex.count(a);
    if (total > oracle_size_limit)
        throw std::length_error("complex exceeds the oracle size bound of " + std::to_string(oracle_size_limit) +
                                " simplices");
    if (degree < 0 || degree > complex.dimension())
        return 0;
    const auto q = static_cast<std::int64_t>(p);
    return complex.count(degree) - boundary_rank(complex, degree, q) - boundary_rank(complex, degree + 1, q);
}

} // namespace snc
