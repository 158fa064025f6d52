#ifndef SNC_TEST_HELPERS_HPP
#define SNC_TEST_HELPERS_HPP

#include <initializer_list>
#include <vector>

#include "oracles.hpp"
#include "snc/abelian_group.hpp"

namespace testing
{

inline snc::IntMatrix mat(std::initializer_list<std::initializer_list<long long>> rows)
{
    std::vector<std::vector<snc::Integer>> data;
    std::size_t cols = 0;
    for (const auto& r : rows) {
        std::vector<snc::Integer> row;
        for (long long x : r)
            row.push_back(x);
        cols = row.size();
        data.push_back(row);
    }
    return snc::matrix_from_rows(data, static_cast<snc::Index>(cols));
}

inline snc::IntVector vec(std::initializer_list<long long> xs)
{
    snc::IntVector v(static_cast<snc::Index>(xs.size()));
    snc::Index i = 0;
    for (long long x : xs)
        v(i++) = x;
    return v;
}

inline oracle::Mat to_oracle(const snc::IntMatrix& m)
{
    oracle::Mat out(static_cast<std::size_t>(m.rows()), std::vector<long long>(static_cast<std::size_t>(m.cols())));
    for (snc::Index r = 0; r < m.rows(); ++r)
        for (snc::Index c = 0; c < m.cols(); ++c)
            out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = static_cast<long long>(m(r, c));
    return out;
}

inline std::vector<snc::Integer> factors(std::initializer_list<long long> xs)
{
    std::vector<snc::Integer> out;
    for (long long x : xs)
        out.push_back(x);
    return out;
}

inline snc::GroupInvariants invariants(std::initializer_list<long long> torsion, snc::Index rank)
{
    return {factors(torsion), rank};
}

} // namespace testing

#endif
