#include "snc/integer.hpp"

#include <limits>
#include <stdexcept>

namespace snc
{

Integer determinant(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const Index n = a.rows();
    if (n == 0)
        return Integer(1);
    IntMatrix m = a;
    Integer sign = 1;
    Integer previous = 1;
    for (Index k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            Index swap_with = -1;
            for (Index i = k + 1; i < n; ++i) {
                if (m(i, k) != 0) {
                    swap_with = i;
                    break;
                }
            }
            if (swap_with < 0)
                return Integer(0);
            m.row(k).swap(m.row(swap_with));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
        }
        previous = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

IntMatrix matrix_from_rows(const std::vector<std::vector<Integer>>& rows, Index cols)
{
    if (!rows.empty())
        cols = static_cast<Index>(rows.front().size());
    IntMatrix m(static_cast<Index>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<Index>(rows[i].size()) != cols)
            throw std::invalid_argument("ragged matrix rows");
        for (Index j = 0; j < cols; ++j)
            m(static_cast<Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
    }
    return m;
}

IntMatrix matrix_from_columns(const std::vector<IntVector>& columns, Index rows)
{
    IntMatrix m(rows, static_cast<Index>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw std::invalid_argument("column length mismatch");
        m.col(static_cast<Index>(j)) = columns[j];
    }
    return m;
}

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("hcat: row counts differ");
    IntMatrix out(a.rows(), a.cols() + b.cols());
    out.leftCols(a.cols()) = a;
    out.rightCols(b.cols()) = b;
    return out;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks)
{
    Index rows = 0;
    Index cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    IntMatrix out = IntMatrix::Zero(rows, cols);
    Index r = 0;
    Index c = 0;
    for (const auto& b : blocks) {
        out.block(r, c, b.rows(), b.cols()) = b;
        r += b.rows();
        c += b.cols();
    }
    return out;
}

IntMatrix matrix_power(const IntMatrix& a, std::uint64_t k)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("matrix_power of a non-square matrix");
    IntMatrix result = IntMatrix::Identity(a.rows(), a.cols());
    IntMatrix base = a;
    while (k > 0) {
        if (k & 1U)
            result = result * base;
        k >>= 1U;
        if (k > 0)
            base = base * base;
    }
    return result;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Integer prime_power_part(const Integer& x, std::uint64_t prime)
{
    Integer rest = abs_value(x);
    Integer part = 1;
    if (rest == 0)
        return part;
    while (rest % prime == 0) {
        rest /= prime;
        part *= prime;
    }
    return part;
}

std::string to_string(const Integer& x) { return x.str(); }

bool fits_int64(const Integer& x)
{
    return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

} // namespace snc
