#ifndef SNC_INTEGER_HPP
#define SNC_INTEGER_HPP

#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

// Boost 1.74 probes every constructor argument for a byte-container
// `const_iterator`; Eigen 3.4 expressions expose one whose value type is
// not iterable, which breaks overload resolution for `Scalar * Matrix`.
namespace boost::multiprecision::detail {
template <class C>
  requires requires { typename C::StorageKind; }
struct is_byte_container<C> : std::false_type {};
} // namespace boost::multiprecision::detail

#include <boost/multiprecision/eigen.hpp>

namespace snc
{

/// Arbitrary precision signed integer. Expression templates are disabled so
/// that values compose cleanly inside Eigen expressions and `auto`.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

using Index = Eigen::Index;

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m)
{
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0)
                return false;
    return true;
}

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }
inline std::int64_t abs_value(std::int64_t x) { return x < 0 ? -x : x; }

/// Non-negative remainder of `a` modulo a positive `m`.
template <typename Scalar>
Scalar floor_mod(const Scalar& a, const Scalar& m)
{
    Scalar r = a % m;
    if (r < 0)
        r += m;
    return r;
}

inline Integer gcd(Integer a, Integer b)
{
    a = abs_value(a);
    b = abs_value(b);
    while (b != 0) {
        Integer r = a % b;
        a = b;
        b = r;
    }
    return a;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

/// Integer matrix from a row-major list of rows; all rows must share a length.
IntMatrix matrix_from_rows(const std::vector<std::vector<Integer>>& rows, Index cols = 0);

/// Matrix whose columns are the given vectors, each of length `rows`.
IntMatrix matrix_from_columns(const std::vector<IntVector>& columns, Index rows);

/// Horizontal concatenation [a | b]; row counts must agree.
IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

/// `a^k` for a square matrix, k >= 0.
IntMatrix matrix_power(const IntMatrix& a, std::uint64_t k);

bool is_prime(std::uint64_t n);

/// Largest power of `prime` dividing the non-zero integer `x`.
Integer prime_power_part(const Integer& x, std::uint64_t prime);

/// Decimal rendering; JSON writers emit strings for values beyond 64 bits.
std::string to_string(const Integer& x);
bool fits_int64(const Integer& x);

} // namespace snc

#endif
