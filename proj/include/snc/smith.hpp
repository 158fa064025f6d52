#ifndef SNC_SMITH_HPP
#define SNC_SMITH_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "snc/integer.hpp"

namespace snc
{

/**
 * Smith normal form `U * A * V = D` of an integer matrix.
 *
 * `U` and `V` are unimodular; their inverses are tracked alongside so that
 * callers can move between the original and the diagonal bases without a
 * separate inversion. `D` is diagonal with non-negative entries
 * d_0 | d_1 | ... | d_{rank-1} and zeros after position `rank`.
 */
template <typename Scalar>
struct SmithDecomposition
{
    Matrix<Scalar> U;
    Matrix<Scalar> D;
    Matrix<Scalar> V;
    Matrix<Scalar> U_inverse;
    Matrix<Scalar> V_inverse;
    Index rank = 0;

    Scalar diagonal(Index i) const { return D(i, i); }

    std::vector<Scalar> nonzero_diagonal() const
    {
        std::vector<Scalar> out;
        out.reserve(static_cast<std::size_t>(rank));
        for (Index i = 0; i < rank; ++i)
            out.push_back(D(i, i));
        return out;
    }
};

namespace detail
{

template <typename Scalar>
class SmithWorkspace
{
public:
    explicit SmithWorkspace(const Matrix<Scalar>& a)
    {
        const Index m = a.rows();
        const Index n = a.cols();
        out_.D = a;
        out_.U = Matrix<Scalar>::Identity(m, m);
        out_.U_inverse = Matrix<Scalar>::Identity(m, m);
        out_.V = Matrix<Scalar>::Identity(n, n);
        out_.V_inverse = Matrix<Scalar>::Identity(n, n);
    }

    SmithDecomposition<Scalar> run()
    {
        auto& d = out_.D;
        const Index steps = std::min(d.rows(), d.cols());
        Index t = 0;
        for (; t < steps; ++t) {
            if (!reduce_at(t))
                break;
            if (d(t, t) < 0)
                negate_row(t);
        }
        out_.rank = t;
        return std::move(out_);
    }

private:
    // Smallest non-zero |entry| in the trailing block, ties broken by (row, col).
    std::optional<std::pair<Index, Index>> find_pivot(Index t) const
    {
        const auto& d = out_.D;
        std::optional<std::pair<Index, Index>> best;
        Scalar best_abs = 0;
        for (Index i = t; i < d.rows(); ++i) {
            for (Index j = t; j < d.cols(); ++j) {
                if (d(i, j) == 0)
                    continue;
                Scalar v = abs_value(d(i, j));
                if (!best || v < best_abs) {
                    best = std::make_pair(i, j);
                    best_abs = v;
                }
            }
        }
        return best;
    }

    // Returns false when the trailing block is zero.
    bool reduce_at(Index t)
    {
        auto& d = out_.D;
        for (;;) {
            auto pivot = find_pivot(t);
            if (!pivot)
                return false;
            if (pivot->first != t)
                swap_rows(t, pivot->first);
            if (pivot->second != t)
                swap_cols(t, pivot->second);

            bool clean = true;
            for (Index i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) == 0)
                    continue;
                Scalar q = d(i, t) / d(t, t);
                add_row(i, t, -q);
                clean = clean && d(i, t) == 0;
            }
            for (Index j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0)
                    continue;
                Scalar q = d(t, j) / d(t, t);
                add_col(j, t, -q);
                clean = clean && d(t, j) == 0;
            }
            if (!clean)
                continue;

            // Divisibility: fold an offending row into row t and go again.
            bool divisible = true;
            for (Index i = t + 1; i < d.rows() && divisible; ++i) {
                for (Index j = t + 1; j < d.cols(); ++j) {
                    if (d(i, j) % d(t, t) != 0) {
                        add_row(t, i, Scalar(1));
                        divisible = false;
                        break;
                    }
                }
            }
            if (divisible)
                return true;
        }
    }

    void swap_rows(Index i, Index j)
    {
        out_.D.row(i).swap(out_.D.row(j));
        out_.U.row(i).swap(out_.U.row(j));
        out_.U_inverse.col(i).swap(out_.U_inverse.col(j));
    }

    void swap_cols(Index i, Index j)
    {
        out_.D.col(i).swap(out_.D.col(j));
        out_.V.col(i).swap(out_.V.col(j));
        out_.V_inverse.row(i).swap(out_.V_inverse.row(j));
    }

    // row_target += c * row_source
    void add_row(Index target, Index source, const Scalar& c)
    {
        out_.D.row(target) += c * out_.D.row(source);
        out_.U.row(target) += c * out_.U.row(source);
        out_.U_inverse.col(source) -= c * out_.U_inverse.col(target);
    }

    // col_target += c * col_source
    void add_col(Index target, Index source, const Scalar& c)
    {
        out_.D.col(target) += c * out_.D.col(source);
        out_.V.col(target) += c * out_.V.col(source);
        out_.V_inverse.row(source) -= c * out_.V_inverse.row(target);
    }

    void negate_row(Index i)
    {
        out_.D.row(i) *= Scalar(-1);
        out_.U.row(i) *= Scalar(-1);
        out_.U_inverse.col(i) *= Scalar(-1);
    }

    SmithDecomposition<Scalar> out_;
};

} // namespace detail

/// Smith normal form with smallest-absolute-value pivoting. Deterministic.
template <typename Scalar>
SmithDecomposition<Scalar> smith_normal_form(const Matrix<Scalar>& a)
{
    return detail::SmithWorkspace<Scalar>(a).run();
}

/// Integer solution of `A z = b` using a precomputed decomposition of `A`.
template <typename Scalar>
std::optional<Vector<Scalar>> solve_integer(const SmithDecomposition<Scalar>& snf,
                                            const Vector<Scalar>& b)
{
    const Vector<Scalar> c = snf.U * b;
    Vector<Scalar> w = Vector<Scalar>::Zero(snf.V.rows());
    for (Index i = 0; i < c.size(); ++i) {
        if (i < snf.rank) {
            if (c(i) % snf.D(i, i) != 0)
                return std::nullopt;
            w(i) = c(i) / snf.D(i, i);
        }
        else if (c(i) != 0) {
            return std::nullopt;
        }
    }
    return Vector<Scalar>(snf.V * w);
}

template <typename Scalar>
std::optional<Vector<Scalar>> solve_integer(const Matrix<Scalar>& a, const Vector<Scalar>& b)
{
    return solve_integer(smith_normal_form(a), b);
}

/// Basis of the integer kernel {z : A z = 0}, one vector per column.
template <typename Scalar>
Matrix<Scalar> integer_kernel(const SmithDecomposition<Scalar>& snf)
{
    const Index n = snf.V.cols();
    return snf.V.rightCols(n - snf.rank);
}

template <typename Scalar>
Matrix<Scalar> integer_kernel(const Matrix<Scalar>& a)
{
    return integer_kernel(smith_normal_form(a));
}

} // namespace snc

#endif
