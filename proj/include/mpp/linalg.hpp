#ifndef MPP_LINALG_HPP
#define MPP_LINALG_HPP

#include <optional>
#include <vector>

#include "mpp/rational.hpp"

/**
 * Exact linear algebra over an ordered field.
 *
 * Every routine pivots on the first nonzero entry, so the results are exact
 * whenever the scalar type is exact. Eigen's own decompositions are not used
 * here because they decide rank with a floating-point threshold.
 */
namespace mpp::linalg {

template <typename Scalar>
struct Echelon {
    MatrixX<Scalar> reduced;          // reduced row echelon form
    std::vector<Eigen::Index> pivots;  // pivot column per nonzero row
};

/** Reduced row echelon form of m. */
template <typename Scalar>
Echelon<Scalar> rref(MatrixX<Scalar> m)
{
    Echelon<Scalar> out;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (m(i, c) != 0) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        if (pivot != r) m.row(pivot).swap(m.row(r));
        const Scalar inv = Scalar(1) / m(r, c);
        m.row(r) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Scalar f = m(i, c);
            m.row(i) -= f * m.row(r);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

template <typename Scalar>
Eigen::Index rank(const MatrixX<Scalar>& m)
{
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return static_cast<Eigen::Index>(rref<Scalar>(m).pivots.size());
}

/** Basis of {x : m x = 0}, one basis vector per column. */
template <typename Scalar>
MatrixX<Scalar> nullspace(const MatrixX<Scalar>& m)
{
    const Eigen::Index n = m.cols();
    if (m.rows() == 0) return MatrixX<Scalar>::Identity(n, n);
    const auto e = rref<Scalar>(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Eigen::Index> free;
    for (Eigen::Index c = 0; c < n; ++c) {
        if (!is_pivot[c]) free.push_back(c);
    }
    MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(n, static_cast<Eigen::Index>(free.size()));
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis(free[k], k) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            basis(e.pivots[r], k) = -e.reduced(r, free[k]);
        }
    }
    return basis;
}

/** Some solution of a x = b, or nullopt if the system is inconsistent. */
template <typename Scalar>
std::optional<VectorX<Scalar>> solve_any(const MatrixX<Scalar>& a, const VectorX<Scalar>& b)
{
    const Eigen::Index n = a.cols();
    if (a.rows() == 0) return VectorX<Scalar>::Zero(n);
    MatrixX<Scalar> aug(a.rows(), n + 1);
    aug << a, b;
    const auto e = rref<Scalar>(aug);
    VectorX<Scalar> x = VectorX<Scalar>::Zero(n);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == n) return std::nullopt;
        x(e.pivots[r]) = e.reduced(r, n);
    }
    return x;
}

/** The unique solution of a x = b, or nullopt if there is none or more than one. */
template <typename Scalar>
std::optional<VectorX<Scalar>> solve_unique(const MatrixX<Scalar>& a, const VectorX<Scalar>& b)
{
    if (rank<Scalar>(a) != a.cols()) return std::nullopt;
    return solve_any<Scalar>(a, b);
}

template <typename Scalar>
Scalar determinant(MatrixX<Scalar> m)
{
    const Eigen::Index n = m.rows();
    Scalar det = 1;
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = c; i < n; ++i) {
            if (m(i, c) != 0) { pivot = i; break; }
        }
        if (pivot < 0) return Scalar(0);
        if (pivot != c) {
            m.row(pivot).swap(m.row(c));
            det = -det;
        }
        det *= m(c, c);
        for (Eigen::Index i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            const Scalar f = m(i, c) / m(c, c);
            m.row(i) -= f * m.row(c);
        }
    }
    return det;
}

template <typename Scalar>
std::optional<MatrixX<Scalar>> inverse(const MatrixX<Scalar>& m)
{
    const Eigen::Index n = m.rows();
    if (n == 0) return MatrixX<Scalar>(0, 0);
    MatrixX<Scalar> aug(n, 2 * n);
    aug << m, MatrixX<Scalar>::Identity(n, n);
    const auto e = rref<Scalar>(aug);
    if (static_cast<Eigen::Index>(e.pivots.size()) < n || e.pivots[n - 1] >= n) return std::nullopt;
    return MatrixX<Scalar>(e.reduced.rightCols(n));
}

/** Dimension of the affine hull of the given points (-1 for none). */
template <typename Scalar>
int affine_dimension(const std::vector<VectorX<Scalar>>& points)
{
    if (points.empty()) return -1;
    if (points.size() == 1) return 0;
    MatrixX<Scalar> diffs(static_cast<Eigen::Index>(points.size() - 1), points.front().size());
    for (std::size_t i = 1; i < points.size(); ++i) {
        diffs.row(static_cast<Eigen::Index>(i - 1)) = (points[i] - points.front()).transpose();
    }
    return static_cast<int>(rank<Scalar>(diffs));
}

/** Indices of a maximal linearly independent subset of the rows, greedily in order. */
template <typename Scalar>
std::vector<Eigen::Index> independent_rows(const MatrixX<Scalar>& m)
{
    std::vector<Eigen::Index> chosen;
    MatrixX<Scalar> basis(0, m.cols());
    // Rows are reduced against the running basis kept in echelon form.
    std::vector<Eigen::Index> basis_pivot;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        VectorX<Scalar> row = m.row(i).transpose();
        for (Eigen::Index k = 0; k < basis.rows(); ++k) {
            const Scalar f = row(basis_pivot[k]);
            if (f != 0) row -= f * basis.row(k).transpose();
        }
        Eigen::Index p = -1;
        for (Eigen::Index c = 0; c < row.size(); ++c) {
            if (row(c) != 0) { p = c; break; }
        }
        if (p < 0) continue;
        row /= row(p);
        for (Eigen::Index k = 0; k < basis.rows(); ++k) {
            const Scalar f = basis(k, p);
            if (f != 0) basis.row(k) -= f * row.transpose();
        }
        basis.conservativeResize(basis.rows() + 1, Eigen::NoChange);
        basis.row(basis.rows() - 1) = row.transpose();
        basis_pivot.push_back(p);
        chosen.push_back(i);
    }
    return chosen;
}

}  // namespace mpp::linalg

#endif
