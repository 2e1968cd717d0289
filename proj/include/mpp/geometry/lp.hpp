#ifndef MPP_GEOMETRY_LP_HPP
#define MPP_GEOMETRY_LP_HPP

#include <optional>
#include <vector>

#include "mpp/errors.hpp"
#include "mpp/geometry/polyhedron.hpp"
#include "mpp/linalg.hpp"

namespace mpp {

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <typename Scalar>
struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Scalar value;
    VectorX<Scalar> point;
};

namespace detail {

/**
 * Dense simplex tableau for  min c·y  s.t.  T y = rhs, y ≥ 0.
 * The last row holds reduced costs and minus the objective value.
 */
template <typename Scalar>
class Tableau
{
    public:
        Tableau(MatrixX<Scalar> rows, VectorX<Scalar> rhs, std::vector<Eigen::Index> basis)
            : basis_(std::move(basis))
        {
            const Eigen::Index m = rows.rows(), n = rows.cols();
            t_ = MatrixX<Scalar>::Zero(m + 1, n + 1);
            t_.topLeftCorner(m, n) = rows;
            t_.topRightCorner(m, 1) = rhs;
        }

        Eigen::Index rows() const { return t_.rows() - 1; }
        Eigen::Index cols() const { return t_.cols() - 1; }
        const std::vector<Eigen::Index>& basis() const { return basis_; }

        void set_objective(const VectorX<Scalar>& c)
        {
            t_.row(rows()).setZero();
            t_.row(rows()).head(cols()) = c.transpose();
            for (Eigen::Index i = 0; i < rows(); ++i) {
                const Scalar cb = c(basis_[static_cast<std::size_t>(i)]);
                if (cb != 0) t_.row(rows()) -= cb * t_.row(i);
            }
        }

        Scalar objective() const { return -t_(rows(), cols()); }

        /** Runs Bland's rule on the columns [0, allowed). Returns false if unbounded. */
        bool optimize(Eigen::Index allowed)
        {
            for (;;) {
                Eigen::Index enter = -1;
                for (Eigen::Index j = 0; j < allowed; ++j) {
                    if (t_(rows(), j) < 0) { enter = j; break; }
                }
                if (enter < 0) return true;
                Eigen::Index leave = -1;
                Scalar best;
                for (Eigen::Index i = 0; i < rows(); ++i) {
                    if (t_(i, enter) <= 0) continue;
                    const Scalar ratio = t_(i, cols()) / t_(i, enter);
                    if (leave < 0 || ratio < best ||
                        (ratio == best && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
                        leave = i;
                        best = ratio;
                    }
                }
                if (leave < 0) return false;
                pivot(leave, enter);
            }
        }

        void pivot(Eigen::Index r, Eigen::Index c)
        {
            const Scalar inv = Scalar(1) / t_(r, c);
            t_.row(r) *= inv;
            for (Eigen::Index i = 0; i < t_.rows(); ++i) {
                if (i == r || t_(i, c) == 0) continue;
                const Scalar f = t_(i, c);
                t_.row(i) -= f * t_.row(r);
            }
            basis_[static_cast<std::size_t>(r)] = c;
        }

        /** Pivots basic columns >= first out of the basis where possible; drops rows where not. */
        void expel(Eigen::Index first)
        {
            for (Eigen::Index i = 0; i < rows();) {
                if (basis_[static_cast<std::size_t>(i)] < first) { ++i; continue; }
                Eigen::Index c = -1;
                for (Eigen::Index j = 0; j < first; ++j) {
                    if (t_(i, j) != 0) { c = j; break; }
                }
                if (c >= 0) {
                    pivot(i, c);
                    ++i;
                } else {
                    remove_row(i);
                }
            }
        }

        void truncate_columns(Eigen::Index n)
        {
            MatrixX<Scalar> next(t_.rows(), n + 1);
            next.leftCols(n) = t_.leftCols(n);
            next.col(n) = t_.col(cols());
            t_ = std::move(next);
        }

        VectorX<Scalar> solution() const
        {
            VectorX<Scalar> y = VectorX<Scalar>::Zero(cols());
            for (Eigen::Index i = 0; i < rows(); ++i) y(basis_[static_cast<std::size_t>(i)]) = t_(i, cols());
            return y;
        }

    private:
        void remove_row(Eigen::Index r)
        {
            const Eigen::Index last = t_.rows() - 1;
            MatrixX<Scalar> next(t_.rows() - 1, t_.cols());
            next.topRows(r) = t_.topRows(r);
            next.bottomRows(last - r) = t_.bottomRows(last - r);
            t_ = std::move(next);
            basis_.erase(basis_.begin() + r);
        }

        MatrixX<Scalar> t_;
        std::vector<Eigen::Index> basis_;
};

/** Affine parametrization x = origin + directions·z of the solutions of the equations. */
template <typename Scalar>
struct EquationSpace {
    VectorX<Scalar> origin;
    MatrixX<Scalar> directions;
};

template <typename Scalar>
std::optional<EquationSpace<Scalar>> solve_equations(const HRep<Scalar>& h)
{
    if (h.trivially_infeasible()) return std::nullopt;
    const MatrixX<Scalar> e = h.equation_matrix();
    auto x0 = linalg::solve_any<Scalar>(e, h.equation_rhs());
    if (!x0) return std::nullopt;
    return EquationSpace<Scalar>{*x0, linalg::nullspace<Scalar>(e)};
}

/** max c·z  s.t.  a z ≤ b  with z free. */
template <typename Scalar>
LpResult<Scalar> maximize_free(const MatrixX<Scalar>& a, const VectorX<Scalar>& b, const VectorX<Scalar>& c)
{
    const Eigen::Index m = a.rows(), k = a.cols();
    LpResult<Scalar> out;
    if (m == 0) {
        if (!c.isZero()) {
            out.status = LpStatus::Unbounded;
            return out;
        }
        out.status = LpStatus::Optimal;
        out.value = 0;
        out.point = VectorX<Scalar>::Zero(k);
        return out;
    }
    // Columns: z+ (k), z- (k), slacks (m), artificials (one per negative row).
    std::vector<Eigen::Index> negative;
    for (Eigen::Index i = 0; i < m; ++i) {
        if (b(i) < 0) negative.push_back(i);
    }
    const Eigen::Index structural = 2 * k + m;
    const Eigen::Index n = structural + static_cast<Eigen::Index>(negative.size());
    MatrixX<Scalar> rows = MatrixX<Scalar>::Zero(m, n);
    VectorX<Scalar> rhs(m);
    std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
    Eigen::Index next_artificial = structural;
    for (Eigen::Index i = 0; i < m; ++i) {
        const bool flip = b(i) < 0;
        const Scalar s = flip ? Scalar(-1) : Scalar(1);
        rows.block(i, 0, 1, k) = s * a.row(i);
        rows.block(i, k, 1, k) = -s * a.row(i);
        rows(i, 2 * k + i) = s;
        rhs(i) = s * b(i);
        if (flip) {
            rows(i, next_artificial) = 1;
            basis[static_cast<std::size_t>(i)] = next_artificial++;
        } else {
            basis[static_cast<std::size_t>(i)] = 2 * k + i;
        }
    }
    Tableau<Scalar> tab(std::move(rows), std::move(rhs), std::move(basis));
    if (!negative.empty()) {
        VectorX<Scalar> phase1 = VectorX<Scalar>::Zero(n);
        phase1.tail(n - structural).setOnes();
        tab.set_objective(phase1);
        tab.optimize(n);
        if (tab.objective() != 0) return out;
        tab.expel(structural);
        tab.truncate_columns(structural);
    }
    VectorX<Scalar> cost = VectorX<Scalar>::Zero(structural);
    cost.head(k) = -c;
    cost.segment(k, k) = c;
    tab.set_objective(cost);
    if (!tab.optimize(structural)) {
        out.status = LpStatus::Unbounded;
        return out;
    }
    const VectorX<Scalar> y = tab.solution();
    out.status = LpStatus::Optimal;
    out.point = y.head(k) - y.segment(k, k);
    out.value = -tab.objective();
    return out;
}

}  // namespace detail

/** Exact linear programme  max c·x  over the polyhedron h. */
template <typename Scalar>
LpResult<Scalar> maximize(const HRep<Scalar>& h, const VectorX<Scalar>& c)
{
    const auto space = detail::solve_equations(h);
    if (!space) return {};
    const MatrixX<Scalar> a = h.inequality_matrix();
    const MatrixX<Scalar> an = a * space->directions;
    const VectorX<Scalar> b = h.inequality_rhs() - a * space->origin;
    const VectorX<Scalar> cz = space->directions.transpose() * c;
    auto r = detail::maximize_free<Scalar>(an, b, cz);
    if (r.status == LpStatus::Optimal) {
        r.point = space->origin + space->directions * r.point;
        r.value = c.dot(r.point);
    }
    return r;
}

template <typename Scalar>
LpResult<Scalar> minimize(const HRep<Scalar>& h, const VectorX<Scalar>& c)
{
    auto r = maximize<Scalar>(h, VectorX<Scalar>(-c));
    if (r.status == LpStatus::Optimal) r.value = -r.value;
    return r;
}

template <typename Scalar>
std::optional<VectorX<Scalar>> feasible_point(const HRep<Scalar>& h)
{
    const auto r = maximize<Scalar>(h, VectorX<Scalar>::Zero(h.ambient_dimension()));
    if (r.status != LpStatus::Optimal) return std::nullopt;
    return r.point;
}

template <typename Scalar>
bool is_feasible(const HRep<Scalar>& h)
{
    return feasible_point(h).has_value();
}

/** True when every coordinate is bounded above and below over the nonempty polyhedron h. */
template <typename Scalar>
bool is_bounded(const HRep<Scalar>& h)
{
    for (Eigen::Index i = 0; i < h.ambient_dimension(); ++i) {
        VectorX<Scalar> e = VectorX<Scalar>::Zero(h.ambient_dimension());
        e(i) = 1;
        if (maximize<Scalar>(h, e).status == LpStatus::Unbounded) return false;
        if (minimize<Scalar>(h, e).status == LpStatus::Unbounded) return false;
    }
    return true;
}

extern template LpResult<Rational> maximize<Rational>(const HRep<Rational>&, const VectorQ&);

}  // namespace mpp

#endif
