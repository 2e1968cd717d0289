#ifndef MPP_GEOMETRY_VERTICES_HPP
#define MPP_GEOMETRY_VERTICES_HPP

#include <algorithm>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "mpp/errors.hpp"
#include "mpp/geometry/lp.hpp"
#include "mpp/geometry/polyhedron.hpp"
#include "mpp/linalg.hpp"

namespace mpp {

namespace detail {

template <typename Scalar>
VectorX<Scalar> normalize_ray(const VectorX<Scalar>& v)
{
    return v;
}

inline VectorQ normalize_ray(const VectorQ& v)
{
    return primitive_direction(v);
}

template <typename Scalar>
void canonicalize(VRep<Scalar>& v)
{
    std::sort(v.vertices.begin(), v.vertices.end(), LexLess{});
    std::sort(v.rays.begin(), v.rays.end(), LexLess{});
}

/** Inequality rows of h rewritten over the parameters z of the equation space. */
template <typename Scalar>
struct ReducedSystem {
    EquationSpace<Scalar> space;
    MatrixX<Scalar> a;  // a z ≤ b
    VectorX<Scalar> b;
};

template <typename Scalar>
ReducedSystem<Scalar> reduce(const HRep<Scalar>& h)
{
    auto space = solve_equations(h);
    if (!space) throw EmptyPolyhedron();
    const MatrixX<Scalar> a = h.inequality_matrix();
    ReducedSystem<Scalar> out{*space, a * space->directions, h.inequality_rhs() - a * space->origin};
    return out;
}

}  // namespace detail

/**
 * Vertices and extreme rays of a pointed polyhedron by the double description
 * method on the homogenized cone { (s, z) : s b - a z ≥ 0, s ≥ 0 }.
 */
template <typename Scalar>
VRep<Scalar> vertices(const HRep<Scalar>& h)
{
    const auto sys = detail::reduce(h);
    const Eigen::Index k = sys.a.cols();
    const Eigen::Index n_ineq = sys.a.rows();
    VRep<Scalar> out;
    out.coordinates = h.coordinates();

    if (k == 0) {
        for (Eigen::Index i = 0; i < n_ineq; ++i) {
            if (sys.b(i) < 0) throw EmptyPolyhedron();
        }
        out.vertices.push_back(sys.space.origin);
        return out;
    }

    const Eigen::Index d = k + 1;
    const Eigen::Index m = n_ineq + 1;
    MatrixX<Scalar> cone(m, d);
    cone.block(0, 0, n_ineq, 1) = sys.b;
    cone.block(0, 1, n_ineq, k) = -sys.a;
    cone.row(n_ineq).setZero();
    cone(n_ineq, 0) = 1;

    const auto basis_rows = linalg::independent_rows<Scalar>(cone);
    if (static_cast<Eigen::Index>(basis_rows.size()) < d) {
        if (!is_feasible(h)) throw EmptyPolyhedron();
        throw NotPointed();
    }
    MatrixX<Scalar> square(d, d);
    for (Eigen::Index i = 0; i < d; ++i) square.row(i) = cone.row(basis_rows[static_cast<std::size_t>(i)]);
    const MatrixX<Scalar> inv = *linalg::inverse<Scalar>(square);

    struct Ray {
        VectorX<Scalar> y;
        boost::dynamic_bitset<> zeros;
    };
    std::vector<Ray> rays;
    std::vector<bool> done(static_cast<std::size_t>(m), false);
    for (Eigen::Index j = 0; j < d; ++j) {
        Ray r{detail::normalize_ray<Scalar>(inv.col(j)), boost::dynamic_bitset<>(static_cast<std::size_t>(m))};
        for (Eigen::Index i = 0; i < d; ++i) {
            if (i != j) r.zeros.set(static_cast<std::size_t>(basis_rows[static_cast<std::size_t>(i)]));
        }
        rays.push_back(std::move(r));
    }
    for (auto i : basis_rows) done[static_cast<std::size_t>(i)] = true;

    for (Eigen::Index row = 0; row < m; ++row) {
        if (done[static_cast<std::size_t>(row)]) continue;
        const VectorX<Scalar> hrow = cone.row(row).transpose();
        std::vector<Scalar> value(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            value[i] = hrow.dot(rays[i].y);
            if (value[i] > 0) pos.push_back(i);
            else if (value[i] < 0) neg.push_back(i);
        }
        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (value[i] >= 0) {
                Ray r = rays[i];
                if (value[i] == 0) r.zeros.set(static_cast<std::size_t>(row));
                next.push_back(std::move(r));
            }
        }
        for (auto p : pos) {
            for (auto q : neg) {
                const auto common = rays[p].zeros & rays[q].zeros;
                if (static_cast<Eigen::Index>(common.count()) < d - 2) continue;
                bool adjacent = true;
                for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
                    if (o == p || o == q) continue;
                    if (common.is_subset_of(rays[o].zeros)) adjacent = false;
                }
                if (!adjacent) continue;
                Ray r{detail::normalize_ray<Scalar>(VectorX<Scalar>(value[p] * rays[q].y - value[q] * rays[p].y)), common};
                r.zeros.set(static_cast<std::size_t>(row));
                next.push_back(std::move(r));
            }
        }
        rays = std::move(next);
        done[static_cast<std::size_t>(row)] = true;
    }

    for (const auto& r : rays) {
        const VectorX<Scalar> z = r.y.tail(k);
        if (r.y(0) > 0) {
            out.vertices.push_back(sys.space.origin + sys.space.directions * (z / r.y(0)));
        } else {
            out.rays.push_back(detail::normalize_ray<Scalar>(VectorX<Scalar>(sys.space.directions * z)));
        }
    }
    if (out.vertices.empty()) throw EmptyPolyhedron();
    detail::canonicalize(out);
    return out;
}

/**
 * Vertices of a bounded polyhedron by solving every square subsystem of
 * tight inequalities. Exponential; meant as an independent check.
 */
template <typename Scalar>
VRep<Scalar> vertices_bruteforce(const HRep<Scalar>& h, int max_dimension = 8)
{
    const auto sys = detail::reduce(h);
    const Eigen::Index k = sys.a.cols();
    const Eigen::Index m = sys.a.rows();
    if (k > max_dimension) throw TooLarge("brute-force vertex enumeration is limited to dimension " + std::to_string(max_dimension));
    if (!is_feasible(h)) throw EmptyPolyhedron();
    if (!is_bounded(h)) throw Unbounded();

    VRep<Scalar> out;
    out.coordinates = h.coordinates();
    auto feasible = [&](const VectorX<Scalar>& z) {
        for (Eigen::Index i = 0; i < m; ++i) {
            if (sys.a.row(i).dot(z) > sys.b(i)) return false;
        }
        return true;
    };
    if (k == 0) {
        out.vertices.push_back(sys.space.origin);
        return out;
    }
    std::vector<Eigen::Index> pick(static_cast<std::size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    if (m < k) return out;
    MatrixX<Scalar> square(k, k);
    VectorX<Scalar> rhs(k);
    for (;;) {
        for (Eigen::Index i = 0; i < k; ++i) {
            square.row(i) = sys.a.row(pick[static_cast<std::size_t>(i)]);
            rhs(i) = sys.b(pick[static_cast<std::size_t>(i)]);
        }
        if (auto z = linalg::solve_unique<Scalar>(square, rhs); z && feasible(*z)) {
            out.vertices.push_back(sys.space.origin + sys.space.directions * *z);
        }
        Eigen::Index i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (Eigen::Index j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    std::sort(out.vertices.begin(), out.vertices.end(), LexLess{});
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
    return out;
}

extern template VRep<Rational> vertices<Rational>(const HRep<Rational>&);
extern template VRep<Rational> vertices_bruteforce<Rational>(const HRep<Rational>&, int);

}  // namespace mpp

#endif
