#ifndef MPP_GEOMETRY_POLYHEDRON_HPP
#define MPP_GEOMETRY_POLYHEDRON_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mpp/rational.hpp"

namespace mpp {

/** One linear constraint a·x (= or ≤) rhs, tagged with what generated it. */
template <typename Scalar>
struct LinearConstraint {
    VectorX<Scalar> coefficients;
    Scalar rhs;
    std::string origin;
};

/**
 * Halfspace description { x : E x = e, A x ≤ b } over named coordinates.
 *
 * Zero rows are never stored: a satisfied one is dropped, a violated one marks
 * the description as trivially infeasible.
 */
template <typename Scalar>
class HRep
{
    public:
        HRep() = default;
        explicit HRep(std::vector<std::string> coordinates) : coordinates_(std::move(coordinates)) {}

        const std::vector<std::string>& coordinates() const { return coordinates_; }
        Eigen::Index ambient_dimension() const { return static_cast<Eigen::Index>(coordinates_.size()); }

        const std::vector<LinearConstraint<Scalar>>& equations() const { return equations_; }
        const std::vector<LinearConstraint<Scalar>>& inequalities() const { return inequalities_; }
        std::size_t num_equations() const { return equations_.size(); }
        std::size_t num_inequalities() const { return inequalities_.size(); }
        bool trivially_infeasible() const { return infeasible_; }

        /** Adds a·x = rhs. Returns false when the row was zero and therefore not stored. */
        bool add_equation(VectorX<Scalar> a, Scalar rhs, std::string origin = "plumbing")
        {
            check_size(a);
            if (a.isZero()) {
                if (rhs != 0) infeasible_ = true;
                return false;
            }
            equations_.push_back({std::move(a), std::move(rhs), std::move(origin)});
            return true;
        }

        /** Adds a·x ≤ rhs. Returns false when the row was zero and therefore not stored. */
        bool add_inequality(VectorX<Scalar> a, Scalar rhs, std::string origin = "plumbing")
        {
            check_size(a);
            if (a.isZero()) {
                if (rhs < 0) infeasible_ = true;
                return false;
            }
            inequalities_.push_back({std::move(a), std::move(rhs), std::move(origin)});
            return true;
        }

        MatrixX<Scalar> equation_matrix() const { return stack(equations_); }
        VectorX<Scalar> equation_rhs() const { return rhs_of(equations_); }
        MatrixX<Scalar> inequality_matrix() const { return stack(inequalities_); }
        VectorX<Scalar> inequality_rhs() const { return rhs_of(inequalities_); }

        void mark_infeasible() { infeasible_ = true; }

    private:
        void check_size(const VectorX<Scalar>& a) const
        {
            if (a.size() != ambient_dimension()) {
                throw std::invalid_argument("constraint size does not match the ambient dimension");
            }
        }

        MatrixX<Scalar> stack(const std::vector<LinearConstraint<Scalar>>& rows) const
        {
            MatrixX<Scalar> m(static_cast<Eigen::Index>(rows.size()), ambient_dimension());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                m.row(static_cast<Eigen::Index>(i)) = rows[i].coefficients.transpose();
            }
            return m;
        }

        static VectorX<Scalar> rhs_of(const std::vector<LinearConstraint<Scalar>>& rows)
        {
            VectorX<Scalar> v(static_cast<Eigen::Index>(rows.size()));
            for (std::size_t i = 0; i < rows.size(); ++i) v(static_cast<Eigen::Index>(i)) = rows[i].rhs;
            return v;
        }

        std::vector<std::string> coordinates_;
        std::vector<LinearConstraint<Scalar>> equations_;
        std::vector<LinearConstraint<Scalar>> inequalities_;
        bool infeasible_ = false;
};

/** Vertex/ray description conv(vertices) + cone(rays). */
template <typename Scalar>
struct VRep {
    std::vector<std::string> coordinates;
    std::vector<VectorX<Scalar>> vertices;
    std::vector<VectorX<Scalar>> rays;

    bool bounded() const { return rays.empty(); }
};

template <typename Scalar>
bool contains(const HRep<Scalar>& h, const VectorX<Scalar>& x)
{
    if (h.trivially_infeasible()) return false;
    for (const auto& c : h.equations()) {
        if (c.coefficients.dot(x) != c.rhs) return false;
    }
    for (const auto& c : h.inequalities()) {
        if (c.coefficients.dot(x) > c.rhs) return false;
    }
    return true;
}

/** Indices of the inequalities satisfied with equality at x. */
template <typename Scalar>
std::vector<std::size_t> tight_inequalities(const HRep<Scalar>& h, const VectorX<Scalar>& x)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < h.num_inequalities(); ++i) {
        const auto& c = h.inequalities()[i];
        if (c.coefficients.dot(x) == c.rhs) out.push_back(i);
    }
    return out;
}

/** The k-th dilate { x : E x = k e, A x ≤ k b }. */
template <typename Scalar>
HRep<Scalar> dilate(const HRep<Scalar>& h, const Scalar& k)
{
    HRep<Scalar> out(h.coordinates());
    for (const auto& c : h.equations()) out.add_equation(c.coefficients, c.rhs * k, c.origin);
    for (const auto& c : h.inequalities()) out.add_inequality(c.coefficients, c.rhs * k, c.origin);
    if (h.trivially_infeasible()) out.mark_infeasible();
    return out;
}

/**
 * Substitutes fixed values for some coordinates and returns the description
 * over the remaining ones (in their original order). Rows that become
 * constant are dropped when satisfied and mark infeasibility otherwise.
 */
template <typename Scalar>
HRep<Scalar> substitute(const HRep<Scalar>& h, const std::map<std::string, Scalar>& fixed)
{
    std::vector<std::string> kept;
    std::vector<Eigen::Index> kept_index;
    VectorX<Scalar> values = VectorX<Scalar>::Zero(h.ambient_dimension());
    for (Eigen::Index i = 0; i < h.ambient_dimension(); ++i) {
        const auto it = fixed.find(h.coordinates()[static_cast<std::size_t>(i)]);
        if (it == fixed.end()) {
            kept.push_back(h.coordinates()[static_cast<std::size_t>(i)]);
            kept_index.push_back(i);
        } else {
            values(i) = it->second;
        }
    }
    HRep<Scalar> out(kept);
    auto restrict = [&](const LinearConstraint<Scalar>& c) {
        VectorX<Scalar> a(static_cast<Eigen::Index>(kept_index.size()));
        for (std::size_t k = 0; k < kept_index.size(); ++k) a(static_cast<Eigen::Index>(k)) = c.coefficients(kept_index[k]);
        return std::pair{a, Scalar(c.rhs - c.coefficients.dot(values))};
    };
    for (const auto& c : h.equations()) {
        auto [a, rhs] = restrict(c);
        out.add_equation(std::move(a), std::move(rhs), c.origin);
    }
    for (const auto& c : h.inequalities()) {
        auto [a, rhs] = restrict(c);
        out.add_inequality(std::move(a), std::move(rhs), c.origin);
    }
    if (h.trivially_infeasible()) out.mark_infeasible();
    return out;
}

}  // namespace mpp

#endif
