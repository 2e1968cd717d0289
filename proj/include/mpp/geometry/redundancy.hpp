#ifndef MPP_GEOMETRY_REDUNDANCY_HPP
#define MPP_GEOMETRY_REDUNDANCY_HPP

#include <vector>

#include "mpp/errors.hpp"
#include "mpp/geometry/lp.hpp"
#include "mpp/geometry/polyhedron.hpp"
#include "mpp/linalg.hpp"

namespace mpp {

enum class ConstraintKind { Facet, Redundant, ImplicitEquality };

namespace detail {

template <typename Scalar>
HRep<Scalar> without(const HRep<Scalar>& h, std::size_t skip)
{
    HRep<Scalar> out(h.coordinates());
    for (const auto& c : h.equations()) out.add_equation(c.coefficients, c.rhs, c.origin);
    for (std::size_t i = 0; i < h.num_inequalities(); ++i) {
        if (i == skip) continue;
        const auto& c = h.inequalities()[i];
        out.add_inequality(c.coefficients, c.rhs, c.origin);
    }
    return out;
}

/** True when max a·x over g stays within rhs. */
template <typename Scalar>
bool implied(const HRep<Scalar>& g, const LinearConstraint<Scalar>& c)
{
    const auto r = maximize<Scalar>(g, c.coefficients);
    return r.status == LpStatus::Optimal && r.value <= c.rhs;
}

}  // namespace detail

/** Indices of the inequalities that hold with equality on all of h. */
template <typename Scalar>
std::vector<std::size_t> implicit_equalities(const HRep<Scalar>& h)
{
    if (!is_feasible(h)) throw EmptyPolyhedron();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < h.num_inequalities(); ++i) {
        const auto& c = h.inequalities()[i];
        const auto r = minimize<Scalar>(h, c.coefficients);
        if (r.status == LpStatus::Optimal && r.value == c.rhs) out.push_back(i);
    }
    return out;
}

/**
 * Classifies every inequality independently: an implicit equality, implied by
 * all the others, or the unique inequality of its facet.
 */
template <typename Scalar>
std::vector<ConstraintKind> classify_constraints(const HRep<Scalar>& h)
{
    std::vector<ConstraintKind> kind(h.num_inequalities(), ConstraintKind::Facet);
    for (auto i : implicit_equalities(h)) kind[i] = ConstraintKind::ImplicitEquality;
    for (std::size_t i = 0; i < h.num_inequalities(); ++i) {
        if (kind[i] == ConstraintKind::ImplicitEquality) continue;
        if (detail::implied(detail::without(h, i), h.inequalities()[i])) kind[i] = ConstraintKind::Redundant;
    }
    return kind;
}

/**
 * Irredundant description of the same polyhedron: implicit equalities become
 * equations, the equations are reduced to an independent set and redundant
 * inequalities are dropped one at a time.
 */
template <typename Scalar>
HRep<Scalar> eliminate_redundancy(const HRep<Scalar>& h)
{
    const auto implicit = implicit_equalities(h);
    std::vector<bool> is_implicit(h.num_inequalities(), false);
    for (auto i : implicit) is_implicit[i] = true;

    std::vector<LinearConstraint<Scalar>> eqs(h.equations());
    for (auto i : implicit) eqs.push_back(h.inequalities()[i]);
    MatrixX<Scalar> em(static_cast<Eigen::Index>(eqs.size()), h.ambient_dimension() + 1);
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        em.row(static_cast<Eigen::Index>(i)) << eqs[i].coefficients.transpose(), eqs[i].rhs;
    }
    HRep<Scalar> base(h.coordinates());
    for (auto i : linalg::independent_rows<Scalar>(em)) {
        const auto& c = eqs[static_cast<std::size_t>(i)];
        base.add_equation(c.coefficients, c.rhs, c.origin);
    }

    std::vector<bool> keep(h.num_inequalities(), true);
    for (std::size_t i = 0; i < h.num_inequalities(); ++i) {
        if (is_implicit[i]) keep[i] = false;
    }
    auto assemble = [&](std::size_t skip) {
        HRep<Scalar> g = base;
        for (std::size_t j = 0; j < h.num_inequalities(); ++j) {
            if (j == skip || !keep[j]) continue;
            const auto& c = h.inequalities()[j];
            g.add_inequality(c.coefficients, c.rhs, c.origin);
        }
        return g;
    };
    for (std::size_t i = 0; i < h.num_inequalities(); ++i) {
        if (!keep[i]) continue;
        if (detail::implied(assemble(i), h.inequalities()[i])) keep[i] = false;
    }
    return assemble(h.num_inequalities());
}

extern template std::vector<std::size_t> implicit_equalities<Rational>(const HRep<Rational>&);
extern template std::vector<ConstraintKind> classify_constraints<Rational>(const HRep<Rational>&);
extern template HRep<Rational> eliminate_redundancy<Rational>(const HRep<Rational>&);

}  // namespace mpp

#endif
