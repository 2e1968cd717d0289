#ifndef MPP_GEOMETRY_AFFINE_HPP
#define MPP_GEOMETRY_AFFINE_HPP

#include "mpp/errors.hpp"
#include "mpp/geometry/polyhedron.hpp"
#include "mpp/linalg.hpp"

namespace mpp {

/** x ↦ linear·x + translation. */
template <typename Scalar>
struct AffineMap {
    MatrixX<Scalar> linear;
    VectorX<Scalar> translation;

    VectorX<Scalar> operator()(const VectorX<Scalar>& x) const { return linear * x + translation; }

    static AffineMap identity(Eigen::Index n)
    {
        return {MatrixX<Scalar>::Identity(n, n), VectorX<Scalar>::Zero(n)};
    }
};

/**
 * Image of h under an invertible affine map: a·x ≤ b becomes
 * a M⁻¹ y ≤ b + a M⁻¹ t. The coordinate names are kept.
 */
template <typename Scalar>
HRep<Scalar> apply_affine(const AffineMap<Scalar>& map, const HRep<Scalar>& h)
{
    const auto inv = linalg::inverse<Scalar>(map.linear);
    if (!inv || map.linear.rows() != h.ambient_dimension()) throw SingularMap();
    HRep<Scalar> out(h.coordinates());
    for (const auto& c : h.equations()) {
        const VectorX<Scalar> a = inv->transpose() * c.coefficients;
        out.add_equation(a, c.rhs + a.dot(map.translation), c.origin);
    }
    for (const auto& c : h.inequalities()) {
        const VectorX<Scalar> a = inv->transpose() * c.coefficients;
        out.add_inequality(a, c.rhs + a.dot(map.translation), c.origin);
    }
    if (h.trivially_infeasible()) out.mark_infeasible();
    return out;
}

/** Integral linear part with determinant ±1 and integral translation. */
inline bool is_unimodular(const AffineMap<Rational>& map)
{
    for (Eigen::Index i = 0; i < map.linear.size(); ++i) {
        if (!is_integer(map.linear.data()[i])) return false;
    }
    for (Eigen::Index i = 0; i < map.translation.size(); ++i) {
        if (!is_integer(map.translation(i))) return false;
    }
    const Rational det = linalg::determinant<Rational>(map.linear);
    return det == 1 || det == -1;
}

}  // namespace mpp

#endif
