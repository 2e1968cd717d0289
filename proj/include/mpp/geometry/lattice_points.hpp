#ifndef MPP_GEOMETRY_LATTICE_POINTS_HPP
#define MPP_GEOMETRY_LATTICE_POINTS_HPP

#include <cstdint>
#include <vector>

#include "mpp/geometry/polyhedron.hpp"

namespace mpp {

/// Largest bounding box (in lattice points) the scan will visit.
inline constexpr std::uint64_t lattice_box_limit = 10'000'000;

/// All integer points of a bounded polyhedron, in lexicographic order.
/// An empty polyhedron gives an empty list.
std::vector<VectorQ> lattice_points(const HRep<Rational>& h);

/// Number of integer points; same scan as lattice_points without storing them.
std::uint64_t count_lattice_points(const HRep<Rational>& h);

struct EhrhartData {
    std::vector<std::uint64_t> counts;   // counts[k] = #(kQ ∩ Z^n), k = 0..max_dilation
    std::vector<Rational> coefficients;  // constant term first
    int dimension = -1;

    Rational evaluate(const Rational& k) const;
};

/// Lattice-point counts of the dilates 0..max_dilation and the interpolating polynomial.
/// Throws NonLatticeVertices, and InputError when max_dilation < dim.
EhrhartData ehrhart(const HRep<Rational>& h, int max_dilation);

/// Checks that every lattice point of 2Q and 3Q is a sum of two and three lattice points of Q.
bool is_integrally_closed(const HRep<Rational>& h);

}  // namespace mpp

#endif
