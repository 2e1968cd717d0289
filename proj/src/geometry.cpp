#include "mpp/geometry/face_lattice.hpp"
#include "mpp/geometry/lp.hpp"
#include "mpp/geometry/redundancy.hpp"
#include "mpp/geometry/vertices.hpp"

namespace mpp {

template LpResult<Rational> maximize<Rational>(const HRep<Rational>&, const VectorQ&);
template VRep<Rational> vertices<Rational>(const HRep<Rational>&);
template VRep<Rational> vertices_bruteforce<Rational>(const HRep<Rational>&, int);
template FaceLattice<Rational> face_lattice<Rational>(const HRep<Rational>&, const VRep<Rational>&);
template std::vector<std::size_t> implicit_equalities<Rational>(const HRep<Rational>&);
template std::vector<ConstraintKind> classify_constraints<Rational>(const HRep<Rational>&);
template HRep<Rational> eliminate_redundancy<Rational>(const HRep<Rational>&);

}  // namespace mpp
