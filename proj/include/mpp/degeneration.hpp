#ifndef MPP_DEGENERATION_HPP
#define MPP_DEGENERATION_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "mpp/family.hpp"
#include "mpp/geometry/face_lattice.hpp"
#include "mpp/geometry/polyhedron.hpp"
#include "mpp/poset.hpp"

namespace mpp {

/** A bounded polytope together with its face lattice. */
struct LatticePolytope {
    HRep<Rational> hrep;
    FaceLattice<Rational> lattice;
};

LatticePolytope lattice_polytope(const HRep<Rational>& h);

/** O_t in the unmarked coordinates. Throws UnsupportedUnbounded for unbounded members. */
LatticePolytope family_member(const MarkedPoset& poset, const Parameter& t);

/** u2 agrees with u wherever u is 0 or 1. */
bool is_degeneration(const MarkedPoset& poset, const Parameter& u, const Parameter& u2);

struct FaceMap {
    LatticePolytope source;
    LatticePolytope target;
    std::vector<std::size_t> image;  // source face index → target face index
};

using PointMap = std::function<VectorQ(const VectorQ&)>;

/** dg(F) is the smallest target face containing the image of the vertex barycenter of F. */
FaceMap face_map(LatticePolytope source, LatticePolytope target, const PointMap& rho);

/** The degeneration map dg_{u,u2}, through θ_{u,u2}. Throws InputError if u2 is not a degeneration of u. */
FaceMap degeneration_map(const MarkedPoset& poset, const Parameter& u, const Parameter& u2);

struct FaceMapCheck {
    bool surjective = true;
    bool order_preserving = true;
    bool dimension_nondecreasing = true;
    bool full_dimensional_preimages = true;  // each target face has a preimage of its own dimension
    bool ok() const { return surjective && order_preserving && dimension_nondecreasing && full_dimensional_preimages; }
};

FaceMapCheck check_face_map(const FaceMap& map);

struct FvectorReport {
    std::vector<std::size_t> source;
    std::vector<std::size_t> target;
    bool dominated = true;  // target ≤ source componentwise
};

FvectorReport check_fvector_domination(const FaceMap& map);
FvectorReport check_fvector_domination(const MarkedPoset& poset, const Parameter& u, const Parameter& u2);

/** dg_{u,u2} = dg_{u1,u2} ∘ dg_{u,u1}, compared face by face. */
bool composition_law(const MarkedPoset& poset, const Parameter& u, const Parameter& u1, const Parameter& u2);

/** Isomorphism of the vertex-facet incidences, by colour refinement and backtracking. */
bool combinatorially_equivalent(const FaceLattice<Rational>& a, const FaceLattice<Rational>& b);

/** A face of the parameter cube: the listed coordinates are fixed to 0 or 1, the rest are free. */
using CubeFace = std::map<Element, Rational>;

struct TypeSweepReport {
    std::vector<Parameter> samples;
    std::vector<std::vector<std::size_t>> fvectors;
    bool constant = true;  // every sample is combinatorially equivalent to the first
};

/** Samples interior points of the cube face (one sample for a cube vertex). */
TypeSweepReport combinatorial_type_sweep(const MarkedPoset& poset, const CubeFace& face, int samples = 3,
                                         unsigned seed = 1);

struct HibiLiReport {
    std::vector<std::size_t> fvector_a;
    std::vector<std::size_t> fvector_b;
    bool dominated = true;  // f(A) ≤ f(B) componentwise
    std::optional<Element> moved;            // set when C_B = C_A + q
    std::optional<long> expected_facet_delta;  // (k-1)(l-1), for tame posets
    std::optional<long> measured_facet_delta;
};

/** Requires C_A ⊆ C_B. Throws InputError otherwise. */
HibiLiReport hibi_li_check(const MarkedPoset& poset, const Partition& a, const Partition& b);

/** The pentagon-to-rectangle deformation Q_s given by 0 ≤ x_1 ≤ 2, 0 ≤ x_2 and two roof inequalities. */
HRep<Rational> pentagon_hrep(const Rational& s);
/** The deformation map ρ_s, which rescales x_2 under the roof. */
VectorQ pentagon_rho(const Rational& s, const VectorQ& x);
/** The face map from Q_0 to Q_1 induced by ρ_1. */
FaceMap pentagon_degeneration();

}  // namespace mpp

#endif
