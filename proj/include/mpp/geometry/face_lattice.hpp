#ifndef MPP_GEOMETRY_FACE_LATTICE_HPP
#define MPP_GEOMETRY_FACE_LATTICE_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "mpp/errors.hpp"
#include "mpp/geometry/polyhedron.hpp"
#include "mpp/linalg.hpp"

namespace mpp {

using VertexSet = boost::dynamic_bitset<>;

struct Face {
    VertexSet vertices;
    std::vector<std::size_t> tight;  // inequality indices tight on the whole face
    int dim = -1;
};

/** Faces of a polytope, sorted by (dimension, vertex set); includes the empty face and the polytope. */
template <typename Scalar>
class FaceLattice
{
    public:
        FaceLattice() = default;
        FaceLattice(VRep<Scalar> v, std::vector<Face> faces, std::size_t num_inequalities)
            : vrep_(std::move(v)), faces_(std::move(faces)), num_inequalities_(num_inequalities)
        {
            for (std::size_t i = 0; i < faces_.size(); ++i) index_.emplace(faces_[i].vertices, i);
        }

        const VRep<Scalar>& vrep() const { return vrep_; }
        const std::vector<Face>& faces() const { return faces_; }
        std::size_t size() const { return faces_.size(); }
        const Face& operator[](std::size_t i) const { return faces_[i]; }
        std::size_t num_inequalities() const { return num_inequalities_; }

        int dim() const { return faces_.back().dim; }
        std::size_t top() const { return faces_.size() - 1; }
        std::size_t bottom() const { return 0; }

        std::optional<std::size_t> find(const VertexSet& vertices) const
        {
            const auto it = index_.find(vertices);
            if (it == index_.end()) return std::nullopt;
            return it->second;
        }

        bool leq(std::size_t a, std::size_t b) const
        {
            return faces_[a].vertices.is_subset_of(faces_[b].vertices);
        }

        /** Face counts by dimension, f_0 .. f_{d-1}; a single point gives (1). */
        std::vector<std::size_t> fvector() const
        {
            const int d = dim();
            std::vector<std::size_t> f(static_cast<std::size_t>(std::max(d, 1)), 0);
            for (const auto& face : faces_) {
                if (face.dim >= 0 && (face.dim < d || d == 0)) ++f[static_cast<std::size_t>(face.dim)];
            }
            return f;
        }

        std::vector<std::size_t> faces_of_dimension(int k) const
        {
            std::vector<std::size_t> out;
            for (std::size_t i = 0; i < faces_.size(); ++i) {
                if (faces_[i].dim == k) out.push_back(i);
            }
            return out;
        }

        /** Vertex sets of the facets, in lattice order. */
        std::vector<VertexSet> facet_incidence() const
        {
            std::vector<VertexSet> out;
            for (auto i : faces_of_dimension(dim() - 1)) out.push_back(faces_[i].vertices);
            return out;
        }

        /** The smallest face whose vertices all satisfy the tight inequalities of the point x. */
        std::size_t minimal_face_containing(const HRep<Scalar>& h, const VectorX<Scalar>& x) const
        {
            VertexSet set(vrep_.vertices.size());
            set.set();
            for (std::size_t i = 0; i < h.num_inequalities(); ++i) {
                const auto& c = h.inequalities()[i];
                if (c.coefficients.dot(x) != c.rhs) continue;
                for (std::size_t v = 0; v < vrep_.vertices.size(); ++v) {
                    if (c.coefficients.dot(vrep_.vertices[v]) != c.rhs) set.reset(v);
                }
            }
            const auto found = find(set);
            if (!found) throw ComputationError("point does not determine a face");
            return *found;
        }

    private:
        VRep<Scalar> vrep_;
        std::vector<Face> faces_;
        std::size_t num_inequalities_ = 0;
        std::map<VertexSet, std::size_t> index_;
};

/** Face lattice of a bounded polyhedron, by closing the facet vertex sets under intersection. */
template <typename Scalar>
FaceLattice<Scalar> face_lattice(const HRep<Scalar>& h, const VRep<Scalar>& v)
{
    if (!v.rays.empty()) throw UnsupportedUnbounded();
    if (v.vertices.empty()) throw EmptyPolyhedron();
    const std::size_t nv = v.vertices.size();
    const std::size_t ni = h.num_inequalities();
    std::vector<VertexSet> tight(ni, VertexSet(nv));
    for (std::size_t i = 0; i < ni; ++i) {
        const auto& c = h.inequalities()[i];
        for (std::size_t j = 0; j < nv; ++j) {
            if (c.coefficients.dot(v.vertices[j]) == c.rhs) tight[i].set(j);
        }
    }
    VertexSet all(nv);
    all.set();
    std::map<VertexSet, int> seen;
    std::deque<VertexSet> queue{all};
    seen.emplace(all, 0);
    seen.emplace(VertexSet(nv), 0);
    while (!queue.empty()) {
        const VertexSet f = queue.front();
        queue.pop_front();
        for (const auto& t : tight) {
            VertexSet g = f & t;
            if (seen.emplace(g, 0).second) queue.push_back(std::move(g));
        }
    }
    std::vector<Face> faces;
    faces.reserve(seen.size());
    for (const auto& [set, unused] : seen) {
        Face face{set, {}, -1};
        std::vector<VectorX<Scalar>> pts;
        for (std::size_t j = set.find_first(); j != VertexSet::npos; j = set.find_next(j)) pts.push_back(v.vertices[j]);
        face.dim = linalg::affine_dimension<Scalar>(pts);
        for (std::size_t i = 0; i < ni; ++i) {
            if (set.is_subset_of(tight[i])) face.tight.push_back(i);
        }
        faces.push_back(std::move(face));
    }
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertices < b.vertices;
    });
    return FaceLattice<Scalar>(v, std::move(faces), ni);
}

extern template FaceLattice<Rational> face_lattice<Rational>(const HRep<Rational>&, const VRep<Rational>&);

}  // namespace mpp

#endif
