#ifndef MPP_TROPICAL_HPP
#define MPP_TROPICAL_HPP

#include <string>
#include <vector>

#include "mpp/family.hpp"
#include "mpp/geometry/polyhedron.hpp"
#include "mpp/poset.hpp"
#include "mpp/rational.hpp"

namespace mpp {

/** The tropical linear form max_i (x_i + c_i) over its support. */
struct TropicalHyperplane {
    std::string label;
    std::vector<std::size_t> support;  // coordinate indices
    std::vector<Rational> offsets;     // c_i, parallel to support
};

struct TropicalArrangement {
    std::vector<std::string> coordinates;
    std::vector<TropicalHyperplane> hyperplanes;
};

/** Per hyperplane, the maximizing support indices in support order. */
using TropCovector = std::vector<std::vector<std::size_t>>;

/** One hyperplane α_r = max_{q≺r} x_q per unmarked r covering two or more elements, in input order. */
TropicalArrangement arrangement(const MarkedPoset& poset);

TropCovector covector(const TropicalArrangement& arr, const VectorQ& x);

/** Adds the closed cell {x : τ_i ⊆ sig_i(x) for all i} to h, whose coordinates are those of arr. */
void add_cell_constraints(const TropicalArrangement& arr, const TropCovector& tau, HRep<Rational>& h);

/** A cell of a subdivision of O(P,λ), in the unmarked coordinates. */
struct SubdivisionCell {
    std::vector<VectorQ> vertices;      // sorted
    int dim = -1;
    TropCovector covector;              // of the vertex barycenter
    std::vector<std::size_t> tight;     // inequalities of the projected order description tight on the cell
    std::vector<std::vector<Element>> blocks;  // ideal-chain cells only: B_1, ..., B_r
};

/**
 * Cells F_I for all chains of order ideals compatible with the marking.
 * Throws UnsupportedUnbounded for unbounded posets.
 */
std::vector<SubdivisionCell> ideal_chain_cells(const MarkedPoset& poset);

/** All cells F ∩ G of the tropical subdivision, sorted by (dimension, vertices). */
std::vector<SubdivisionCell> tropical_subdivision(const MarkedPoset& poset);

/** The 0-dimensional cells of the tropical subdivision, in unmarked coordinates, sorted. */
std::vector<VectorQ> subdivision_vertices(const MarkedPoset& poset);

/** φ_t of the subdivision vertices; contains the vertices of O_t for every t. */
std::vector<VectorQ> transferred_subdivision_vertices(const MarkedPoset& poset, const Parameter& t);

/** Vertices of O_t for interior t, through the tropical subdivision. Throws NonInteriorParameter. */
std::vector<VectorQ> generic_vertices(const MarkedPoset& poset, const Parameter& t);

/**
 * For each subdivision vertex v, the face conditions tight at v together with
 * x_q = x_q' for q, q' ∈ tc(v)_r must pin down v alone.
 */
struct VertexLemmaReport {
    std::size_t checked = 0;
    std::vector<VectorQ> failures;
    bool ok() const { return failures.empty(); }
};
VertexLemmaReport check_vertex_lemma(const MarkedPoset& poset);

/** Generic vertices with the cube vertices u at which their degeneration is a vertex of O_u. */
struct VertexDegenerationReport {
    Parameter t;
    std::vector<VectorQ> vertices;
    std::vector<std::vector<Partition>> witnesses;  // parallel to vertices
    std::vector<std::size_t> unwitnessed;           // indices into vertices
    bool ok() const { return unwitnessed.empty(); }
};

/** Searches all 2^|P̃| cube vertices. Throws TooLarge above 10 unmarked elements. */
VertexDegenerationReport check_vertex_degeneration_conjecture(const MarkedPoset& poset, const Parameter& t);

}  // namespace mpp

#endif
