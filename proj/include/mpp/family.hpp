#ifndef MPP_FAMILY_HPP
#define MPP_FAMILY_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mpp/geometry/affine.hpp"
#include "mpp/geometry/polyhedron.hpp"
#include "mpp/poset.hpp"
#include "mpp/rational.hpp"

namespace mpp {

enum class ParameterKind { Zero, Interior, One };

/**
 * A point t of the parameter cube [0,1]^P̃, stored per element index.
 * Marked elements always carry 0.
 */
class Parameter
{
    public:
        Parameter() = default;
        /** Throws InputError for unknown or marked names and values outside [0,1]; missing entries are 0. */
        Parameter(const MarkedPoset& poset, const std::map<std::string, Rational>& values);

        static Parameter constant(const MarkedPoset& poset, const Rational& value);
        /** The interior point whose i-th unmarked coordinate is i/(|P̃|+1). */
        static Parameter generic(const MarkedPoset& poset);

        const Rational& operator[](Element p) const { return t_[static_cast<std::size_t>(p)]; }
        const std::vector<Rational>& values() const { return t_; }
        std::map<std::string, Rational> to_map(const MarkedPoset& poset) const;

        ParameterKind kind(Element p) const;
        bool is_interior(const MarkedPoset& poset) const;
        bool is_vertex(const MarkedPoset& poset) const;

        bool operator==(const Parameter&) const = default;

    private:
        std::vector<Rational> t_;
};

/** P̃ = C ⊔ O. */
struct Partition {
    std::set<Element> C;
    std::set<Element> O;

    /** Throws InputError unless C and O are disjoint with union P̃. */
    static Partition from_names(const MarkedPoset& poset, const std::vector<std::string>& c, const std::vector<std::string>& o);
    /** The vertex t of the cube: C = {t_p = 1}. Throws InputError if t is not a vertex. */
    static Partition from_vertex(const MarkedPoset& poset, const Parameter& t);
    static Partition from_chain_set(const MarkedPoset& poset, const std::set<Element>& c);
    Parameter vertex(const MarkedPoset& poset) const;
};

/** All 2^|P̃| partitions, ordered by the bitmask over unmarked elements in input order. */
std::vector<Partition> all_partitions(const MarkedPoset& poset);

/** One inequality per saturated chain, plus x_a = λ(a) for marked a. Coordinates are all elements. */
HRep<Rational> hrep_general(const MarkedPoset& poset, const Parameter& t);

/** Chain-order description of O_{C,O}. Coordinates are all elements. */
HRep<Rational> hrep_chain_order(const MarkedPoset& poset, const Partition& part);

/** The marked order polyhedron (C = ∅). */
HRep<Rational> hrep_order(const MarkedPoset& poset);

/** Substitutes x_a = λ(a) and keeps the unmarked coordinates. */
HRep<Rational> project(const MarkedPoset& poset, const HRep<Rational>& h);

/** ι_λ: fills in the marked coordinates; y is indexed like poset.unmarked(). */
VectorQ embed(const MarkedPoset& poset, const VectorQ& y);
/** π: keeps the unmarked coordinates. */
VectorQ project(const MarkedPoset& poset, const VectorQ& x);

VectorQ transfer_phi(const MarkedPoset& poset, const Parameter& t, const VectorQ& x);
VectorQ transfer_psi(const MarkedPoset& poset, const Parameter& t, const VectorQ& y);
VectorQ transfer_psi_closed(const MarkedPoset& poset, const Parameter& t, const VectorQ& y);
VectorQ transfer_theta(const MarkedPoset& poset, const Parameter& t, const Parameter& t2, const VectorQ& y);

VectorQ projected_phi(const MarkedPoset& poset, const Parameter& t, const VectorQ& x);
VectorQ projected_psi(const MarkedPoset& poset, const Parameter& t, const VectorQ& y);
VectorQ projected_theta(const MarkedPoset& poset, const Parameter& t, const Parameter& t2, const VectorQ& y);

/** For each element p, the lower covers q with x_q maximal among them (sorted by name). */
struct MaximizingRelation {
    std::vector<std::vector<Element>> argmax;

    bool holds(Element q, Element p) const;
};

MaximizingRelation maximizing_relation(const MarkedPoset& poset, const VectorQ& x);

/** Left side minus right side of the chain inequality evaluated at y; zero means tight. */
Rational chain_slack(const MarkedPoset& poset, const Parameter& t, const SaturatedChain& chain, const VectorQ& y);

/** Whether φ_t(x) satisfies the chain's inequality with equality, decided from x and ⊣_x alone. */
bool tightness(const MarkedPoset& poset, const Parameter& t, const VectorQ& x, const SaturatedChain& chain);

/** Throws TooLarge above 12 unmarked elements. */
bool is_tame(const MarkedPoset& poset);

/** Number of irredundant inequalities (facets) of the projected chain-order polyhedron. */
std::size_t facet_count(const MarkedPoset& poset, const Partition& part);

/** (k-1)(l-1) for q ∈ O, counting the chains through C below and above q. */
long facet_count_delta(const MarkedPoset& poset, const Partition& part, Element q);

/** facet_count(C + q) - facet_count(C), by linear programming. */
long measured_facet_delta(const MarkedPoset& poset, const Partition& part, Element q);

/**
 * The unimodular map carrying O_{C,O} onto O_{C+q,O-q} when q is not a
 * chain-order star element; acts on all coordinates. Throws ComputationError
 * when neither side of q has a unique chain.
 */
AffineMap<Rational> star_move_map(const MarkedPoset& poset, const Partition& part, Element q);

/** Elements p whose parameter t_p does not affect the combinatorial type, sorted by name. */
std::vector<Element> irrelevant_parameters(const MarkedPoset& poset);

}  // namespace mpp

#endif
