#ifndef MPP_POSET_HPP
#define MPP_POSET_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mpp/rational.hpp"

namespace mpp {

using Element = int;  // index into MarkedPoset::elements()

/**
 * A finite poset given by its covering relations, with a rational marking on
 * a subset of the elements. Immutable after construction.
 *
 * Construction only rejects data that cannot be represented at all (covers or
 * markings naming unknown elements); everything else is reported by validate().
 */
class MarkedPoset
{
    public:
        MarkedPoset() = default;
        MarkedPoset(std::vector<std::string> elements,
                    std::vector<std::pair<std::string, std::string>> covers,
                    std::map<std::string, Rational> marking);

        std::size_t size() const { return names_.size(); }
        const std::vector<std::string>& elements() const { return names_; }
        const std::string& name(Element p) const { return names_[static_cast<std::size_t>(p)]; }
        Element index(const std::string& name) const;
        bool contains(const std::string& name) const { return index_.count(name) > 0; }

        /** Cover pairs in input order, with duplicates removed. */
        const std::vector<std::pair<Element, Element>>& covers() const { return covers_; }
        const std::map<std::string, Rational>& marking() const { return marking_; }

        bool is_marked(Element p) const { return marked_[static_cast<std::size_t>(p)]; }
        const Rational& lambda(Element p) const;
        /** Marked elements, resp. unmarked elements, in input order. */
        const std::vector<Element>& marked() const { return marked_list_; }
        const std::vector<Element>& unmarked() const { return unmarked_list_; }

        /** Lower and upper covers, sorted by name. */
        const std::vector<Element>& lower_covers(Element p) const { return below_[static_cast<std::size_t>(p)]; }
        const std::vector<Element>& upper_covers(Element p) const { return above_[static_cast<std::size_t>(p)]; }
        bool covers_pair(Element p, Element q) const;

        /** p ≤ q in the reflexive transitive closure of the covers. */
        bool leq(Element p, Element q) const { return reach_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]; }
        bool is_acyclic() const { return acyclic_; }
        /** A linear extension (stable in input order); only meaningful when acyclic. */
        const std::vector<Element>& linear_extension() const { return linear_; }

        /** Problems found while reading the data: duplicates and self-covers. */
        const std::vector<std::string>& construction_issues() const { return issues_; }

        std::vector<std::string> names_of(const std::vector<Element>& ps) const;
        std::vector<Element> sorted_by_name(std::vector<Element> ps) const;

    private:
        std::vector<std::string> names_;
        std::map<std::string, Element> index_;
        std::vector<std::pair<Element, Element>> covers_;
        std::map<std::string, Rational> marking_;
        std::vector<bool> marked_;
        std::vector<Rational> lambda_;
        std::vector<Element> marked_list_, unmarked_list_;
        std::vector<std::vector<Element>> below_, above_;
        std::vector<std::vector<bool>> reach_;
        std::vector<Element> linear_;
        bool acyclic_ = true;
        std::vector<std::string> issues_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/** Lists every violated invariant of a marked poset. */
ValidationReport validate(const MarkedPoset& poset);

/** Throws InputError carrying the report when the poset is invalid. */
void require_valid(const MarkedPoset& poset);

/** p_0 ≺ p_1 ≺ ⋯ ≺ p_r ≺ target with p_0 marked and p_1..p_r unmarked. */
struct SaturatedChain {
    std::vector<Element> chain;  // p_0, ..., p_r
    Element target = -1;

    std::size_t r() const { return chain.size() - 1; }
    bool operator==(const SaturatedChain&) const = default;
};

std::vector<SaturatedChain> saturated_chains_to(const MarkedPoset& poset, Element p);
std::string chain_tag(const MarkedPoset& poset, const SaturatedChain& c);

/** Each a ≤ b marked with λ(a) < λ(b). */
bool is_strictly_marked(const MarkedPoset& poset);

/** Blocks of elements generated by the non-trivial constant intervals, each sorted by name. */
std::vector<std::vector<std::string>> constant_intervals(const MarkedPoset& poset);

using ElementMap = std::map<std::string, std::string>;

/** Quotient by the constant-interval blocks; a block is named by its members joined with "~". */
std::pair<MarkedPoset, ElementMap> contract_constant_intervals(const MarkedPoset& poset);

/** Redundant covers of a strictly marked poset, in cover order. */
std::vector<std::pair<Element, Element>> redundant_covers(const MarkedPoset& poset);

bool is_regular(const MarkedPoset& poset);

struct RegularCoverResult {
    MarkedPoset poset;
    /** False if iterated removal disagreed with the one-pass non-redundancy test. */
    bool matches_one_pass = true;
    std::vector<std::string> diagnostics;
};

/** Removes redundant covers one at a time until the poset is regular. Throws InputError if not strictly marked. */
RegularCoverResult remove_redundant_covers(const MarkedPoset& poset);

/** Contraction followed by redundant-cover removal. */
struct Regularization {
    MarkedPoset poset;
    ElementMap map;
    std::vector<std::string> diagnostics;
};
Regularization regularize(const MarkedPoset& poset);

/** Saturated chains q_1 ≺ ⋯ ≺ q_k (all in C, k ≥ 0) linking q to an element outside C. */
std::size_t count_chains_below(const MarkedPoset& poset, const std::set<Element>& C, Element q);
std::size_t count_chains_above(const MarkedPoset& poset, const std::set<Element>& C, Element q);

/** Chain-order star elements of O (at least two such chains on each side), sorted by name. */
std::vector<Element> star_elements(const MarkedPoset& poset, const std::set<Element>& C, const std::set<Element>& O);

/** Rank function (indexed by element), or nullopt when the poset is not ranked. Minimum rank is 0. */
std::optional<std::vector<int>> rank_function(const MarkedPoset& poset);

/** Every element lies below some marked element. */
bool is_bounded(const MarkedPoset& poset);

}  // namespace mpp

#endif
