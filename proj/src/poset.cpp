#include "mpp/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "mpp/errors.hpp"

namespace mpp {

MarkedPoset::MarkedPoset(std::vector<std::string> elements,
                         std::vector<std::pair<std::string, std::string>> covers,
                         std::map<std::string, Rational> marking)
    : marking_(std::move(marking))
{
    for (auto& e : elements) {
        if (index_.count(e)) {
            issues_.push_back("duplicate element " + e);
            continue;
        }
        index_.emplace(e, static_cast<Element>(names_.size()));
        names_.push_back(std::move(e));
    }
    const std::size_t n = names_.size();
    std::set<std::pair<Element, Element>> seen;
    for (const auto& [a, b] : covers) {
        if (!index_.count(a) || !index_.count(b)) {
            throw InputError("cover (" + a + ", " + b + ") names an unknown element");
        }
        const Element p = index_.at(a), q = index_.at(b);
        if (p == q) {
            issues_.push_back("self-cover " + a);
            continue;
        }
        if (!seen.insert({p, q}).second) {
            issues_.push_back("duplicate cover (" + a + ", " + b + ")");
            continue;
        }
        covers_.emplace_back(p, q);
    }
    marked_.assign(n, false);
    lambda_.assign(n, Rational(0));
    for (const auto& [name, value] : marking_) {
        if (!index_.count(name)) throw InputError("marking names an unknown element " + name);
        const auto p = static_cast<std::size_t>(index_.at(name));
        marked_[p] = true;
        lambda_[p] = value;
    }
    for (std::size_t p = 0; p < n; ++p) {
        (marked_[p] ? marked_list_ : unmarked_list_).push_back(static_cast<Element>(p));
    }

    below_.assign(n, {});
    above_.assign(n, {});
    for (const auto& [p, q] : covers_) {
        above_[static_cast<std::size_t>(p)].push_back(q);
        below_[static_cast<std::size_t>(q)].push_back(p);
    }
    auto by_name = [this](Element a, Element b) { return names_[static_cast<std::size_t>(a)] < names_[static_cast<std::size_t>(b)]; };
    for (std::size_t p = 0; p < n; ++p) {
        std::sort(above_[p].begin(), above_[p].end(), by_name);
        std::sort(below_[p].begin(), below_[p].end(), by_name);
    }

    reach_.assign(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<Element> stack{static_cast<Element>(s)};
        reach_[s][s] = true;
        while (!stack.empty()) {
            const Element p = stack.back();
            stack.pop_back();
            for (Element q : above_[static_cast<std::size_t>(p)]) {
                if (!reach_[s][static_cast<std::size_t>(q)]) {
                    reach_[s][static_cast<std::size_t>(q)] = true;
                    stack.push_back(q);
                }
            }
        }
    }

    // Kahn's algorithm, always taking the earliest ready element in input order.
    std::vector<int> indegree(n, 0);
    for (const auto& [p, q] : covers_) ++indegree[static_cast<std::size_t>(q)];
    std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
    for (std::size_t p = 0; p < n; ++p) {
        if (indegree[p] == 0) ready.push(static_cast<Element>(p));
    }
    while (!ready.empty()) {
        const Element p = ready.top();
        ready.pop();
        linear_.push_back(p);
        for (Element q : above_[static_cast<std::size_t>(p)]) {
            if (--indegree[static_cast<std::size_t>(q)] == 0) ready.push(q);
        }
    }
    acyclic_ = linear_.size() == n;
}

Element MarkedPoset::index(const std::string& name) const
{
    const auto it = index_.find(name);
    if (it == index_.end()) throw InputError("unknown element " + name);
    return it->second;
}

const Rational& MarkedPoset::lambda(Element p) const
{
    if (!is_marked(p)) throw InputError("element " + name(p) + " is not marked");
    return lambda_[static_cast<std::size_t>(p)];
}

bool MarkedPoset::covers_pair(Element p, Element q) const
{
    const auto& up = upper_covers(p);
    return std::find(up.begin(), up.end(), q) != up.end();
}

std::vector<std::string> MarkedPoset::names_of(const std::vector<Element>& ps) const
{
    std::vector<std::string> out;
    out.reserve(ps.size());
    for (Element p : ps) out.push_back(name(p));
    return out;
}

std::vector<Element> MarkedPoset::sorted_by_name(std::vector<Element> ps) const
{
    std::sort(ps.begin(), ps.end(), [this](Element a, Element b) { return name(a) < name(b); });
    return ps;
}

ValidationReport validate(const MarkedPoset& poset)
{
    ValidationReport report;
    for (const auto& issue : poset.construction_issues()) report.violations.push_back(issue);
    if (!poset.is_acyclic()) {
        report.violations.push_back("cycle");
        return report;
    }
    for (const auto& [p, q] : poset.covers()) {
        for (Element s = 0; s < static_cast<Element>(poset.size()); ++s) {
            if (s != p && s != q && poset.leq(p, s) && poset.leq(s, q)) {
                report.violations.push_back("non-covering pair (" + poset.name(p) + ", " + poset.name(q) + ") via " + poset.name(s));
                break;
            }
        }
    }
    for (Element a : poset.marked()) {
        for (Element b : poset.marked()) {
            if (a != b && poset.leq(a, b) && poset.lambda(a) > poset.lambda(b)) {
                report.violations.push_back("marking not order-preserving (" + poset.name(a) + ", " + poset.name(b) + ")");
            }
        }
    }
    for (Element p : poset.unmarked()) {
        if (poset.lower_covers(p).empty()) report.violations.push_back("unmarked minimal element " + poset.name(p));
    }
    return report;
}

void require_valid(const MarkedPoset& poset)
{
    const auto report = validate(poset);
    if (report.ok()) return;
    std::string msg = "invalid marked poset:";
    for (const auto& v : report.violations) msg += "\n  " + v;
    throw InputError(msg);
}

std::vector<SaturatedChain> saturated_chains_to(const MarkedPoset& poset, Element p)
{
    // chains[q] holds the chains p_0 ≺ ⋯ ≺ p_r with p_r = q (q unmarked), i.e. prefixes ending at q.
    std::map<Element, std::vector<std::vector<Element>>> memo;
    std::function<const std::vector<std::vector<Element>>&(Element)> ending_at = [&](Element q) -> const std::vector<std::vector<Element>>& {
        const auto it = memo.find(q);
        if (it != memo.end()) return it->second;
        std::vector<std::vector<Element>> out;
        if (poset.is_marked(q)) {
            out.push_back({q});
        } else {
            for (Element s : poset.lower_covers(q)) {
                for (auto c : ending_at(s)) {
                    c.push_back(q);
                    out.push_back(std::move(c));
                }
            }
        }
        return memo.emplace(q, std::move(out)).first->second;
    };
    std::vector<SaturatedChain> result;
    for (Element q : poset.lower_covers(p)) {
        for (const auto& c : ending_at(q)) result.push_back({c, p});
    }
    std::sort(result.begin(), result.end(), [&](const SaturatedChain& a, const SaturatedChain& b) {
        return poset.names_of(a.chain) < poset.names_of(b.chain);
    });
    return result;
}

std::string chain_tag(const MarkedPoset& poset, const SaturatedChain& c)
{
    std::string out = "chain:";
    for (Element p : c.chain) out += poset.name(p) + "<";
    return out + poset.name(c.target);
}

bool is_strictly_marked(const MarkedPoset& poset)
{
    for (Element a : poset.marked()) {
        for (Element b : poset.marked()) {
            if (a != b && poset.leq(a, b) && !(poset.lambda(a) < poset.lambda(b))) return false;
        }
    }
    return true;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

/** Block index per element; singleton blocks for elements outside constant intervals. */
std::vector<int> interval_blocks(const MarkedPoset& poset)
{
    const auto n = static_cast<Element>(poset.size());
    UnionFind uf(poset.size());
    for (Element a : poset.marked()) {
        for (Element b : poset.marked()) {
            if (a == b || !poset.leq(a, b) || poset.lambda(a) != poset.lambda(b)) continue;
            for (Element p = 0; p < n; ++p) {
                if (poset.leq(a, p) && poset.leq(p, b)) uf.unite(p, a);
            }
        }
    }
    std::vector<int> block(poset.size());
    for (Element p = 0; p < n; ++p) block[static_cast<std::size_t>(p)] = uf.find(p);
    return block;
}

}  // namespace

std::vector<std::vector<std::string>> constant_intervals(const MarkedPoset& poset)
{
    const auto block = interval_blocks(poset);
    std::map<int, std::vector<std::string>> groups;
    for (Element p = 0; p < static_cast<Element>(poset.size()); ++p) groups[block[static_cast<std::size_t>(p)]].push_back(poset.name(p));
    std::vector<std::vector<std::string>> out;
    for (auto& [root, members] : groups) {
        if (members.size() < 2) continue;
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<MarkedPoset, ElementMap> contract_constant_intervals(const MarkedPoset& poset)
{
    const auto block = interval_blocks(poset);
    const auto n = static_cast<Element>(poset.size());
    std::map<int, std::vector<std::string>> members;
    for (Element p = 0; p < n; ++p) members[block[static_cast<std::size_t>(p)]].push_back(poset.name(p));
    std::map<int, std::string> block_name;
    for (auto& [root, m] : members) {
        std::sort(m.begin(), m.end());
        std::string joined;
        for (const auto& s : m) joined += (joined.empty() ? "" : "~") + s;
        block_name[root] = joined;
    }

    ElementMap map;
    std::vector<std::string> elements;
    std::map<std::string, Rational> marking;
    for (Element p = 0; p < n; ++p) {
        const auto& b = block_name[block[static_cast<std::size_t>(p)]];
        map[poset.name(p)] = b;
        if (std::find(elements.begin(), elements.end(), b) == elements.end()) elements.push_back(b);
        if (poset.is_marked(p)) marking[b] = poset.lambda(p);
    }

    // Quotient order, then its covering relations.
    const auto m = elements.size();
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < m; ++i) pos[elements[i]] = i;
    std::vector<std::vector<bool>> less(m, std::vector<bool>(m, false));
    for (const auto& [p, q] : poset.covers()) {
        const auto a = pos[map[poset.name(p)]], b = pos[map[poset.name(q)]];
        if (a != b) less[a][b] = true;
    }
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
            if (!less[i][k]) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (less[k][j]) less[i][j] = true;
            }
        }
    }
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& [p, q] : poset.covers()) {
        const auto a = pos[map[poset.name(p)]], b = pos[map[poset.name(q)]];
        if (a == b || !less[a][b]) continue;
        bool direct = true;
        for (std::size_t k = 0; k < m && direct; ++k) {
            if (less[a][k] && less[k][b]) direct = false;
        }
        if (!direct) continue;
        std::pair<std::string, std::string> c{elements[a], elements[b]};
        if (std::find(covers.begin(), covers.end(), c) == covers.end()) covers.push_back(std::move(c));
    }
    return {MarkedPoset(std::move(elements), std::move(covers), std::move(marking)), std::move(map)};
}

std::vector<std::pair<Element, Element>> redundant_covers(const MarkedPoset& poset)
{
    std::vector<std::pair<Element, Element>> out;
    for (const auto& [p, q] : poset.covers()) {
        bool redundant = false;
        for (Element a : poset.marked()) {
            if (!poset.leq(a, q)) continue;
            for (Element b : poset.marked()) {
                if (a != b && poset.leq(p, b) && poset.lambda(a) >= poset.lambda(b)) {
                    redundant = true;
                    break;
                }
            }
            if (redundant) break;
        }
        if (redundant) out.emplace_back(p, q);
    }
    return out;
}

bool is_regular(const MarkedPoset& poset)
{
    return is_strictly_marked(poset) && redundant_covers(poset).empty();
}

namespace {

MarkedPoset with_covers(const MarkedPoset& poset, const std::vector<std::pair<Element, Element>>& covers)
{
    std::vector<std::pair<std::string, std::string>> named;
    for (const auto& [p, q] : covers) named.emplace_back(poset.name(p), poset.name(q));
    return MarkedPoset(poset.elements(), std::move(named), poset.marking());
}

}  // namespace

RegularCoverResult remove_redundant_covers(const MarkedPoset& poset)
{
    if (!is_strictly_marked(poset)) throw InputError("marking is not strict; contract constant intervals first");
    const auto one_pass = redundant_covers(poset);
    std::vector<std::pair<Element, Element>> expected;
    for (const auto& c : poset.covers()) {
        if (std::find(one_pass.begin(), one_pass.end(), c) == one_pass.end()) expected.push_back(c);
    }

    MarkedPoset current = poset;
    for (;;) {
        const auto red = redundant_covers(current);
        if (red.empty()) break;
        // Remove the first redundant cover in lexicographic name order.
        auto first = *std::min_element(red.begin(), red.end(), [&](const auto& x, const auto& y) {
            return std::pair{current.name(x.first), current.name(x.second)} < std::pair{current.name(y.first), current.name(y.second)};
        });
        std::vector<std::pair<Element, Element>> kept;
        for (const auto& c : current.covers()) {
            if (c != first) kept.push_back(c);
        }
        current = with_covers(current, kept);
    }

    RegularCoverResult result{current, current.covers() == expected, {}};
    if (!result.matches_one_pass) {
        result.diagnostics.push_back("iterated removal of redundant covers differs from the one-pass result");
    }
    return result;
}

Regularization regularize(const MarkedPoset& poset)
{
    require_valid(poset);
    auto [contracted, map] = contract_constant_intervals(poset);
    auto removed = remove_redundant_covers(contracted);
    return {std::move(removed.poset), std::move(map), std::move(removed.diagnostics)};
}

namespace {

std::size_t count_chains(const MarkedPoset& poset, const std::set<Element>& C, Element q, bool down)
{
    std::map<Element, std::size_t> memo;
    std::function<std::size_t(Element)> through = [&](Element x) -> std::size_t {
        if (!C.count(x)) return 1;
        const auto it = memo.find(x);
        if (it != memo.end()) return it->second;
        std::size_t total = 0;
        for (Element y : down ? poset.lower_covers(x) : poset.upper_covers(x)) total += through(y);
        memo[x] = total;
        return total;
    };
    std::size_t total = 0;
    for (Element y : down ? poset.lower_covers(q) : poset.upper_covers(q)) total += through(y);
    return total;
}

}  // namespace

std::size_t count_chains_below(const MarkedPoset& poset, const std::set<Element>& C, Element q)
{
    return count_chains(poset, C, q, true);
}

std::size_t count_chains_above(const MarkedPoset& poset, const std::set<Element>& C, Element q)
{
    return count_chains(poset, C, q, false);
}

std::vector<Element> star_elements(const MarkedPoset& poset, const std::set<Element>& C, const std::set<Element>& O)
{
    std::vector<Element> out;
    for (Element q : O) {
        if (count_chains_below(poset, C, q) >= 2 && count_chains_above(poset, C, q) >= 2) out.push_back(q);
    }
    return poset.sorted_by_name(std::move(out));
}

std::optional<std::vector<int>> rank_function(const MarkedPoset& poset)
{
    const auto n = poset.size();
    if (n == 0) return std::vector<int>{};
    std::vector<int> rank(n, 0), component(n, -1);
    int components = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (component[s] >= 0) continue;
        component[s] = components;
        std::queue<Element> queue;
        queue.push(static_cast<Element>(s));
        while (!queue.empty()) {
            const Element p = queue.front();
            queue.pop();
            const int rp = rank[static_cast<std::size_t>(p)];
            auto visit = [&](Element q, int rq) {
                auto& cq = component[static_cast<std::size_t>(q)];
                if (cq < 0) {
                    cq = components;
                    rank[static_cast<std::size_t>(q)] = rq;
                    queue.push(q);
                    return true;
                }
                return rank[static_cast<std::size_t>(q)] == rq;
            };
            for (Element q : poset.upper_covers(p)) {
                if (!visit(q, rp + 1)) return std::nullopt;
            }
            for (Element q : poset.lower_covers(p)) {
                if (!visit(q, rp - 1)) return std::nullopt;
            }
        }
        ++components;
    }

    // Offsets o_c per component must satisfy rk a ≥ rk b whenever λ(a) ≥ λ(b):
    // o_B - o_A ≤ rank(a) - rank(b), solved by Bellman-Ford from a virtual source.
    struct Edge { int from, to; long weight; };
    std::vector<Edge> edges;
    for (Element a : poset.marked()) {
        for (Element b : poset.marked()) {
            if (a == b || poset.lambda(a) < poset.lambda(b)) continue;
            edges.push_back({component[static_cast<std::size_t>(a)], component[static_cast<std::size_t>(b)],
                             static_cast<long>(rank[static_cast<std::size_t>(a)]) - rank[static_cast<std::size_t>(b)]});
        }
    }
    std::vector<long> offset(static_cast<std::size_t>(components), 0);
    for (int round = 0; round <= components; ++round) {
        bool changed = false;
        for (const auto& e : edges) {
            const long candidate = offset[static_cast<std::size_t>(e.from)] + e.weight;
            if (candidate < offset[static_cast<std::size_t>(e.to)]) {
                offset[static_cast<std::size_t>(e.to)] = candidate;
                changed = true;
            }
        }
        if (!changed) break;
        if (round == components) return std::nullopt;
    }
    for (std::size_t p = 0; p < n; ++p) rank[p] += static_cast<int>(offset[static_cast<std::size_t>(component[p])]);
    const int low = *std::min_element(rank.begin(), rank.end());
    for (auto& r : rank) r -= low;
    return rank;
}

bool is_bounded(const MarkedPoset& poset)
{
    for (Element p = 0; p < static_cast<Element>(poset.size()); ++p) {
        bool below_marked = false;
        for (Element a : poset.marked()) {
            if (poset.leq(p, a)) { below_marked = true; break; }
        }
        if (!below_marked) return false;
    }
    return true;
}

}  // namespace mpp
