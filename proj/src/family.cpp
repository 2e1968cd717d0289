#include "mpp/family.hpp"

#include <algorithm>
#include <atomic>
#include <functional>

#include "mpp/errors.hpp"
#include "mpp/geometry/redundancy.hpp"
#include "mpp/parallel.hpp"

namespace mpp {

Parameter::Parameter(const MarkedPoset& poset, const std::map<std::string, Rational>& values)
    : t_(poset.size(), Rational(0))
{
    for (const auto& [name, value] : values) {
        if (!poset.contains(name)) throw InputError("parameter names an unknown element " + name);
        const Element p = poset.index(name);
        if (poset.is_marked(p)) throw InputError("parameter given for marked element " + name);
        if (value < 0 || value > 1) throw InputError("parameter t_" + name + " = " + to_string(value) + " is outside [0,1]");
        t_[static_cast<std::size_t>(p)] = value;
    }
}

Parameter Parameter::constant(const MarkedPoset& poset, const Rational& value)
{
    std::map<std::string, Rational> m;
    for (Element p : poset.unmarked()) m[poset.name(p)] = value;
    return Parameter(poset, m);
}

Parameter Parameter::generic(const MarkedPoset& poset)
{
    std::map<std::string, Rational> m;
    const auto n = static_cast<long>(poset.unmarked().size());
    long i = 1;
    for (Element p : poset.unmarked()) m[poset.name(p)] = Rational(i++) / Rational(n + 1);
    return Parameter(poset, m);
}

std::map<std::string, Rational> Parameter::to_map(const MarkedPoset& poset) const
{
    std::map<std::string, Rational> m;
    for (Element p : poset.unmarked()) m[poset.name(p)] = (*this)[p];
    return m;
}

ParameterKind Parameter::kind(Element p) const
{
    const auto& v = (*this)[p];
    if (v == 0) return ParameterKind::Zero;
    if (v == 1) return ParameterKind::One;
    return ParameterKind::Interior;
}

bool Parameter::is_interior(const MarkedPoset& poset) const
{
    return std::all_of(poset.unmarked().begin(), poset.unmarked().end(),
                       [&](Element p) { return kind(p) == ParameterKind::Interior; });
}

bool Parameter::is_vertex(const MarkedPoset& poset) const
{
    return std::none_of(poset.unmarked().begin(), poset.unmarked().end(),
                        [&](Element p) { return kind(p) == ParameterKind::Interior; });
}

Partition Partition::from_names(const MarkedPoset& poset, const std::vector<std::string>& c, const std::vector<std::string>& o)
{
    Partition part;
    for (const auto& n : c) {
        if (!poset.contains(n)) throw InputError("partition names an unknown element " + n);
        part.C.insert(poset.index(n));
    }
    for (const auto& n : o) {
        if (!poset.contains(n)) throw InputError("partition names an unknown element " + n);
        part.O.insert(poset.index(n));
    }
    std::set<Element> all(part.C);
    all.insert(part.O.begin(), part.O.end());
    const std::set<Element> unmarked(poset.unmarked().begin(), poset.unmarked().end());
    if (all.size() != part.C.size() + part.O.size() || all != unmarked) {
        throw InputError("C and O must partition the unmarked elements");
    }
    return part;
}

Partition Partition::from_vertex(const MarkedPoset& poset, const Parameter& t)
{
    if (!t.is_vertex(poset)) throw InputError("parameter is not a vertex of the cube");
    Partition part;
    for (Element p : poset.unmarked()) (t[p] == 1 ? part.C : part.O).insert(p);
    return part;
}

Partition Partition::from_chain_set(const MarkedPoset& poset, const std::set<Element>& c)
{
    Partition part;
    for (Element p : poset.unmarked()) (c.count(p) ? part.C : part.O).insert(p);
    return part;
}

Parameter Partition::vertex(const MarkedPoset& poset) const
{
    std::map<std::string, Rational> m;
    for (Element p : C) m[poset.name(p)] = 1;
    return Parameter(poset, m);
}

std::vector<Partition> all_partitions(const MarkedPoset& poset)
{
    const auto& u = poset.unmarked();
    std::vector<Partition> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << u.size()); ++mask) {
        std::set<Element> c;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (mask & (std::size_t{1} << i)) c.insert(u[i]);
        }
        out.push_back(Partition::from_chain_set(poset, c));
    }
    return out;
}

namespace {

void add_marking(const MarkedPoset& poset, HRep<Rational>& h)
{
    const auto n = static_cast<Eigen::Index>(poset.size());
    for (Element a : poset.marked()) {
        VectorQ e = VectorQ::Zero(n);
        e(a) = 1;
        h.add_equation(e, poset.lambda(a), "fix:" + poset.name(a));
    }
}

/** Paths q_1, ..., q_k, s leaving q through C (downwards or upwards) and ending at s ∉ C. */
std::vector<std::vector<Element>> paths_through(const MarkedPoset& poset, const std::set<Element>& C, Element q, bool down)
{
    std::vector<std::vector<Element>> out;
    std::vector<Element> path;
    std::function<void(Element)> walk = [&](Element x) {
        for (Element y : down ? poset.lower_covers(x) : poset.upper_covers(x)) {
            path.push_back(y);
            if (C.count(y)) walk(y);
            else out.push_back(path);
            path.pop_back();
        }
    };
    walk(q);
    return out;
}

}  // namespace

HRep<Rational> hrep_general(const MarkedPoset& poset, const Parameter& t)
{
    HRep<Rational> h(poset.elements());
    add_marking(poset, h);
    const auto n = static_cast<Eigen::Index>(poset.size());
    for (Element p = 0; p < static_cast<Element>(poset.size()); ++p) {
        const Rational tp = poset.is_marked(p) ? Rational(0) : t[p];
        for (const auto& c : saturated_chains_to(poset, p)) {
            if (poset.is_marked(p) && c.r() == 0) continue;
            VectorQ row = VectorQ::Zero(n);
            Rational weight = 1 - tp;
            for (std::size_t j = c.chain.size(); j-- > 0;) {
                row(c.chain[j]) += weight;
                weight *= t[c.chain[j]];
            }
            row(p) -= 1;
            h.add_inequality(row, Rational(0), chain_tag(poset, c));
        }
    }
    return h;
}

HRep<Rational> hrep_chain_order(const MarkedPoset& poset, const Partition& part)
{
    HRep<Rational> h(poset.elements());
    add_marking(poset, h);
    const auto n = static_cast<Eigen::Index>(poset.size());
    for (Element p = 0; p < static_cast<Element>(poset.size()); ++p) {
        if (!part.C.count(p)) continue;
        VectorQ e = VectorQ::Zero(n);
        e(p) = -1;
        h.add_inequality(e, Rational(0), "nonneg:" + poset.name(p));
    }
    for (Element b = 0; b < static_cast<Element>(poset.size()); ++b) {
        if (part.C.count(b)) continue;
        auto paths = paths_through(poset, part.C, b, true);
        std::vector<std::vector<Element>> chains;
        for (auto& path : paths) {
            std::reverse(path.begin(), path.end());  // a, p_1, ..., p_r
            if (path.size() == 1 && poset.is_marked(path[0]) && poset.is_marked(b)) continue;
            chains.push_back(std::move(path));
        }
        std::sort(chains.begin(), chains.end(), [&](const auto& x, const auto& y) { return poset.names_of(x) < poset.names_of(y); });
        for (const auto& c : chains) {
            VectorQ row = VectorQ::Zero(n);
            std::string tag = "chain:";
            for (Element x : c) {
                row(x) += 1;
                tag += poset.name(x) + "<";
            }
            row(b) -= 1;
            h.add_inequality(row, Rational(0), tag + poset.name(b));
        }
    }
    return h;
}

HRep<Rational> hrep_order(const MarkedPoset& poset)
{
    return hrep_chain_order(poset, Partition::from_chain_set(poset, {}));
}

HRep<Rational> project(const MarkedPoset& poset, const HRep<Rational>& h)
{
    std::map<std::string, Rational> fixed;
    for (Element a : poset.marked()) fixed[poset.name(a)] = poset.lambda(a);
    return substitute(h, fixed);
}

VectorQ embed(const MarkedPoset& poset, const VectorQ& y)
{
    VectorQ x = VectorQ::Zero(static_cast<Eigen::Index>(poset.size()));
    for (Element a : poset.marked()) x(a) = poset.lambda(a);
    const auto& u = poset.unmarked();
    for (std::size_t i = 0; i < u.size(); ++i) x(u[i]) = y(static_cast<Eigen::Index>(i));
    return x;
}

VectorQ project(const MarkedPoset& poset, const VectorQ& x)
{
    const auto& u = poset.unmarked();
    VectorQ y(static_cast<Eigen::Index>(u.size()));
    for (std::size_t i = 0; i < u.size(); ++i) y(static_cast<Eigen::Index>(i)) = x(u[i]);
    return y;
}

namespace {

Rational max_below(const MarkedPoset& poset, const VectorQ& x, Element p)
{
    const auto& lc = poset.lower_covers(p);
    Rational m = x(lc.front());
    for (Element q : lc) m = std::max(m, Rational(x(q)));
    return m;
}

}  // namespace

VectorQ transfer_phi(const MarkedPoset& poset, const Parameter& t, const VectorQ& x)
{
    VectorQ y = x;
    for (Element p : poset.unmarked()) {
        if (poset.lower_covers(p).empty() || t[p] == 0) continue;
        y(p) = x(p) - t[p] * max_below(poset, x, p);
    }
    return y;
}

VectorQ transfer_psi(const MarkedPoset& poset, const Parameter& t, const VectorQ& y)
{
    VectorQ x = y;
    for (Element p : poset.linear_extension()) {
        if (poset.is_marked(p) || poset.lower_covers(p).empty() || t[p] == 0) continue;
        x(p) = y(p) + t[p] * max_below(poset, x, p);
    }
    return x;
}

VectorQ transfer_psi_closed(const MarkedPoset& poset, const Parameter& t, const VectorQ& y)
{
    VectorQ x = y;
    for (Element p : poset.unmarked()) {
        const auto chains = saturated_chains_to(poset, p);
        if (chains.empty()) continue;
        Rational best;
        bool first = true;
        for (const auto& c : chains) {
            Rational sum = 0, weight = t[p];
            for (std::size_t j = c.chain.size(); j-- > 0;) {
                sum += weight * y(c.chain[j]);
                weight *= t[c.chain[j]];
            }
            if (first || sum > best) best = sum;
            first = false;
        }
        x(p) = y(p) + best;
    }
    return x;
}

VectorQ transfer_theta(const MarkedPoset& poset, const Parameter& t, const Parameter& t2, const VectorQ& y)
{
    return transfer_phi(poset, t2, transfer_psi(poset, t, y));
}

VectorQ projected_phi(const MarkedPoset& poset, const Parameter& t, const VectorQ& x)
{
    return project(poset, transfer_phi(poset, t, embed(poset, x)));
}

VectorQ projected_psi(const MarkedPoset& poset, const Parameter& t, const VectorQ& y)
{
    return project(poset, transfer_psi(poset, t, embed(poset, y)));
}

VectorQ projected_theta(const MarkedPoset& poset, const Parameter& t, const Parameter& t2, const VectorQ& y)
{
    return project(poset, transfer_theta(poset, t, t2, embed(poset, y)));
}

bool MaximizingRelation::holds(Element q, Element p) const
{
    const auto& a = argmax[static_cast<std::size_t>(p)];
    return std::find(a.begin(), a.end(), q) != a.end();
}

MaximizingRelation maximizing_relation(const MarkedPoset& poset, const VectorQ& x)
{
    MaximizingRelation rel;
    rel.argmax.resize(poset.size());
    for (Element p = 0; p < static_cast<Element>(poset.size()); ++p) {
        if (poset.lower_covers(p).empty()) continue;
        const Rational m = max_below(poset, x, p);
        for (Element q : poset.lower_covers(p)) {
            if (x(q) == m) rel.argmax[static_cast<std::size_t>(p)].push_back(q);
        }
    }
    return rel;
}

Rational chain_slack(const MarkedPoset& poset, const Parameter& t, const SaturatedChain& chain, const VectorQ& y)
{
    const Element p = chain.target;
    const Rational tp = poset.is_marked(p) ? Rational(0) : t[p];
    Rational sum = 0, weight = 1;
    for (std::size_t j = chain.chain.size(); j-- > 0;) {
        sum += weight * y(chain.chain[j]);
        weight *= t[chain.chain[j]];
    }
    return (1 - tp) * sum - y(p);
}

bool tightness(const MarkedPoset& poset, const Parameter& t, const VectorQ& x, const SaturatedChain& chain)
{
    const Element p = chain.target;
    const Rational tp = poset.is_marked(p) ? Rational(0) : t[p];
    if (tp == 1) return x(p) == max_below(poset, x, p);
    const auto& c = chain.chain;
    const std::size_t r = c.size() - 1;
    if (x(p) != x(c[r])) return false;
    std::size_t k = r + 1;
    while (k > 1 && t[c[k - 1]] > 0) --k;
    const auto rel = maximizing_relation(poset, x);
    for (std::size_t i = k; i <= r; ++i) {
        if (!rel.holds(c[i - 1], c[i])) return false;
    }
    return true;
}

bool is_tame(const MarkedPoset& poset)
{
    if (poset.unmarked().size() > 12) throw TooLarge("tameness check is limited to 12 unmarked elements");
    const auto parts = all_partitions(poset);
    std::atomic<bool> tame{true};
    parallel_for(parts.size(), [&](std::size_t i) {
        if (!tame) return;
        const auto kinds = classify_constraints(project(poset, hrep_chain_order(poset, parts[i])));
        if (std::any_of(kinds.begin(), kinds.end(), [](ConstraintKind k) { return k != ConstraintKind::Facet; })) tame = false;
    });
    return tame;
}

std::size_t facet_count(const MarkedPoset& poset, const Partition& part)
{
    return eliminate_redundancy(project(poset, hrep_chain_order(poset, part))).num_inequalities();
}

long facet_count_delta(const MarkedPoset& poset, const Partition& part, Element q)
{
    if (!part.O.count(q)) throw InputError("element " + poset.name(q) + " is not in O");
    const auto k = static_cast<long>(count_chains_below(poset, part.C, q));
    const auto l = static_cast<long>(count_chains_above(poset, part.C, q));
    return (k - 1) * (l - 1);
}

long measured_facet_delta(const MarkedPoset& poset, const Partition& part, Element q)
{
    if (!part.O.count(q)) throw InputError("element " + poset.name(q) + " is not in O");
    Partition moved = part;
    moved.O.erase(q);
    moved.C.insert(q);
    return static_cast<long>(facet_count(poset, moved)) - static_cast<long>(facet_count(poset, part));
}

AffineMap<Rational> star_move_map(const MarkedPoset& poset, const Partition& part, Element q)
{
    if (!part.O.count(q)) throw InputError("element " + poset.name(q) + " is not in O");
    const auto down = paths_through(poset, part.C, q, true);
    const auto up = paths_through(poset, part.C, q, false);
    const auto n = static_cast<Eigen::Index>(poset.size());
    auto map = AffineMap<Rational>::identity(n);
    if (down.size() == 1) {
        // x_q ↦ x_q - x_s - x_{q_1} - ⋯ - x_{q_k}
        for (Element y : down.front()) map.linear(q, y) -= 1;
    } else if (up.size() == 1) {
        // x_q ↦ x_s - x_q - x_{q_1} - ⋯ - x_{q_k}
        map.linear(q, q) = -1;
        const auto& path = up.front();
        for (std::size_t i = 0; i + 1 < path.size(); ++i) map.linear(q, path[i]) -= 1;
        map.linear(q, path.back()) += 1;
    } else {
        throw ComputationError("element " + poset.name(q) + " has no unique chain through C on either side");
    }
    return map;
}

std::vector<Element> irrelevant_parameters(const MarkedPoset& poset)
{
    std::vector<Element> out;
    for (Element p : poset.unmarked()) {
        Element cur = p;
        for (;;) {
            const auto& lc = poset.lower_covers(cur);
            if (lc.empty()) break;
            if (std::all_of(lc.begin(), lc.end(), [&](Element q) { return poset.is_marked(q); })) {
                out.push_back(p);
                break;
            }
            if (lc.size() != 1) break;
            cur = lc.front();
        }
    }
    return poset.sorted_by_name(std::move(out));
}

}  // namespace mpp
