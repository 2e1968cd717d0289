#include "mpp/degeneration.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "mpp/errors.hpp"
#include "mpp/geometry/redundancy.hpp"
#include "mpp/geometry/vertices.hpp"

namespace mpp {

namespace {

VectorQ face_barycenter(const FaceLattice<Rational>& lattice, const Face& face)
{
    const auto& vs = lattice.vrep().vertices;
    VectorQ b = VectorQ::Zero(vs.front().size());
    long count = 0;
    for (auto j = face.vertices.find_first(); j != VertexSet::npos; j = face.vertices.find_next(j)) {
        b += vs[j];
        ++count;
    }
    return b / Rational(count);
}

std::vector<std::size_t> padded(std::vector<std::size_t> f, std::size_t n)
{
    f.resize(std::max(n, f.size()), 0);
    return f;
}

}  // namespace

LatticePolytope lattice_polytope(const HRep<Rational>& h)
{
    return {h, face_lattice(h, vertices(h))};
}

LatticePolytope family_member(const MarkedPoset& poset, const Parameter& t)
{
    return lattice_polytope(project(poset, hrep_general(poset, t)));
}

bool is_degeneration(const MarkedPoset& poset, const Parameter& u, const Parameter& u2)
{
    for (Element p : poset.unmarked()) {
        if (u.kind(p) != ParameterKind::Interior && u[p] != u2[p]) return false;
    }
    return true;
}

FaceMap face_map(LatticePolytope source, LatticePolytope target, const PointMap& rho)
{
    FaceMap map{std::move(source), std::move(target), {}};
    const auto& ls = map.source.lattice;
    const auto& lt = map.target.lattice;
    map.image.resize(ls.size());
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (ls[i].dim < 0) {
            map.image[i] = lt.bottom();
            continue;
        }
        const VectorQ y = rho(face_barycenter(ls, ls[i]));
        if (!contains(map.target.hrep, y)) throw ComputationError("deformation map leaves the target polytope");
        map.image[i] = lt.minimal_face_containing(map.target.hrep, y);
    }
    return map;
}

FaceMap degeneration_map(const MarkedPoset& poset, const Parameter& u, const Parameter& u2)
{
    if (!is_degeneration(poset, u, u2)) throw InputError("target parameter is not a degeneration of the source");
    return face_map(family_member(poset, u), family_member(poset, u2),
                    [&](const VectorQ& y) { return projected_theta(poset, u, u2, y); });
}

FaceMapCheck check_face_map(const FaceMap& map)
{
    const auto& ls = map.source.lattice;
    const auto& lt = map.target.lattice;
    FaceMapCheck check;
    std::vector<bool> hit(lt.size(), false), same_dim(lt.size(), false);
    for (std::size_t i = 0; i < ls.size(); ++i) {
        const auto j = map.image[i];
        hit[j] = true;
        if (lt[j].dim == ls[i].dim) same_dim[j] = true;
        if (lt[j].dim < ls[i].dim) check.dimension_nondecreasing = false;
        for (std::size_t k = 0; k < ls.size(); ++k) {
            if (ls.leq(i, k) && !lt.leq(j, map.image[k])) check.order_preserving = false;
        }
    }
    check.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    check.full_dimensional_preimages = std::all_of(same_dim.begin(), same_dim.end(), [](bool b) { return b; });
    return check;
}

FvectorReport check_fvector_domination(const FaceMap& map)
{
    FvectorReport report{map.source.lattice.fvector(), map.target.lattice.fvector(), true};
    const auto n = std::max(report.source.size(), report.target.size());
    const auto s = padded(report.source, n), t = padded(report.target, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (t[i] > s[i]) report.dominated = false;
    }
    return report;
}

FvectorReport check_fvector_domination(const MarkedPoset& poset, const Parameter& u, const Parameter& u2)
{
    return check_fvector_domination(degeneration_map(poset, u, u2));
}

bool composition_law(const MarkedPoset& poset, const Parameter& u, const Parameter& u1, const Parameter& u2)
{
    const auto direct = degeneration_map(poset, u, u2);
    const auto first = degeneration_map(poset, u, u1);
    const auto second = degeneration_map(poset, u1, u2);
    for (std::size_t i = 0; i < direct.image.size(); ++i) {
        if (direct.image[i] != second.image[first.image[i]]) return false;
    }
    return true;
}

bool combinatorially_equivalent(const FaceLattice<Rational>& a, const FaceLattice<Rational>& b)
{
    if (a.dim() != b.dim() || a.fvector() != b.fvector()) return false;
    if (a.dim() <= 1) return true;
    const auto fa = a.facet_incidence(), fb = b.facet_incidence();
    const std::size_t nv = a.vrep().vertices.size(), nf = fa.size();

    // Joint colour refinement on both incidence graphs, so colours are comparable.
    std::vector<int> va(nv), vb(nv), ca(nf), cb(nf);
    for (std::size_t f = 0; f < nf; ++f) {
        ca[f] = static_cast<int>(fa[f].count());
        cb[f] = static_cast<int>(fb[f].count());
    }
    std::size_t classes = 0;
    for (;;) {
        std::map<std::pair<int, std::vector<int>>, int> vsig;
        const auto vertex_colours = [&](const std::vector<VertexSet>& facets, const std::vector<int>& fc, std::vector<int>& vc) {
            std::vector<std::pair<int, std::vector<int>>> sig(nv);
            for (std::size_t v = 0; v < nv; ++v) {
                sig[v].first = vc[v];
                for (std::size_t f = 0; f < nf; ++f) {
                    if (facets[f].test(v)) sig[v].second.push_back(fc[f]);
                }
                std::sort(sig[v].second.begin(), sig[v].second.end());
            }
            return sig;
        };
        auto sa = vertex_colours(fa, ca, va), sb = vertex_colours(fb, cb, vb);
        for (const auto& s : sa) vsig.emplace(s, 0);
        for (const auto& s : sb) vsig.emplace(s, 0);
        int next = 0;
        for (auto& [s, c] : vsig) c = next++;
        for (std::size_t v = 0; v < nv; ++v) {
            va[v] = vsig[sa[v]];
            vb[v] = vsig[sb[v]];
        }
        std::map<std::pair<int, std::vector<int>>, int> fsig;
        const auto facet_colours = [&](const std::vector<VertexSet>& facets, const std::vector<int>& fc, const std::vector<int>& vc) {
            std::vector<std::pair<int, std::vector<int>>> sig(nf);
            for (std::size_t f = 0; f < nf; ++f) {
                sig[f].first = fc[f];
                for (auto v = facets[f].find_first(); v != VertexSet::npos; v = facets[f].find_next(v)) sig[f].second.push_back(vc[v]);
                std::sort(sig[f].second.begin(), sig[f].second.end());
            }
            return sig;
        };
        auto ga = facet_colours(fa, ca, va), gb = facet_colours(fb, cb, vb);
        for (const auto& s : ga) fsig.emplace(s, 0);
        for (const auto& s : gb) fsig.emplace(s, 0);
        next = 0;
        for (auto& [s, c] : fsig) c = next++;
        for (std::size_t f = 0; f < nf; ++f) {
            ca[f] = fsig[ga[f]];
            cb[f] = fsig[gb[f]];
        }
        const std::size_t now = vsig.size() + fsig.size();
        if (now == classes) break;
        classes = now;
    }
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (sorted(va) != sorted(vb) || sorted(ca) != sorted(cb)) return false;

    // Backtracking over vertex bijections respecting colours and pairwise common-facet counts.
    const auto common = [&](const std::vector<VertexSet>& facets) {
        std::vector<std::vector<int>> m(nv, std::vector<int>(nv, 0));
        for (const auto& f : facets) {
            for (auto x = f.find_first(); x != VertexSet::npos; x = f.find_next(x)) {
                for (auto y = f.find_first(); y != VertexSet::npos; y = f.find_next(y)) ++m[x][y];
            }
        }
        return m;
    };
    const auto ma = common(fa), mb = common(fb);
    const std::set<VertexSet> target(fb.begin(), fb.end());
    std::vector<std::size_t> order(nv);
    for (std::size_t v = 0; v < nv; ++v) order[v] = v;
    std::map<int, std::size_t> class_size;
    for (int c : va) ++class_size[c];
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return class_size[va[x]] < class_size[va[y]];
    });
    std::vector<std::size_t> image(nv, nv);
    std::vector<bool> used(nv, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
        if (depth == nv) {
            for (const auto& f : fa) {
                VertexSet g(nv);
                for (auto x = f.find_first(); x != VertexSet::npos; x = f.find_next(x)) g.set(image[x]);
                if (!target.count(g)) return false;
            }
            return true;
        }
        const std::size_t v = order[depth];
        for (std::size_t w = 0; w < nv; ++w) {
            if (used[w] || vb[w] != va[v] || mb[w][w] != ma[v][v]) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d) {
                const std::size_t u = order[d];
                if (ma[v][u] != mb[w][image[u]]) ok = false;
            }
            if (!ok) continue;
            image[v] = w;
            used[w] = true;
            if (extend(depth + 1)) return true;
            used[w] = false;
        }
        image[v] = nv;
        return false;
    };
    return extend(0);
}

TypeSweepReport combinatorial_type_sweep(const MarkedPoset& poset, const CubeFace& face, int samples, unsigned seed)
{
    for (const auto& [p, value] : face) {
        if (poset.is_marked(p)) throw InputError("cube face fixes the marked element " + poset.name(p));
        if (value != 0 && value != 1) throw InputError("cube face values must be 0 or 1");
    }
    std::vector<Element> free;
    for (Element p : poset.unmarked()) {
        if (!face.count(p)) free.push_back(p);
    }
    const int count = free.empty() ? 1 : std::max(samples, 1);
    std::mt19937_64 rng(seed);
    TypeSweepReport report;
    std::vector<FaceLattice<Rational>> lattices;
    for (int s = 0; s < count; ++s) {
        std::map<std::string, Rational> values;
        for (const auto& [p, value] : face) values[poset.name(p)] = value;
        for (Element p : free) {
            const int den = std::uniform_int_distribution<int>(2, 11)(rng);
            values[poset.name(p)] = Rational(std::uniform_int_distribution<int>(1, den - 1)(rng)) / Rational(den);
        }
        Parameter t(poset, values);
        auto member = family_member(poset, t);
        report.samples.push_back(t);
        report.fvectors.push_back(member.lattice.fvector());
        lattices.push_back(std::move(member.lattice));
    }
    for (std::size_t i = 1; i < lattices.size(); ++i) {
        if (!combinatorially_equivalent(lattices.front(), lattices[i])) report.constant = false;
    }
    return report;
}

HibiLiReport hibi_li_check(const MarkedPoset& poset, const Partition& a, const Partition& b)
{
    if (!std::includes(b.C.begin(), b.C.end(), a.C.begin(), a.C.end())) {
        throw InputError("the chain part of the first partition must be contained in the second");
    }
    HibiLiReport report;
    report.fvector_a = lattice_polytope(project(poset, hrep_chain_order(poset, a))).lattice.fvector();
    report.fvector_b = lattice_polytope(project(poset, hrep_chain_order(poset, b))).lattice.fvector();
    const auto n = std::max(report.fvector_a.size(), report.fvector_b.size());
    const auto fa = padded(report.fvector_a, n), fb = padded(report.fvector_b, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (fa[i] > fb[i]) report.dominated = false;
    }
    if (b.C.size() == a.C.size() + 1) {
        std::vector<Element> diff;
        std::set_difference(b.C.begin(), b.C.end(), a.C.begin(), a.C.end(), std::back_inserter(diff));
        report.moved = diff.front();
        if (is_tame(poset)) {
            report.expected_facet_delta = facet_count_delta(poset, a, diff.front());
            report.measured_facet_delta = measured_facet_delta(poset, a, diff.front());
        }
    }
    return report;
}

HRep<Rational> pentagon_hrep(const Rational& s)
{
    HRep<Rational> h({"x1", "x2"});
    const auto row = [](const Rational& a, const Rational& b) {
        VectorQ r(2);
        r << a, b;
        return r;
    };
    h.add_inequality(row(-1, 0), 0, "x1>=0");
    h.add_inequality(row(1, 0), 2, "x1<=2");
    h.add_inequality(row(0, -1), 0, "x2>=0");
    h.add_inequality(row(-(1 - s), 1), 1, "left roof");
    h.add_inequality(row(1 - s, 1), 2 * (1 - s) + 1, "right roof");
    return h;
}

VectorQ pentagon_rho(const Rational& s, const VectorQ& x)
{
    const Rational d = x(0) <= 1 ? Rational(x(0)) : Rational(2 - x(0));
    VectorQ y = x;
    y(1) = x(1) * ((1 - s) * d + 1) / (d + 1);
    return y;
}

FaceMap pentagon_degeneration()
{
    return face_map(lattice_polytope(pentagon_hrep(0)), lattice_polytope(pentagon_hrep(1)),
                    [](const VectorQ& x) { return pentagon_rho(1, x); });
}

}  // namespace mpp
