#include "mpp/tropical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "mpp/errors.hpp"
#include "mpp/geometry/face_lattice.hpp"
#include "mpp/geometry/lp.hpp"
#include "mpp/geometry/vertices.hpp"
#include "mpp/linalg.hpp"
#include "mpp/parallel.hpp"

namespace mpp {

namespace {

struct PointListLess {
    bool operator()(const std::vector<VectorQ>& a, const std::vector<VectorQ>& b) const
    {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LexLess{});
    }
};

void require_bounded(const MarkedPoset& poset)
{
    require_valid(poset);
    if (!is_bounded(poset)) throw UnsupportedUnbounded();
}

VectorQ barycenter(const std::vector<VectorQ>& points)
{
    VectorQ b = VectorQ::Zero(points.front().size());
    for (const auto& p : points) b += p;
    return b / Rational(static_cast<long>(points.size()));
}

/** Closed linearity regions O(P,λ) ∩ F_τ for singleton covectors τ, pruned by feasibility. */
std::vector<HRep<Rational>> linearity_regions(const MarkedPoset& poset, const TropicalArrangement& arr)
{
    std::vector<HRep<Rational>> out;
    TropCovector tau(arr.hyperplanes.size());
    std::function<void(std::size_t, const HRep<Rational>&)> walk = [&](std::size_t i, const HRep<Rational>& full) {
        if (i == arr.hyperplanes.size()) {
            out.push_back(project(poset, full));
            return;
        }
        for (std::size_t l : arr.hyperplanes[i].support) {
            TropicalArrangement one{arr.coordinates, {arr.hyperplanes[i]}};
            HRep<Rational> next = full;
            add_cell_constraints(one, {{l}}, next);
            if (!is_feasible(project(poset, next))) continue;
            walk(i + 1, next);
        }
    };
    walk(0, hrep_order(poset));
    return out;
}

}  // namespace

TropicalArrangement arrangement(const MarkedPoset& poset)
{
    TropicalArrangement arr{poset.elements(), {}};
    for (Element r : poset.unmarked()) {
        const auto& below = poset.lower_covers(r);
        if (below.size() < 2) continue;
        TropicalHyperplane h{poset.name(r), {}, {}};
        for (Element q : below) {
            h.support.push_back(static_cast<std::size_t>(q));
            h.offsets.emplace_back(0);
        }
        arr.hyperplanes.push_back(std::move(h));
    }
    return arr;
}

TropCovector covector(const TropicalArrangement& arr, const VectorQ& x)
{
    TropCovector tc;
    for (const auto& h : arr.hyperplanes) {
        Rational best = x(static_cast<Eigen::Index>(h.support[0])) + h.offsets[0];
        for (std::size_t i = 1; i < h.support.size(); ++i) {
            best = std::max(best, Rational(x(static_cast<Eigen::Index>(h.support[i])) + h.offsets[i]));
        }
        std::vector<std::size_t> sig;
        for (std::size_t i = 0; i < h.support.size(); ++i) {
            if (x(static_cast<Eigen::Index>(h.support[i])) + h.offsets[i] == best) sig.push_back(h.support[i]);
        }
        tc.push_back(std::move(sig));
    }
    return tc;
}

void add_cell_constraints(const TropicalArrangement& arr, const TropCovector& tau, HRep<Rational>& h)
{
    const auto n = h.ambient_dimension();
    for (std::size_t i = 0; i < arr.hyperplanes.size(); ++i) {
        const auto& hp = arr.hyperplanes[i];
        const auto offset = [&](std::size_t coord) {
            const auto it = std::find(hp.support.begin(), hp.support.end(), coord);
            if (it == hp.support.end()) throw InputError("covector entry outside the support of " + hp.label);
            return hp.offsets[static_cast<std::size_t>(it - hp.support.begin())];
        };
        if (tau[i].empty()) throw InputError("empty covector entry for " + hp.label);
        const std::size_t first = tau[i].front();
        const Rational c_first = offset(first);
        for (std::size_t coord : hp.support) {
            VectorQ row = VectorQ::Zero(n);
            row(static_cast<Eigen::Index>(coord)) += 1;
            row(static_cast<Eigen::Index>(first)) -= 1;
            const Rational rhs = c_first - offset(coord);
            if (std::find(tau[i].begin(), tau[i].end(), coord) != tau[i].end()) {
                if (coord != first) h.add_equation(row, rhs, "tropical:" + hp.label);
            } else {
                h.add_inequality(row, rhs, "tropical:" + hp.label);
            }
        }
    }
}

std::vector<SubdivisionCell> ideal_chain_cells(const MarkedPoset& poset)
{
    require_bounded(poset);
    const auto n = poset.size();
    const auto order = project(poset, hrep_order(poset));
    std::vector<SubdivisionCell> out;
    std::vector<std::vector<Element>> blocks;
    std::vector<bool> remaining(n, true);

    const auto emit = [&] {
        HRep<Rational> full = hrep_order(poset);
        const auto dim = static_cast<Eigen::Index>(n);
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            const Element head = blocks[k].front();
            for (std::size_t j = 1; j < blocks[k].size(); ++j) {
                VectorQ row = VectorQ::Zero(dim);
                row(blocks[k][j]) = 1;
                row(head) = -1;
                full.add_equation(row, Rational(0), "block");
            }
            if (k + 1 < blocks.size()) {
                VectorQ row = VectorQ::Zero(dim);
                row(head) = 1;
                row(blocks[k + 1].front()) -= 1;
                full.add_inequality(row, Rational(0), "block-order");
            }
        }
        const auto h = project(poset, full);
        VRep<Rational> v;
        try {
            v = vertices(h);
        } catch (const EmptyPolyhedron&) {
            return;
        }
        SubdivisionCell cell;
        cell.vertices = v.vertices;
        cell.dim = static_cast<int>(linalg::affine_dimension<Rational>(cell.vertices));
        const VectorQ b = barycenter(cell.vertices);
        cell.covector = covector(arrangement(poset), embed(poset, b));
        cell.tight = tight_inequalities(order, b);
        cell.blocks = blocks;
        out.push_back(std::move(cell));
    };

    std::function<void()> walk = [&] {
        std::vector<Element> rest;
        for (Element p = 0; p < static_cast<Element>(n); ++p) {
            if (remaining[static_cast<std::size_t>(p)]) rest.push_back(p);
        }
        if (rest.empty()) {
            emit();
            return;
        }
        if (rest.size() > 20) throw TooLarge("ideal chain enumeration is limited to 20 elements");
        const std::uint32_t total = 1u << rest.size();
        for (std::uint32_t mask = 1; mask < total; ++mask) {
            std::vector<bool> in(n, false);
            for (std::size_t i = 0; i < rest.size(); ++i) {
                if (mask & (1u << i)) in[static_cast<std::size_t>(rest[i])] = true;
            }
            // The block must be downward closed within the remaining elements.
            bool ideal = true;
            for (std::size_t i = 0; i < rest.size() && ideal; ++i) {
                if (!(mask & (1u << i))) continue;
                for (Element q : poset.lower_covers(rest[i])) {
                    if (remaining[static_cast<std::size_t>(q)] && !in[static_cast<std::size_t>(q)]) ideal = false;
                }
            }
            if (!ideal) continue;
            // Marked elements of the block share one value, strictly below every later marked value.
            std::optional<Rational> mu;
            bool compatible = true;
            for (Element p : rest) {
                if (!poset.is_marked(p) || !in[static_cast<std::size_t>(p)]) continue;
                if (mu && *mu != poset.lambda(p)) compatible = false;
                mu = poset.lambda(p);
            }
            if (!compatible) continue;
            if (mu) {
                for (Element p : rest) {
                    if (poset.is_marked(p) && !in[static_cast<std::size_t>(p)] && poset.lambda(p) <= *mu) compatible = false;
                }
            }
            if (!compatible) continue;
            std::vector<Element> block;
            for (Element p : rest) {
                if (in[static_cast<std::size_t>(p)]) block.push_back(p);
            }
            blocks.push_back(poset.sorted_by_name(block));
            for (Element p : block) remaining[static_cast<std::size_t>(p)] = false;
            walk();
            for (Element p : block) remaining[static_cast<std::size_t>(p)] = true;
            blocks.pop_back();
        }
    };
    walk();
    return out;
}

std::vector<SubdivisionCell> tropical_subdivision(const MarkedPoset& poset)
{
    require_bounded(poset);
    const auto arr = arrangement(poset);
    const auto order = project(poset, hrep_order(poset));
    const auto regions = linearity_regions(poset, arr);
    std::vector<std::map<std::vector<VectorQ>, int, PointListLess>> found(regions.size());
    parallel_for(regions.size(), [&](std::size_t i) {
        const auto v = vertices(regions[i]);
        const auto lattice = face_lattice(regions[i], v);
        for (const auto& face : lattice.faces()) {
            if (face.dim < 0) continue;
            std::vector<VectorQ> pts;
            for (auto j = face.vertices.find_first(); j != VertexSet::npos; j = face.vertices.find_next(j)) {
                pts.push_back(v.vertices[j]);
            }
            found[i].emplace(std::move(pts), face.dim);
        }
    });
    std::map<std::vector<VectorQ>, int, PointListLess> cells;
    for (auto& f : found) cells.merge(f);

    std::vector<SubdivisionCell> out;
    for (const auto& [pts, dim] : cells) {
        SubdivisionCell cell;
        cell.vertices = pts;
        cell.dim = dim;
        const VectorQ b = barycenter(pts);
        cell.covector = covector(arr, embed(poset, b));
        cell.tight = tight_inequalities(order, b);
        out.push_back(std::move(cell));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.dim < b.dim; });
    return out;
}

std::vector<VectorQ> subdivision_vertices(const MarkedPoset& poset)
{
    require_bounded(poset);
    const auto regions = linearity_regions(poset, arrangement(poset));
    std::vector<std::vector<VectorQ>> found(regions.size());
    parallel_for(regions.size(), [&](std::size_t i) { found[i] = vertices(regions[i]).vertices; });
    std::vector<VectorQ> out;
    for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
    sort_unique(out);
    return out;
}

std::vector<VectorQ> transferred_subdivision_vertices(const MarkedPoset& poset, const Parameter& t)
{
    std::vector<VectorQ> out;
    for (const auto& v : subdivision_vertices(poset)) out.push_back(projected_phi(poset, t, v));
    sort_unique(out);
    return out;
}

std::vector<VectorQ> generic_vertices(const MarkedPoset& poset, const Parameter& t)
{
    if (!t.is_interior(poset)) throw NonInteriorParameter();
    return transferred_subdivision_vertices(poset, t);
}

VertexLemmaReport check_vertex_lemma(const MarkedPoset& poset)
{
    const auto arr = arrangement(poset);
    const auto order = project(poset, hrep_order(poset));
    const auto& unmarked = poset.unmarked();
    const auto m = static_cast<Eigen::Index>(unmarked.size());
    VertexLemmaReport report;
    for (const auto& v : subdivision_vertices(poset)) {
        std::vector<VectorQ> rows;
        for (const auto& e : order.equations()) rows.push_back(e.coefficients);
        for (std::size_t i : tight_inequalities(order, v)) rows.push_back(order.inequalities()[i].coefficients);
        for (const auto& sig : covector(arr, embed(poset, v))) {
            for (std::size_t j = 1; j < sig.size(); ++j) {
                VectorQ row = VectorQ::Zero(m);
                for (Eigen::Index k = 0; k < m; ++k) {
                    const auto e = static_cast<std::size_t>(unmarked[static_cast<std::size_t>(k)]);
                    if (e == sig[j]) row(k) += 1;
                    if (e == sig[0]) row(k) -= 1;
                }
                rows.push_back(row);
            }
        }
        MatrixQ a(static_cast<Eigen::Index>(rows.size()), m);
        for (std::size_t i = 0; i < rows.size(); ++i) a.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
        ++report.checked;
        if (rows.empty() ? m != 0 : linalg::rank<Rational>(a) != m) report.failures.push_back(v);
    }
    return report;
}

VertexDegenerationReport check_vertex_degeneration_conjecture(const MarkedPoset& poset, const Parameter& t)
{
    require_bounded(poset);
    if (poset.unmarked().size() > 10) throw TooLarge("the vertex degeneration search is limited to 10 unmarked elements");
    VertexDegenerationReport report;
    report.t = t;
    report.vertices = vertices(project(poset, hrep_general(poset, t))).vertices;

    // Cube vertices u that are degenerations of t: u agrees with t wherever t is 0 or 1.
    std::vector<Partition> targets;
    for (const auto& part : all_partitions(poset)) {
        const auto u = part.vertex(poset);
        bool ok = true;
        for (Element p : poset.unmarked()) {
            if (t.kind(p) != ParameterKind::Interior && t[p] != u[p]) ok = false;
        }
        if (ok) targets.push_back(part);
    }
    std::vector<std::set<VectorQ, LexLess>> target_vertices(targets.size());
    parallel_for(targets.size(), [&](std::size_t i) {
        const auto v = vertices(project(poset, hrep_general(poset, targets[i].vertex(poset)))).vertices;
        target_vertices[i] = std::set<VectorQ, LexLess>(v.begin(), v.end());
    });

    report.witnesses.resize(report.vertices.size());
    for (std::size_t k = 0; k < report.vertices.size(); ++k) {
        const VectorQ pulled = projected_psi(poset, t, report.vertices[k]);
        for (std::size_t i = 0; i < targets.size(); ++i) {
            if (target_vertices[i].count(projected_phi(poset, targets[i].vertex(poset), pulled))) {
                report.witnesses[k].push_back(targets[i]);
            }
        }
        if (report.witnesses[k].empty()) report.unwitnessed.push_back(k);
    }
    return report;
}

}  // namespace mpp
