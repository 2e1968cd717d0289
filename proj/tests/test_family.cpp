#include "doctest.h"
#include "generators.hpp"
#include "support.hpp"

#include <random>

#include "mpp/errors.hpp"
#include "mpp/family.hpp"
#include "mpp/geometry/affine.hpp"
#include "mpp/geometry/redundancy.hpp"
#include "mpp/geometry/vertices.hpp"
#include "mpp/io.hpp"

using namespace mpp;
using mpp::test::load_poset;
using mpp::test::Q;
using mpp::test::vq;

namespace {

Parameter param(const MarkedPoset& poset, std::map<std::string, Rational> m) { return Parameter(poset, m); }

const LinearConstraint<Rational>& constraint_tagged(const HRep<Rational>& h, const std::string& tag)
{
    for (const auto& c : h.inequalities()) {
        if (c.origin == tag) return c;
    }
    FAIL("no constraint tagged " << tag);
    throw std::logic_error("unreachable");
}

/// Points of O(P,λ) in the full space: vertices and a few midpoints between them.
std::vector<VectorQ> sample_order_points(const MarkedPoset& poset, std::mt19937_64& rng)
{
    const auto v = vertices(project(poset, hrep_order(poset)));
    std::vector<VectorQ> out;
    for (const auto& y : v.vertices) out.push_back(embed(poset, y));
    std::uniform_int_distribution<std::size_t> pick(0, v.vertices.size() - 1);
    for (int i = 0; i < 4; ++i) {
        VectorQ y = (v.vertices[pick(rng)] + v.vertices[pick(rng)]) / Rational(2);
        for (const auto& ray : v.rays) y += ray;
        out.push_back(embed(poset, y));
    }
    return out;
}

}  // namespace

TEST_CASE("parameters and partitions")
{
    const auto ex = load_poset("running_example.json");
    const auto t = io::parameter_from_json(ex, io::read_json_file(std::string(MPP_TEST_DATA) + "/t_running_example.json"));
    CHECK(t[ex.index("q")] == Q("2/3"));
    CHECK(t.is_interior(ex));
    CHECK_FALSE(t.is_vertex(ex));
    CHECK(io::parameter_to_json(ex, t)["t"]["r"] == "1/2");
    CHECK_THROWS_AS(param(ex, {{"p", Q("3/2")}}), InputError);
    CHECK_THROWS_AS(param(ex, {{"0", Q("1/2")}}), InputError);
    CHECK_THROWS_AS(param(ex, {{"nope", Q("1/2")}}), InputError);

    const auto g = Parameter::generic(ex);
    CHECK(g[ex.index("p")] == Q("1/4"));
    CHECK(g[ex.index("r")] == Q("3/4"));

    const auto part = io::partition_from_json(ex, io::read_json_file(std::string(MPP_TEST_DATA) + "/partition_running_example.json"));
    CHECK(part.C == std::set<Element>{ex.index("p"), ex.index("q")});
    CHECK(Partition::from_vertex(ex, part.vertex(ex)).C == part.C);
    CHECK_THROWS_AS(Partition::from_names(ex, {"p"}, {"r"}), InputError);
    CHECK_THROWS_AS(Partition::from_vertex(ex, t), InputError);
    CHECK(all_partitions(ex).size() == 8);
}

TEST_CASE("general H-representation")
{
    const MarkedPoset chain({"a", "p", "b"}, {{"a", "p"}, {"p", "b"}}, {{"a", 0}, {"b", 1}});
    for (const char* tp : {"0", "1"}) {
        const auto h = project(chain, hrep_general(chain, param(chain, {{"p", Q(tp)}})));
        REQUIRE(h.num_inequalities() == 2);
        CHECK(h.inequalities()[0].coefficients == vq({-1}));
        CHECK(h.inequalities()[0].rhs == 0);
        CHECK(h.inequalities()[1].coefficients == vq({1}));
        CHECK(h.inequalities()[1].rhs == 1);
    }

    const auto ex = load_poset("running_example.json");
    const auto h = hrep_general(ex, param(ex, {{"r", Q("1/2")}}));
    const auto& c = constraint_tagged(h, "chain:0<p<r");
    VectorQ expected = VectorQ::Zero(7);
    expected(ex.index("p")) = Q("1/2");
    expected(ex.index("r")) = -1;
    CHECK(c.coefficients == expected);
    CHECK(h.num_equations() == 4);
    // Chains into r (3), into p and q (1 each), into 3 and 4 with r ≥ 1 (2 and 3).
    CHECK(h.num_inequalities() == 10);

    const auto o = vertices(project(ex, hrep_order(ex)));
    CHECK(o.vertices.size() == 11);
    CHECK(o.rays.empty());
}

TEST_CASE("chain-order H-representation")
{
    const auto chain = load_poset("chain.json");
    const auto all = Partition::from_names(chain, {"p", "q"}, {});
    const auto h = project(chain, hrep_chain_order(chain, all));
    REQUIRE(h.num_inequalities() == 3);
    CHECK(h.inequalities()[0].origin == "nonneg:p");
    CHECK(h.inequalities()[1].origin == "nonneg:q");
    CHECK(h.inequalities()[2].coefficients == vq({1, 1}));
    CHECK(h.inequalities()[2].rhs == 2);

    const auto order = project(chain, hrep_order(chain));
    REQUIRE(order.num_inequalities() == 3);
    CHECK(order.inequalities()[0].origin == "chain:a<p");
    CHECK(order.inequalities()[1].origin == "chain:p<q");
    CHECK(order.inequalities()[2].origin == "chain:q<b");
    const auto v = vertices(order);
    CHECK(v.vertices == std::vector<VectorQ>{vq({0, 0}), vq({0, 2}), vq({2, 2})});
}

TEST_CASE("cube vertices agree with the chain-order description")
{
    std::vector<MarkedPoset> posets{load_poset("running_example.json"), load_poset("chain.json")};
    std::mt19937_64 rng(21);
    for (int i = 0; i < 8; ++i) posets.push_back(mpp::test::random_poset(rng, {1, 3, 7, i % 2 == 0, false, 45}));
    for (const auto& poset : posets) {
        for (const auto& part : all_partitions(poset)) {
            const auto a = vertices(eliminate_redundancy(project(poset, hrep_general(poset, part.vertex(poset)))));
            const auto b = vertices(eliminate_redundancy(project(poset, hrep_chain_order(poset, part))));
            CHECK(a.vertices == b.vertices);
            CHECK(a.rays == b.rays);
        }
    }
}

TEST_CASE("transfer maps")
{
    const auto chain = load_poset("chain.json");
    const auto one = Parameter::constant(chain, 1);
    CHECK(transfer_phi(chain, one, vq({0, 1, 2, 2})) == vq({0, 1, 1, 2}));
    CHECK(transfer_psi(chain, one, vq({0, 1, 1, 2})) == vq({0, 1, 2, 2}));
    CHECK(transfer_psi_closed(chain, one, vq({0, 1, 1, 2})) == vq({0, 1, 2, 2}));

    const auto ex = load_poset("running_example.json");
    const auto t = param(ex, {{"r", Q("1/2")}});
    const VectorQ x = embed(ex, vq({2, 2, 2}));
    CHECK(projected_phi(ex, t, vq({2, 2, 2})) == vq({2, 2, 1}));
    CHECK(project(ex, transfer_phi(ex, Parameter::constant(ex, 0), x)) == vq({2, 2, 2}));

    const MarkedPoset single({"a", "p"}, {{"a", "p"}}, {{"a", 5}});
    const auto h = param(single, {{"p", Q("1/3")}});
    CHECK(transfer_psi_closed(single, h, vq({5, 1}))(1) == 1 + Q("5/3"));

    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 150; ++trial) {
        const auto p = mpp::test::random_poset(rng, {1, 4, 8, false, false, 40});
        const auto u = mpp::test::random_parameter(rng, p, trial % 2 == 0);
        const auto w = mpp::test::random_parameter(rng, p, false);
        const auto z = mpp::test::random_parameter(rng, p, true);
        const auto y = mpp::test::random_point(rng, p.size());
        CHECK(transfer_psi(p, u, transfer_phi(p, u, y)) == y);
        CHECK(transfer_phi(p, u, transfer_psi(p, u, y)) == y);
        CHECK(transfer_psi_closed(p, u, y) == transfer_psi(p, u, y));
        CHECK(transfer_theta(p, u, u, y) == y);
        CHECK(transfer_theta(p, w, z, transfer_theta(p, u, w, y)) == transfer_theta(p, u, z, y));
        CHECK(transfer_theta(p, Parameter::constant(p, 0), u, y) == transfer_phi(p, u, y));
        const auto py = project(p, y);
        CHECK(projected_psi(p, u, projected_phi(p, u, py)) == py);
    }
}

TEST_CASE("transfer maps land in the general polyhedron")
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = mpp::test::random_poset(rng, {1, 4, 7, trial % 2 == 0, false, 45});
        const auto t = mpp::test::random_parameter(rng, p, trial % 3 == 0);
        const auto h = hrep_general(p, t);
        for (const auto& x : sample_order_points(p, rng)) CHECK(contains(h, transfer_phi(p, t, x)));
    }
}

TEST_CASE("maximizing relation and tightness")
{
    const auto ex = load_poset("running_example.json");
    const VectorQ x = embed(ex, vq({2, 2, 2}));
    const auto rel = maximizing_relation(ex, x);
    CHECK(rel.argmax[static_cast<std::size_t>(ex.index("r"))] ==
          std::vector<Element>{ex.index("2"), ex.index("p"), ex.index("q")});
    CHECK(maximizing_relation(ex, VectorQ(x.array() + 7)).argmax == rel.argmax);

    const auto chain = load_poset("chain.json");
    const auto generic = Parameter::generic(chain);
    const VectorQ interior = vq({0, Q("1/2"), 1, 2});
    for (Element p = 0; p < 4; ++p) {
        for (const auto& c : saturated_chains_to(chain, p)) CHECK_FALSE(tightness(chain, generic, interior, c));
    }

    std::mt19937_64 rng(4);
    int tight = 0, total = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const auto p = mpp::test::random_poset(rng, {1, 4, 7, trial % 2 == 0, false, 45});
        const auto t = mpp::test::random_parameter(rng, p, trial % 4 == 0);
        for (const auto& x0 : sample_order_points(p, rng)) {
            const VectorQ y = transfer_phi(p, t, x0);
            for (Element q = 0; q < static_cast<Element>(p.size()); ++q) {
                for (const auto& c : saturated_chains_to(p, q)) {
                    if (p.is_marked(q) && c.r() == 0) continue;
                    const bool direct = chain_slack(p, t, c, y) == 0;
                    CHECK(tightness(p, t, x0, c) == direct);
                    tight += direct ? 1 : 0;
                    ++total;
                }
            }
        }
    }
    CHECK(tight > 0);
    CHECK(tight < total);
}

TEST_CASE("tameness")
{
    CHECK(is_tame(load_poset("running_example.json")));
    CHECK(is_tame(MarkedPoset({"a", "p", "b"}, {{"a", "p"}, {"p", "b"}}, {{"a", 0}, {"b", 1}})));
    CHECK_FALSE(is_tame(MarkedPoset({"a", "p", "b"}, {{"a", "p"}, {"p", "b"}}, {{"a", 1}, {"b", 1}})));

    std::vector<std::string> many{"a", "b"};
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 0; i < 13; ++i) {
        many.push_back("u" + std::to_string(i));
        covers.emplace_back("a", many.back());
        covers.emplace_back(many.back(), "b");
    }
    CHECK_THROWS_AS(is_tame(MarkedPoset(many, covers, {{"a", 0}, {"b", 1}})), TooLarge);

    std::mt19937_64 rng(6);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 10; ++trial) {
        MarkedPoset p;
        if (!mpp::test::random_ranked_regular_poset(rng, 4, p)) continue;
        CHECK(is_tame(p));
        ++checked;
    }
    CHECK(checked == 10);
}

TEST_CASE("facet count changes")
{
    // Two order chains below q and two above: a single star move adds one facet.
    const MarkedPoset star({"a", "u1", "u2", "q", "v1", "v2", "b"},
                           {{"a", "u1"}, {"a", "u2"}, {"u1", "q"}, {"u2", "q"}, {"q", "v1"}, {"q", "v2"}, {"v1", "b"}, {"v2", "b"}},
                           {{"a", 0}, {"b", 4}});
    REQUIRE(is_regular(star));
    REQUIRE(rank_function(star));
    const auto none = Partition::from_chain_set(star, {});
    const Element q = star.index("q");
    CHECK(star_elements(star, none.C, none.O) == std::vector<Element>{q});
    CHECK(facet_count_delta(star, none, q) == 1);
    CHECK(measured_facet_delta(star, none, q) == 1);
    CHECK(facet_count(star, none) == 8);

    const auto ex = load_poset("running_example.json");
    for (const auto& part : all_partitions(ex)) {
        for (Element e : part.O) CHECK(facet_count_delta(ex, part, e) == measured_facet_delta(ex, part, e));
    }
    CHECK_THROWS_AS(facet_count_delta(ex, Partition::from_chain_set(ex, {ex.index("p")}), ex.index("p")), InputError);

    std::mt19937_64 rng(8);
    int cases = 0;
    for (int trial = 0; trial < 300 && cases < 60; ++trial) {
        MarkedPoset p;
        if (!mpp::test::random_ranked_regular_poset(rng, 4, p)) continue;
        for (const auto& part : all_partitions(p)) {
            for (Element e : part.O) {
                CHECK(facet_count_delta(p, part, e) == measured_facet_delta(p, part, e));
                ++cases;
            }
        }
    }
    CHECK(cases >= 60);
}

TEST_CASE("non-star moves are unimodular")
{
    std::vector<MarkedPoset> posets{load_poset("running_example.json"), load_poset("chain.json")};
    std::mt19937_64 rng(10);
    for (int i = 0; i < 10; ++i) posets.push_back(mpp::test::random_poset(rng, {1, 4, 7, true, true, 45}));
    int moves = 0;
    for (const auto& poset : posets) {
        for (const auto& part : all_partitions(poset)) {
            const auto stars = star_elements(poset, part.C, part.O);
            for (Element q : part.O) {
                if (std::count(stars.begin(), stars.end(), q)) continue;
                Partition moved = part;
                moved.O.erase(q);
                moved.C.insert(q);
                const auto map = star_move_map(poset, part, q);
                CHECK(is_unimodular(map));
                const auto image = vertices(apply_affine(map, hrep_chain_order(poset, part)));
                const auto target = vertices(hrep_chain_order(poset, moved));
                CHECK(image.vertices == target.vertices);
                ++moves;
            }
        }
    }
    CHECK(moves > 50);
}

TEST_CASE("irrelevant parameters")
{
    const auto ex = load_poset("running_example.json");
    CHECK(irrelevant_parameters(ex) == std::vector<Element>{ex.index("p"), ex.index("q")});
    const auto chain = load_poset("chain.json");
    CHECK(irrelevant_parameters(chain) == std::vector<Element>{chain.index("p"), chain.index("q")});
}
