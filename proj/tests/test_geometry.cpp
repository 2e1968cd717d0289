#include "doctest.h"
#include "support.hpp"

#include "mpp/errors.hpp"
#include "mpp/geometry/affine.hpp"
#include "mpp/geometry/face_lattice.hpp"
#include "mpp/geometry/lattice_points.hpp"
#include "mpp/geometry/lp.hpp"
#include "mpp/geometry/redundancy.hpp"
#include "mpp/geometry/vertices.hpp"
#include "mpp/linalg.hpp"

using namespace mpp;
using mpp::test::Q;
using mpp::test::vq;

namespace {

HRep<Rational> pentagon()
{
    // 0 ≤ x ≤ 2, 0 ≤ y, y ≤ x + 1, y ≤ 3 - x
    HRep<Rational> h({"x", "y"});
    h.add_inequality(vq({-1, 0}), 0);
    h.add_inequality(vq({1, 0}), 2);
    h.add_inequality(vq({0, -1}), 0);
    h.add_inequality(vq({-1, 1}), 1);
    h.add_inequality(vq({1, 1}), 3);
    return h;
}

HRep<Rational> chain_order_polytope()
{
    // 0 ≤ x_p ≤ x_q ≤ 2
    HRep<Rational> h({"p", "q"});
    h.add_inequality(vq({-1, 0}), 0);
    h.add_inequality(vq({1, -1}), 0);
    h.add_inequality(vq({0, 1}), 2);
    return h;
}

HRep<Rational> chain_chain_polytope()
{
    HRep<Rational> h({"p", "q"});
    h.add_inequality(vq({-1, 0}), 0);
    h.add_inequality(vq({0, -1}), 0);
    h.add_inequality(vq({1, 1}), 2);
    return h;
}


}  // namespace

TEST_CASE("rational parsing is canonical")
{
    CHECK(to_string(Q("3/6")) == "1/2");
    CHECK(to_string(Q("-4/2")) == "-2");
    CHECK(to_string(Q("+7")) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK(floor(Q("-1/2")) == -1);
    CHECK(ceil(Q("-1/2")) == 0);
    CHECK(floor(Q("7/2")) == 3);
    CHECK(primitive_direction(vq({Q("1/2"), Q("-3/4")})) == vq({2, -3}));
}

TEST_CASE("linear algebra")
{
    MatrixQ m(2, 3);
    m << 1, 2, 3, 2, 4, 6;
    CHECK(linalg::rank<Rational>(m) == 1);
    const MatrixQ n = linalg::nullspace<Rational>(m);
    CHECK(n.cols() == 2);
    CHECK((m * n).isZero());
    MatrixQ a(2, 2);
    a << 2, 1, 1, 1;
    CHECK(linalg::determinant<Rational>(a) == 1);
    CHECK(*linalg::inverse<Rational>(a) * a == MatrixQ::Identity(2, 2));
    CHECK_FALSE(linalg::inverse<Rational>(MatrixQ(m.topLeftCorner(2, 2))).has_value());
}

TEST_CASE("simplex")
{
    const auto h = pentagon();
    auto r = maximize<Rational>(h, vq({0, 1}));
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == 2);
    r = maximize<Rational>(h, vq({1, 1}));
    CHECK(r.value == 3);
    r = minimize<Rational>(h, vq({1, 1}));
    CHECK(r.value == 0);

    HRep<Rational> infeasible({"x"});
    infeasible.add_inequality(vq({1}), -1);
    infeasible.add_inequality(vq({-1}), 0);
    CHECK(maximize<Rational>(infeasible, vq({1})).status == LpStatus::Infeasible);

    HRep<Rational> ray({"x"});
    ray.add_inequality(vq({-1}), -1);
    CHECK(maximize<Rational>(ray, vq({1})).status == LpStatus::Unbounded);
    CHECK(minimize<Rational>(ray, vq({1})).value == 1);

    HRep<Rational> eq({"x", "y"});
    eq.add_equation(vq({1, 1}), 1);
    eq.add_inequality(vq({-1, 0}), 0);
    eq.add_inequality(vq({0, -1}), 0);
    CHECK(maximize<Rational>(eq, vq({1, 0})).value == 1);
}

TEST_CASE("vertices of small polytopes")
{
    HRep<Rational> segment({"x"});
    segment.add_inequality(vq({1}), 1);
    segment.add_inequality(vq({-1}), 0);
    auto v = vertices(segment);
    CHECK(v.vertices == std::vector<VectorQ>{vq({0}), vq({1})});
    CHECK(v.rays.empty());

    v = vertices(chain_order_polytope());
    CHECK(v.vertices == std::vector<VectorQ>{vq({0, 0}), vq({0, 2}), vq({2, 2})});
    CHECK(vertices_bruteforce(chain_order_polytope()).vertices == v.vertices);

    CHECK(vertices(mpp::test::box(2, 0, 1)).vertices.size() == 4);
    CHECK(vertices_bruteforce(mpp::test::box(2, 0, 1)).vertices.size() == 4);
    CHECK(vertices(pentagon()).vertices.size() == 5);
}

TEST_CASE("unbounded, empty and non-pointed inputs")
{
    HRep<Rational> quadrant({"x", "y"});
    quadrant.add_inequality(vq({-1, 0}), -1);
    quadrant.add_inequality(vq({0, -1}), 0);
    const auto v = vertices(quadrant);
    CHECK(v.vertices == std::vector<VectorQ>{vq({1, 0})});
    CHECK(v.rays == std::vector<VectorQ>{vq({0, 1}), vq({1, 0})});
    CHECK_THROWS_AS(vertices_bruteforce(quadrant), Unbounded);
    CHECK_THROWS_AS(face_lattice(quadrant, v), UnsupportedUnbounded);

    HRep<Rational> halfplane({"x", "y"});
    halfplane.add_inequality(vq({1, 0}), 0);
    CHECK_THROWS_AS(vertices(halfplane), NotPointed);

    HRep<Rational> empty({"x"});
    empty.add_inequality(vq({1}), -1);
    empty.add_inequality(vq({-1}), 0);
    CHECK_THROWS_AS(vertices(empty), EmptyPolyhedron);
    CHECK(lattice_points(empty).empty());
}

TEST_CASE("double description agrees with brute force on random polytopes")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 4;
        const auto h = mpp::test::random_bounded_hrep(rng, n);
        CHECK(vertices(h).vertices == vertices_bruteforce(h).vertices);
    }
}

TEST_CASE("face lattices and f-vectors")
{
    const auto h = pentagon();
    const auto lat = face_lattice(h, vertices(h));
    CHECK(lat.fvector() == std::vector<std::size_t>{5, 5});
    CHECK(lat.size() == 12);
    CHECK(lat.dim() == 2);

    HRep<Rational> rect({"x", "y"});
    rect.add_inequality(vq({-1, 0}), 0);
    rect.add_inequality(vq({1, 0}), 2);
    rect.add_inequality(vq({0, -1}), 0);
    rect.add_inequality(vq({0, 1}), 1);
    CHECK(face_lattice(rect, vertices(rect)).fvector() == std::vector<std::size_t>{4, 4});

    HRep<Rational> point({"x"});
    point.add_equation(vq({1}), 3);
    CHECK(face_lattice(point, vertices(point)).fvector() == std::vector<std::size_t>{1});

    const auto cube = mpp::test::box(3, 0, 1);
    const auto cl = face_lattice(cube, vertices(cube));
    CHECK(cl.fvector() == std::vector<std::size_t>{8, 12, 6});
    // Euler relation for a 3-polytope
    const auto f = cl.fvector();
    CHECK(static_cast<long>(f[0]) - static_cast<long>(f[1]) + static_cast<long>(f[2]) == 2);
}

TEST_CASE("redundancy elimination")
{
    auto h = chain_order_polytope();
    h.add_inequality(vq({0, 1}), 2);  // duplicate
    h.add_inequality(vq({1, 0}), 5);  // implied
    const auto kind = classify_constraints(h);
    CHECK(kind[0] == ConstraintKind::Facet);
    CHECK(kind[2] == ConstraintKind::Redundant);
    CHECK(kind[3] == ConstraintKind::Redundant);
    CHECK(kind[4] == ConstraintKind::Redundant);
    const auto irr = eliminate_redundancy(h);
    CHECK(irr.num_inequalities() == 3);

    HRep<Rational> flat({"x", "y"});
    flat.add_inequality(vq({0, 1}), 0);
    flat.add_inequality(vq({0, -1}), 0);
    flat.add_inequality(vq({1, 0}), 1);
    flat.add_inequality(vq({-1, 0}), 0);
    CHECK(classify_constraints(flat)[0] == ConstraintKind::ImplicitEquality);
    const auto g = eliminate_redundancy(flat);
    CHECK(g.num_equations() == 1);
    CHECK(g.num_inequalities() == 2);
}

TEST_CASE("lattice points and Ehrhart polynomials")
{
    CHECK(lattice_points(chain_order_polytope()).size() == 6);
    CHECK(lattice_points(chain_chain_polytope()).size() == 6);

    HRep<Rational> segment({"x"});
    segment.add_inequality(vq({1}), 1);
    segment.add_inequality(vq({-1}), 0);
    const auto e = ehrhart(segment, 3);
    CHECK(e.counts == std::vector<std::uint64_t>{1, 2, 3, 4});
    CHECK(e.coefficients == std::vector<Rational>{1, 1});

    const auto a = ehrhart(chain_order_polytope(), 4);
    const auto b = ehrhart(chain_chain_polytope(), 4);
    CHECK(a.coefficients == b.coefficients);
    // 2k-dilated standard triangle: (2k+1)(2k+2)/2 = 2k^2 + 3k + 1
    CHECK(a.coefficients == std::vector<Rational>{1, 3, 2});

    HRep<Rational> half({"x"});
    half.add_inequality(vq({2}), 1);
    half.add_inequality(vq({-1}), 0);
    CHECK_THROWS_AS(ehrhart(half, 2), NonLatticeVertices);
}

TEST_CASE("integral closure")
{
    CHECK(is_integrally_closed(mpp::test::box(3, 0, 1)));
    CHECK(is_integrally_closed(chain_order_polytope()));
    // conv{0, e1, e2, (1,1,3)}
    HRep<Rational> s({"x", "y", "z"});
    s.add_inequality(vq({0, 0, -1}), 0);           // z ≥ 0
    s.add_inequality(vq({-3, 0, 1}), 0);           // z ≤ 3x
    s.add_inequality(vq({0, -3, 1}), 0);           // z ≤ 3y
    s.add_inequality(vq({3, 3, -1}), 3);           // 3x + 3y - z ≤ 3
    const auto v = vertices(s);
    CHECK(v.vertices == std::vector<VectorQ>{vq({0, 0, 0}), vq({0, 1, 0}), vq({1, 0, 0}), vq({1, 1, 3})});
    CHECK_FALSE(is_integrally_closed(s));
}

TEST_CASE("affine images")
{
    const auto h = chain_order_polytope();
    const auto id = AffineMap<Rational>::identity(2);
    CHECK(vertices(apply_affine(id, h)).vertices == vertices(h).vertices);
    CHECK(is_unimodular(id));

    AffineMap<Rational> shear{MatrixQ(2, 2), vq({5, -1})};
    shear.linear << 1, 0, -1, 1;
    CHECK(is_unimodular(shear));
    const auto img = apply_affine(shear, h);
    CHECK(lattice_points(img).size() == lattice_points(h).size());
    for (const auto& v : vertices(h).vertices) CHECK(contains(img, shear(v)));

    AffineMap<Rational> singular{MatrixQ::Zero(2, 2), vq({0, 0})};
    CHECK_THROWS_AS(apply_affine(singular, h), SingularMap);
    AffineMap<Rational> scale{MatrixQ::Identity(2, 2) * Rational(2), vq({0, 0})};
    CHECK_FALSE(is_unimodular(scale));
}
