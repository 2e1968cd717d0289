#include "mpp/geometry/lattice_points.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <set>

#include "mpp/errors.hpp"
#include "mpp/geometry/vertices.hpp"
#include "mpp/linalg.hpp"

namespace mpp {

namespace {

using Point = std::vector<std::int64_t>;

/// A constraint with integral coefficients, scaled from a rational row.
struct IntRow {
    std::vector<std::int64_t> a;
    std::int64_t b;
};

std::optional<std::int64_t> to_int64(const Integer& v)
{
    if (v > Integer(std::numeric_limits<std::int64_t>::max() / 4) ||
        v < Integer(std::numeric_limits<std::int64_t>::min() / 4)) {
        return std::nullopt;
    }
    return v.convert_to<std::int64_t>();
}

/// Scales a·x ≤ b (or = b) to integer coefficients; integrality of x lets the rhs be floored.
/// Returns nullopt if a value overflows; sets `never` when an equation has no integral solution.
std::optional<IntRow> scale_row(const LinearConstraint<Rational>& c, bool equation, bool& never)
{
    Integer l = 1;
    for (Eigen::Index i = 0; i < c.coefficients.size(); ++i) {
        l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(c.coefficients(i))));
    }
    IntRow row;
    for (Eigen::Index i = 0; i < c.coefficients.size(); ++i) {
        const auto v = to_int64(boost::multiprecision::numerator(Rational(c.coefficients(i) * Rational(l))));
        if (!v) return std::nullopt;
        row.a.push_back(*v);
    }
    const Rational rhs = c.rhs * Rational(l);
    if (equation && !is_integer(rhs)) never = true;
    const auto b = to_int64(floor(rhs));
    if (!b) return std::nullopt;
    row.b = *b;
    return row;
}

bool satisfies(const IntRow& row, const Point& x, bool equation)
{
    __int128 s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<__int128>(row.a[i]) * x[i];
    return equation ? s == row.b : s <= row.b;
}

/// Visits every lattice point of h in lexicographic order.
void scan(const HRep<Rational>& h, const std::function<void(const Point&)>& visit)
{
    VRep<Rational> v;
    try {
        v = vertices(h);
    } catch (const EmptyPolyhedron&) {
        return;
    }
    if (!v.bounded()) throw UnsupportedUnbounded();
    const auto n = static_cast<std::size_t>(h.ambient_dimension());
    Point lo(n), hi(n);
    long double volume = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Rational mn = v.vertices.front()(static_cast<Eigen::Index>(i)), mx = mn;
        for (const auto& p : v.vertices) {
            mn = std::min(mn, Rational(p(static_cast<Eigen::Index>(i))));
            mx = std::max(mx, Rational(p(static_cast<Eigen::Index>(i))));
        }
        const auto l = to_int64(ceil(mn)), u = to_int64(floor(mx));
        if (!l || !u) throw TooLarge("lattice-point bounding box exceeds the supported range");
        if (*l > *u) return;
        lo[i] = *l;
        hi[i] = *u;
        volume *= static_cast<long double>(*u - *l + 1);
    }
    if (volume > static_cast<long double>(lattice_box_limit)) {
        throw TooLarge("lattice-point bounding box has more than 10^7 points");
    }

    bool never = false;
    bool exact_only = false;
    std::vector<IntRow> eqs, ineqs;
    for (const auto& c : h.equations()) {
        auto r = scale_row(c, true, never);
        if (!r) { exact_only = true; break; }
        eqs.push_back(std::move(*r));
    }
    for (const auto& c : h.inequalities()) {
        if (exact_only) break;
        auto r = scale_row(c, false, never);
        if (!r) { exact_only = true; break; }
        ineqs.push_back(std::move(*r));
    }
    if (never) return;

    auto inside = [&](const Point& x) {
        if (exact_only) {
            VectorQ q(static_cast<Eigen::Index>(n));
            for (std::size_t i = 0; i < n; ++i) q(static_cast<Eigen::Index>(i)) = Rational(x[i]);
            return contains(h, q);
        }
        for (const auto& r : eqs) {
            if (!satisfies(r, x, true)) return false;
        }
        for (const auto& r : ineqs) {
            if (!satisfies(r, x, false)) return false;
        }
        return true;
    };

    Point x = lo;
    for (;;) {
        if (inside(x)) visit(x);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (x[i] < hi[i]) {
                ++x[i];
                for (std::size_t j = i + 1; j < n; ++j) x[j] = lo[j];
                break;
            }
            if (i == 0) return;
        }
        if (n == 0) return;
    }
}

VectorQ to_vector(const Point& p)
{
    VectorQ q(static_cast<Eigen::Index>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) q(static_cast<Eigen::Index>(i)) = Rational(p[i]);
    return q;
}

std::set<Point> point_set(const HRep<Rational>& h)
{
    std::set<Point> out;
    scan(h, [&](const Point& p) { out.insert(p); });
    return out;
}

std::set<Point> minkowski(const std::set<Point>& a, const std::set<Point>& b)
{
    std::set<Point> out;
    for (const auto& p : a) {
        for (const auto& q : b) {
            Point s(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) s[i] = p[i] + q[i];
            out.insert(std::move(s));
        }
    }
    return out;
}

void require_lattice_polytope(const VRep<Rational>& v)
{
    if (!v.bounded()) throw UnsupportedUnbounded();
    for (const auto& p : v.vertices) {
        for (Eigen::Index i = 0; i < p.size(); ++i) {
            if (!is_integer(p(i))) throw NonLatticeVertices();
        }
    }
}

}  // namespace

std::vector<VectorQ> lattice_points(const HRep<Rational>& h)
{
    std::vector<VectorQ> out;
    scan(h, [&](const Point& p) { out.push_back(to_vector(p)); });
    return out;
}

std::uint64_t count_lattice_points(const HRep<Rational>& h)
{
    std::uint64_t n = 0;
    scan(h, [&](const Point&) { ++n; });
    return n;
}

Rational EhrhartData::evaluate(const Rational& k) const
{
    Rational value = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) value = value * k + *it;
    return value;
}

EhrhartData ehrhart(const HRep<Rational>& h, int max_dilation)
{
    const auto v = vertices(h);
    require_lattice_polytope(v);
    EhrhartData out;
    out.dimension = linalg::affine_dimension<Rational>(v.vertices);
    if (max_dilation < out.dimension) {
        throw InputError("max_dilation must be at least the dimension " + std::to_string(out.dimension));
    }
    for (int k = 0; k <= max_dilation; ++k) {
        out.counts.push_back(k == 0 ? 1 : count_lattice_points(dilate(h, Rational(k))));
    }
    const auto n = static_cast<Eigen::Index>(max_dilation + 1);
    MatrixQ vandermonde(n, n);
    VectorQ rhs(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        Rational power = 1;
        for (Eigen::Index j = 0; j < n; ++j) {
            vandermonde(k, j) = power;
            power *= k;
        }
        rhs(k) = Rational(out.counts[static_cast<std::size_t>(k)]);
    }
    const VectorQ c = *linalg::solve_unique<Rational>(vandermonde, rhs);
    out.coefficients.assign(c.data(), c.data() + c.size());
    while (out.coefficients.size() > 1 && out.coefficients.back() == 0) out.coefficients.pop_back();
    if (static_cast<int>(out.coefficients.size()) - 1 != out.dimension) {
        throw ComputationError("Ehrhart interpolation has degree different from the dimension");
    }
    for (std::size_t k = 0; k < out.counts.size(); ++k) {
        if (out.evaluate(Rational(k)) != Rational(out.counts[k])) {
            throw ComputationError("Ehrhart interpolation does not reproduce the counts");
        }
    }
    return out;
}

bool is_integrally_closed(const HRep<Rational>& h)
{
    require_lattice_polytope(vertices(h));
    const auto one = point_set(h);
    const auto two = minkowski(one, one);
    for (const auto& p : point_set(dilate(h, Rational(2)))) {
        if (!two.count(p)) return false;
    }
    const auto three = minkowski(two, one);
    for (const auto& p : point_set(dilate(h, Rational(3)))) {
        if (!three.count(p)) return false;
    }
    return true;
}

}  // namespace mpp
