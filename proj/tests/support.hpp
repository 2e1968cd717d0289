#ifndef MPP_TESTS_SUPPORT_HPP
#define MPP_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "mpp/geometry/polyhedron.hpp"
#include "mpp/rational.hpp"

namespace mpp::test {

inline Rational Q(const char* s) { return parse_rational(s); }

inline VectorQ vq(std::initializer_list<Rational> values)
{
    VectorQ v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (const auto& x : values) v(i++) = x;
    return v;
}

inline std::vector<std::string> names(int n, const std::string& prefix = "x")
{
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

/// Box [lo, hi]^n.
inline HRep<Rational> box(int n, int lo, int hi)
{
    HRep<Rational> h(names(n));
    for (int i = 0; i < n; ++i) {
        VectorQ e = VectorQ::Zero(n);
        e(i) = 1;
        h.add_inequality(e, Rational(hi));
        h.add_inequality(VectorQ(-e), Rational(-lo));
    }
    return h;
}

/// A random bounded H-rep containing the origin: a box plus random cuts with small integer data.
/// Occasionally adds an equation through the origin.
inline HRep<Rational> random_bounded_hrep(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<int> coef(-2, 2), rhs(0, 3), extra(1, 6), coin(0, 4);
    auto h = box(n, -3, 3);
    const int cuts = extra(rng);
    for (int c = 0; c < cuts; ++c) {
        VectorQ a(n);
        for (int i = 0; i < n; ++i) a(i) = coef(rng);
        h.add_inequality(a, Rational(rhs(rng)));
    }
    if (n > 1 && coin(rng) == 0) {
        VectorQ a(n);
        for (int i = 0; i < n; ++i) a(i) = coef(rng);
        h.add_equation(a, Rational(0));
    }
    return h;
}

}  // namespace mpp::test

#endif
