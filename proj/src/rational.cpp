#include "mpp/rational.hpp"

#include <algorithm>
#include <cctype>

#include "mpp/errors.hpp"

namespace mpp {

namespace {

bool valid_integer(std::string_view s, bool allow_sign)
{
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!valid_integer(num, true)) {
        throw ParseError("malformed rational \"" + std::string(text) + "\"");
    }
    const Integer n(std::string(num[0] == '+' ? num.substr(1) : num));
    if (slash == std::string_view::npos) return Rational(n);
    const std::string_view den = text.substr(slash + 1);
    if (!valid_integer(den, false)) {
        throw ParseError("malformed rational \"" + std::string(text) + "\"");
    }
    const Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    return Rational(n) / Rational(d);
}

std::string to_string(const Rational& value)
{
    return value.str();
}

bool is_integer(const Rational& value)
{
    return boost::multiprecision::denominator(value) == 1;
}

Integer floor(const Rational& value)
{
    const Integer n = boost::multiprecision::numerator(value);
    const Integer d = boost::multiprecision::denominator(value);
    Integer q = n / d;
    if (n < 0 && q * d != n) q -= 1;
    return q;
}

Integer ceil(const Rational& value)
{
    return -floor(-value);
}

void sort_unique(std::vector<VectorQ>& points)
{
    std::sort(points.begin(), points.end(), LexLess{});
    points.erase(std::unique(points.begin(), points.end(),
                             [](const VectorQ& a, const VectorQ& b) { return a.size() == b.size() && a == b; }),
                 points.end());
}

VectorQ primitive_direction(const VectorQ& v)
{
    Integer l = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(v(i))));
    }
    Integer g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const Integer k = boost::multiprecision::numerator(v(i)) * (l / boost::multiprecision::denominator(v(i)));
        g = boost::multiprecision::gcd(g, Integer(abs(k)));
    }
    if (g == 0) return v;
    VectorQ out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i) * Rational(l) / Rational(g);
    return out;
}

std::vector<std::string> to_strings(const VectorQ& v)
{
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
    return out;
}

}  // namespace mpp
