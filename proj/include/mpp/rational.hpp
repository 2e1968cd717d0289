#ifndef MPP_RATIONAL_HPP
#define MPP_RATIONAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace mpp {

// Expression templates are disabled so that `auto` on arithmetic results is safe.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorQ = VectorX<Rational>;
using MatrixQ = MatrixX<Rational>;

/// Parses "n", "-n" or "n/d" (d != 0) into a canonical rational.
/// Throws mpp::ParseError on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical string form: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);
Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// Lexicographic order on equally sized vectors.
template <typename Scalar>
bool lex_less(const VectorX<Scalar>& a, const VectorX<Scalar>& b)
{
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a(i) < b(i)) return true;
        if (b(i) < a(i)) return false;
    }
    return false;
}

struct LexLess {
    template <typename Scalar>
    bool operator()(const VectorX<Scalar>& a, const VectorX<Scalar>& b) const
    {
        if (a.size() != b.size()) return a.size() < b.size();
        return lex_less(a, b);
    }
};

/// Sorts and removes duplicates.
void sort_unique(std::vector<VectorQ>& points);

/// Scales a nonzero rational vector to the primitive integer vector with the same direction.
VectorQ primitive_direction(const VectorQ& v);

std::vector<std::string> to_strings(const VectorQ& v);

}  // namespace mpp

#endif
