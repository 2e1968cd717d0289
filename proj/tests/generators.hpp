#ifndef MPP_TESTS_GENERATORS_HPP
#define MPP_TESTS_GENERATORS_HPP

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mpp/family.hpp"
#include "mpp/io.hpp"
#include "mpp/poset.hpp"

namespace mpp::test {

/// Loads a poset fixture from the test data directory.
inline MarkedPoset load_poset(const std::string& name)
{
    return io::poset_from_json(io::read_json_file(std::string(MPP_TEST_DATA) + "/" + name));
}

struct PosetShape {
    int min_unmarked = 1;
    int max_unmarked = 4;
    int max_size = 8;
    bool bounded = false;  // mark every maximal element as well
    bool strict = false;   // strictly increasing marking along the order
    int edge_percent = 40;
};

/// A random valid marked poset with integral marking. Minimal elements are always marked.
inline MarkedPoset random_poset(std::mt19937_64& rng, const PosetShape& shape)
{
    std::uniform_int_distribution<int> percent(0, 99);
    for (;;) {
        const int n = std::uniform_int_distribution<int>(2, shape.max_size)(rng);
        // Relations only go from lower to higher index, so the index order is a linear extension.
        std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (percent(rng) < shape.edge_percent) less[i][j] = true;
            }
        }
        for (int k = 0; k < n; ++k) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (less[i][k] && less[k][j]) less[i][j] = true;
                }
            }
        }
        std::vector<bool> has_below(n, false), has_above(n, false);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (less[i][j]) has_above[i] = has_below[j] = true;
            }
        }
        std::vector<bool> marked(n, false);
        for (int i = 0; i < n; ++i) {
            if (!has_below[i]) marked[i] = true;
            if (shape.bounded && !has_above[i]) marked[i] = true;
        }
        std::vector<int> free;
        for (int i = 0; i < n; ++i) {
            if (!marked[i]) free.push_back(i);
        }
        // Mark some further elements at random, keeping the unmarked count in range.
        std::shuffle(free.begin(), free.end(), rng);
        while (static_cast<int>(free.size()) > shape.min_unmarked && percent(rng) < 30) {
            marked[free.back()] = true;
            free.pop_back();
        }
        const int unmarked = static_cast<int>(free.size());
        if (unmarked < shape.min_unmarked || unmarked > shape.max_unmarked) continue;

        std::vector<std::string> names(n);
        int pm = 0, pu = 0;
        for (int i = 0; i < n; ++i) names[i] = marked[i] ? "m" + std::to_string(pm++) : "u" + std::to_string(pu++);
        std::vector<std::pair<std::string, std::string>> covers;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (!less[i][j]) continue;
                bool direct = true;
                for (int k = 0; k < n && direct; ++k) {
                    if (less[i][k] && less[k][j]) direct = false;
                }
                if (direct) covers.emplace_back(names[i], names[j]);
            }
        }
        std::map<std::string, Rational> marking;
        int value = std::uniform_int_distribution<int>(-2, 2)(rng);
        for (int i = 0; i < n; ++i) {
            value += std::uniform_int_distribution<int>(shape.strict ? 1 : 0, 2)(rng);
            if (marked[i]) marking[names[i]] = value;
        }
        return MarkedPoset(names, covers, marking);
    }
}

/// A ranked poset with covers between consecutive ranks and λ = 10·rank + noise, made regular.
/// Returns false when the regularized poset is no longer ranked or regular.
inline bool random_ranked_regular_poset(std::mt19937_64& rng, int max_unmarked, MarkedPoset& out)
{
    std::uniform_int_distribution<int> percent(0, 99);
    const int ranks = std::uniform_int_distribution<int>(3, 4)(rng);
    std::vector<std::vector<std::string>> layer(ranks);
    std::map<std::string, Rational> marking;
    std::vector<std::string> elements;
    int unmarked = 0;
    for (int r = 0; r < ranks; ++r) {
        const int width = std::uniform_int_distribution<int>(1, 2)(rng);
        for (int i = 0; i < width; ++i) {
            const bool mark = r == 0 || r == ranks - 1 || percent(rng) < 25;
            const std::string name = (mark ? "m" : "u") + std::to_string(r) + std::to_string(i);
            if (mark) marking[name] = 10 * r + std::uniform_int_distribution<int>(0, 9)(rng);
            else ++unmarked;
            layer[r].push_back(name);
            elements.push_back(name);
        }
    }
    if (unmarked == 0 || unmarked > max_unmarked) return false;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int r = 1; r < ranks; ++r) {
        for (const auto& hi : layer[r]) {
            bool any = false;
            for (const auto& lo : layer[r - 1]) {
                if (percent(rng) < 60) {
                    covers.emplace_back(lo, hi);
                    any = true;
                }
            }
            if (!any) covers.emplace_back(layer[r - 1][0], hi);
        }
        for (const auto& lo : layer[r - 1]) {
            const bool has_up = std::any_of(covers.begin(), covers.end(), [&](const auto& c) { return c.first == lo; });
            if (!has_up) covers.emplace_back(lo, layer[r][0]);
        }
    }
    MarkedPoset p(elements, covers, marking);
    if (!validate(p).ok()) return false;
    auto reg = remove_redundant_covers(p).poset;
    if (!validate(reg).ok() || !is_regular(reg) || !rank_function(reg) || !is_bounded(reg)) return false;
    out = reg;
    return true;
}

inline Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den = 6)
{
    const int den = std::uniform_int_distribution<int>(1, max_den)(rng);
    const int num = std::uniform_int_distribution<int>(lo * den, hi * den)(rng);
    return Rational(num) / Rational(den);
}

/// A random parameter in the open cube, or with each coordinate 0, 1 or arbitrary with equal odds.
inline Parameter random_parameter(std::mt19937_64& rng, const MarkedPoset& poset, bool interior)
{
    std::map<std::string, Rational> m;
    for (Element p : poset.unmarked()) {
        if (interior) {
            const int den = std::uniform_int_distribution<int>(2, 7)(rng);
            m[poset.name(p)] = Rational(std::uniform_int_distribution<int>(1, den - 1)(rng)) / Rational(den);
        } else {
            const int kind = std::uniform_int_distribution<int>(0, 2)(rng);
            m[poset.name(p)] = kind == 0 ? Rational(0) : kind == 1 ? Rational(1) : random_rational(rng, 0, 1);
        }
    }
    return Parameter(poset, m);
}

inline VectorQ random_point(std::mt19937_64& rng, std::size_t n)
{
    VectorQ x(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = random_rational(rng, -5, 5);
    return x;
}

}  // namespace mpp::test

#endif
