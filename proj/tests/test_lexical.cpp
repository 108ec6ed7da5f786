#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "symchain/lexical.hpp"

using namespace symchain;

TEST_SUITE("lexical") {

TEST_CASE("agrees with the row-wise scan oracle") {
    for (int n = 1; n <= 9; ++n)
        for (int k = 0; k < n; ++k)
            for (int i = 0; i <= lexical_max_index(n, k); ++i) {
                for (auto& x : oracle::level(n, k)) {
                    auto got = lex_up({n, k, i}, V(x));
                    auto want = oracle::lex_up(x, i);
                    REQUIRE(got.has_value() == want.has_value());
                    if (got) CHECK(got->to_string() == *want);
                }
                for (auto& y : oracle::level(n, k + 1)) {
                    auto got = lex_down({n, k, i}, V(y));
                    auto want = oracle::lex_down(y, i);
                    REQUIRE(got.has_value() == want.has_value());
                    if (got) CHECK(got->to_string() == *want);
                }
            }
}

// Saturation of the smaller level, edge partition, and the complement and
// reversal symmetries, for all n <= 9.
TEST_CASE("matching properties") {
    for (int n = 1; n <= 9; ++n)
        for (int k = 0; k < n; ++k) {
            const int l = lexical_max_index(n, k);
            CHECK(l == std::max(k, n - k - 1));
            std::set<std::pair<std::string, std::string>> all;
            const std::size_t small = std::min(oracle::binom(n, k), oracle::binom(n, k + 1));
            for (int i = 0; i <= l; ++i) {
                auto m = lex_matching({n, k, i});
                CHECK(m.size() == small);
                std::set<Vertex> lo, hi;
                for (auto& e : m) {
                    CHECK(e.lower.weight() == k);
                    CHECK(flip_position(e.lower, e.upper) != 0);
                    CHECK(lo.insert(e.lower).second);
                    CHECK(hi.insert(e.upper).second);
                    CHECK(all.insert({e.lower.to_string(), e.upper.to_string()}).second);
                    CHECK(lex_down({n, k, i}, e.upper) == e.lower);
                }
                // complement maps M^i_{n,k} to M^{l-i}_{n,n-k-1}; reversal to M^{l-i}_{n,k}
                std::set<Edge> comp, rev, comprev;
                for (auto& e : m) {
                    comp.insert({complement(e.upper), complement(e.lower)});
                    rev.insert({reverse(e.lower), reverse(e.upper)});
                    comprev.insert({comp_rev(e.upper), comp_rev(e.lower)});
                }
                auto as_set = [](const std::vector<Edge>& es) { return std::set<Edge>(es.begin(), es.end()); };
                CHECK(comp == as_set(lex_matching({n, n - k - 1, l - i})));
                CHECK(rev == as_set(lex_matching({n, k, l - i})));
                CHECK(comprev == as_set(lex_matching({n, n - k - 1, i})));
            }
            CHECK(all.size() == oracle::binom(n, k) * static_cast<std::size_t>(n - k));
        }
}

// Levels 9 and 10 of Q_22.
TEST_CASE("incidence of the two quoted vertices of Q_22") {
    const Vertex x = V("1110001001001001100001");
    const Vertex y = V("1110001001001001100101");
    REQUIRE(x.weight() == 9);
    REQUIRE(y.weight() == 10);
    REQUIRE(lexical_max_index(22, 9) == 12);
    std::set<int> x_matched, y_unmatched;
    for (int i = 0; i <= 12; ++i) {
        if (lex_up({22, 9, i}, x)) x_matched.insert(i);
        if (!lex_down({22, 9, i}, y)) y_unmatched.insert(i);
    }
    CHECK(x_matched.size() == 13);
    CHECK(y_unmatched == std::set<int>{4, 6, 9});
    CHECK(lex_up({22, 9, 11}, x) == y);
}

TEST_CASE("small examples") {
    CHECK(lex_up({3, 2, 0}, V("110")) == V("111"));
    CHECK_FALSE(lex_up({3, 2, 2}, V("110")).has_value());
    CHECK(lex_matching({3, 2, 2}) == std::vector<Edge>{{V("011"), V("111")}});
    CHECK_THROWS_AS(lex_up({3, 2, 3}, V("110")), std::invalid_argument);
    CHECK_THROWS_AS(lex_up({3, 1, 0}, V("110")), std::invalid_argument);
}

}
