#include <doctest.h>

#include "helpers.hpp"
#include "symchain/trees.hpp"

using namespace symchain;

namespace {

// T_{n+1}: (x,0) for x in level n+1 of Q_{2n+1} touching zero.
std::vector<std::string> tree_words(int n) {
    std::vector<std::string> out;
    for (auto& x : oracle::level(2 * n + 1, n + 1))
        if (oracle::dyck_class(x) == "=0") out.push_back(x + "0");
    return out;
}

}  // namespace

TEST_SUITE("trees") {

TEST_CASE("rotations invert each other and rho permutes T_{n+1}") {
    for (int n = 1; n <= 7; ++n) {
        auto ts = tree_words(n);
        std::set<std::string> all(ts.begin(), ts.end()), images;
        for (auto& s : ts) {
            Vertex t = V(s);
            REQUIRE(is_tree_word(t));
            Vertex r = rho(t);
            CHECK(all.count(r.to_string()) == 1);
            images.insert(r.to_string());
            CHECK(rho_inverse(r) == t);
            if (left_light(t))
                CHECK(inverse_light_rotation(light_rotation(t)) == t);
            else
                CHECK(inverse_heavy_rotation(heavy_rotation(t)) == t);
        }
        CHECK(images == all);
    }
}

TEST_CASE("rho follows the next-first-vertex formulas") {
    for (int n = 1; n <= 7; ++n)
        for (auto& s : tree_words(n)) {
            std::string x = s.substr(0, s.size() - 1);
            CHECK_MESSAGE(from_tree(rho(V(s))).to_string() == oracle::next_first(x), x);
        }
}

TEST_CASE("pulls agree with the explicit tree oracle") {
    for (int n = 1; n <= 7; ++n)
        for (auto& s : tree_words(n)) {
            Vertex t = V(s);
            std::set<std::string> got;
            for (int j = 1; j <= t.length(); ++j)
                if (can_pull(t, j)) {
                    Vertex p = pull(t, j);
                    got.insert(p.to_string());
                    CHECK(can_inverse_pull(p, j));
                    CHECK(inverse_pull(p, j) == t);
                }
            CHECK_MESSAGE(got == oracle::all_pulls(s), s);
        }
}

TEST_CASE("star tree") {
    CHECK(star_tree(1).to_string() == "1010");
    CHECK(star_tree(3).to_string() == "11010010");
    for (int n = 1; n <= 8; ++n) {
        Vertex s = star_tree(n);
        CHECK(s.length() == 2 * n + 2);
        CHECK(is_tree_word(s));
        CHECK(right_light(s));
    }
}

TEST_CASE("trivalent canonical form") {
    for (int n = 1; n <= 6; ++n)
        for (auto& s : tree_words(n)) CHECK(trivalent_canonical(rho(V(s))) == trivalent_canonical(V(s)));
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> forms;
        for (auto& s : tree_words(n)) forms.insert(trivalent_canonical(V(s)));
        CHECK(forms.size() == oracle::trivalent_burnside(n));
    }
}

TEST_CASE("rejects malformed trees") {
    CHECK_THROWS_AS(heavy_rotation(V("1010")), std::invalid_argument);
    CHECK_THROWS_AS(rho(V("1100")), std::invalid_argument);
    CHECK_FALSE(can_pull(V("1010"), 1));
}

}
