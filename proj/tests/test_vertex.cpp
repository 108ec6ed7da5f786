#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "symchain/band.hpp"
#include "symchain/vertex.hpp"

using namespace symchain;

TEST_SUITE("vertex") {

TEST_CASE("string round trip and positions") {
    Vertex v = V("1101");
    CHECK(v.length() == 4);
    CHECK(v.at(1));
    CHECK_FALSE(v.at(3));
    CHECK(v.to_string() == "1101");
    CHECK(v.weight() == 3);
    CHECK(v.flipped(3).to_string() == "1111");
    CHECK(Vertex::from_word(4, 0b0011).to_string() == "1100");
    Vertex wide = Vertex::ones(100).flipped(100);
    CHECK(wide.weight() == 99);
    CHECK(wide.to_string().back() == '0');
    CHECK_THROWS(V("10a"));
}

TEST_CASE("ordering is lexicographic on the string") {
    auto all = oracle::all_strings(6);
    std::vector<Vertex> vs;
    for (auto& s : all) vs.push_back(V(s));
    for (std::size_t i = 1; i < vs.size(); ++i) CHECK(vs[i - 1] < vs[i]);
    CHECK(V(std::string(70, '0') + "1") > V(std::string(70, '0')));
    CHECK(V("0" + std::string(80, '1')) < V("1" + std::string(80, '0')));
}

TEST_CASE("complement, reverse, slicing") {
    for (auto& s : oracle::all_strings(7)) {
        CHECK(complement(V(s)).to_string() == oracle::complement(s));
        CHECK(comp_rev(V(s)).to_string() == oracle::comp_rev(s));
        CHECK(slice(V(s), 3, 4).to_string() == s.substr(2, 4));
        CHECK(concat(V(s), V("01")).to_string() == s + "01");
    }
    CHECK(flip_position(V("0110"), V("0100")) == 3);
    CHECK(flip_position(V("0110"), V("1100")) == 0);
}

TEST_CASE("Dyck classes agree with the string oracle") {
    for (int n = 1; n <= 11; n += 2)
        for (auto& s : oracle::level(n, (n + 1) / 2)) {
            std::string want = oracle::dyck_class(s);
            static const std::map<DyckClass, std::string> sym{{DyckClass::StrictlyPositive, ">0"},
                                                              {DyckClass::TouchesZero, "=0"},
                                                              {DyckClass::BelowOnce, "-"},
                                                              {DyckClass::Other, "other"}};
            std::string got = sym.at(classify_dyck(V(s)));
            CHECK_MESSAGE(got == want, s);
            if (want == "=0") {
                auto [u, w] = canonical_decompose(V(s));
                auto [ou, ow] = oracle::canonical(s);
                CHECK(u.to_string() == ou);
                CHECK(w.to_string() == ow);
            }
        }
    CHECK(is_dyck_word(V("110100")));
    CHECK_FALSE(is_dyck_word(V("100110")));
}

TEST_CASE("trees round trip through Dyck words") {
    for (int m = 1; m <= 6; ++m)
        for (auto& s : oracle::level(2 * m, m))
            if (oracle::is_dyck(s)) {
                auto t = dyck_to_tree(V(s));
                CHECK(t.edge_count() == m);
                CHECK(tree_to_dyck(t).to_string() == s);
            }
}

TEST_CASE("level enumeration and band ranks") {
    for (int n = 1; n <= 10; ++n)
        for (int k = 0; k <= n; ++k) {
            auto got = level_vertices(n, k);
            auto want = oracle::level(n, k);
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].to_string() == want[i]);
        }
    BandIndex band(9, 3, 6);
    CHECK(band.size() == oracle::binom(9, 3) + oracle::binom(9, 4) + oracle::binom(9, 5) + oracle::binom(9, 6));
    for (std::uint32_t r = 0; r < band.size(); ++r) CHECK(band.rank(band.vertex(r)) == r);
    CHECK_FALSE(band.contains(V("111111100")));
    CHECK(binomial(60, 30) == 118264581564861424ULL);
}

}
