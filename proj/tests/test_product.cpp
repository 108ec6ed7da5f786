#include <doctest.h>

#include "helpers.hpp"
#include "symchain/product.hpp"

using namespace symchain;

TEST_SUITE("product") {

TEST_CASE("iterating Q_1 reproduces D0 and its complement") {
    ChainDecomposition first = q1_scd(), last = q1_scd();
    for (int n = 2; n <= 8; ++n) {
        first = product_scd(first, q1_scd(), GridRule::FirstCoordinate);
        last = product_scd(last, q1_scd(), GridRule::LastCoordinate);
        CHECK(first == scd_d0_paren(n));
        CHECK(last == complement_scd(scd_d0_paren(n)));
    }
}

TEST_CASE("grid chains") {
    auto d = product_scd(scd_d0_paren(2), scd_d0_paren(3), GridRule::FirstCoordinate);
    CHECK(d.dimension() == 5);
    CHECK(d.size() == 10);
    CHECK(verify_scd(d).ok());
    // (x_1..x_3) x (y_1..y_4): the first chain runs along x at y_1, then up y
    ChainDecomposition a(2, {{V("00"), V("10"), V("11")}, {V("01")}});
    ChainDecomposition b(3, {{V("000"), V("100"), V("110"), V("111")}, {V("001"), V("101")}, {V("010"), V("011")}});
    auto p = product_scd(a, b, GridRule::FirstCoordinate);
    CHECK(verify_scd(p).ok());
    CHECK(chain_strings(p).count({"00000", "10000", "11000", "11100", "11110", "11111"}) == 1);
    CHECK(chain_strings(p).count({"00100", "10100", "11100"}) == 0);
    auto q = product_scd(a, b, GridRule::LastCoordinate);
    CHECK(verify_scd(q).ok());
    CHECK(chain_strings(q).count({"00000", "00100", "00110", "00111", "10111", "11111"}) == 1);
    for (const auto& c : p.chains()) CHECK(c.front().weight() + c.back().weight() == 5);
}

TEST_CASE("families combine index-wise") {
    std::vector<ChainDecomposition> left{scd_d0_paren(6), complement_scd(scd_d0_paren(6)), scd_d1(6)};
    std::vector<ChainDecomposition> right{scd_d0_paren(4), complement_scd(scd_d0_paren(4)), scd_d1(4)};
    auto fam = product_scd_family(left, right);
    REQUIRE(fam.size() == 3);
    for (auto& d : fam) CHECK(verify_scd(d).ok());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) CHECK(edge_disjoint(fam[i], fam[j]));
    right.pop_back();
    CHECK_THROWS_AS(product_scd_family(left, right), std::invalid_argument);
    CHECK(product_scd_family({scd_d0_paren(3)}, {scd_d0_paren(2)}).size() == 1);
}

TEST_CASE("the iterated D0 product pair") {
    for (int n = 1; n <= 5; ++n) {
        auto d = iterated_d0_product(n), e = iterated_d0_product(n, true);
        CHECK(d.dimension() == 2 * n + 1);
        CHECK(verify_scd(d).ok());
        CHECK(verify_scd(e).ok());
        CHECK(edge_disjoint(d, e));
        CHECK(d == scd_d0_paren(2 * n + 1));
    }
}

TEST_CASE("rejects invalid inputs") {
    ChainDecomposition bad(2, {{V("00"), V("11")}, {V("01")}, {V("10")}});
    CHECK_THROWS_AS(product_scd(bad, q1_scd(), GridRule::FirstCoordinate), std::invalid_argument);
}

}
