#include <doctest.h>

#include <set>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "symchain/factor.hpp"
#include "symchain/product.hpp"

using namespace symchain;

namespace {

std::map<int, std::vector<std::size_t>> read_table(const std::string& name) {
    std::ifstream in(std::string(SYMCHAIN_FIXTURES) + "/" + name);
    REQUIRE(in.good());
    std::map<int, std::vector<std::size_t>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int n;
        ls >> n;
        std::size_t c;
        while (ls >> c) rows[n].push_back(c);
    }
    return rows;
}

std::vector<std::size_t> row(const ChainDecomposition& a, const ChainDecomposition& b, int n) {
    std::vector<std::size_t> out;
    for (int ell = 1; ell <= n + 1; ++ell) {
        auto f = build_factor(a, b, ell);
        CHECK(verify_factor(f).ok());
        out.push_back(f.cycles.size());
    }
    return out;
}

}  // namespace

TEST_SUITE("factor") {

TEST_CASE("restriction and alternating matching") {
    auto d0 = scd_d0_paren(3);
    auto r = restrict_chains(d0, 1, 2);
    std::set<std::vector<std::string>> got, want;
    for (auto& c : r) {
        std::vector<std::string> ss;
        for (auto& v : c) ss.push_back(v.to_string());
        got.insert(ss);
    }
    for (auto& c : oracle::d0_by_brackets(3)) {
        std::vector<std::string> mid;
        for (auto& s : c)
            if (oracle::ones(s) == 1 || oracle::ones(s) == 2) mid.push_back(s);
        if (!mid.empty()) want.insert(mid);
    }
    CHECK(got == want);
    auto five = restrict_chains(scd_d0_paren(5), 1, 4);
    for (auto& p : five) CHECK((p.size() == 2 || p.size() == 4));
    CHECK(alternating_matching(five).size() == 15);
    Chain p{V("000"), V("100"), V("110"), V("111")};
    CHECK(alternating_matching({p}) == std::vector<Edge>{{V("000"), V("100")}, {V("110"), V("111")}});
    CHECK_THROWS(alternating_matching({{V("000"), V("100"), V("110")}}));
}

TEST_CASE("middle four levels of Q_5") {
    auto d0 = scd_d0_paren(5);
    auto f = build_factor(d0, complement_scd(d0), 2);
    auto c = factor_census(f);
    CHECK(c.cycle_count == 3);
    CHECK(c.lengths == std::vector<std::size_t>{4, 4, 22});
    std::size_t total = 0;
    for (auto l : c.lengths) total += l;
    CHECK(total == 30);
    for (auto& cyc : f.cycles) CHECK(cyc.front() == *std::min_element(cyc.begin(), cyc.end()));
}

TEST_CASE("single cycle in the middle two levels of Q_3") {
    auto d0 = scd_d0_paren(3);
    auto f = build_factor(d0, complement_scd(d0), 1);
    REQUIRE(f.cycles.size() == 1);
    CHECK(f.cycles[0].size() == 6);
}

TEST_CASE("full cube factor") {
    auto d0 = scd_d0_paren(7);
    auto f = build_factor(d0, complement_scd(d0), 4);
    std::size_t total = 0;
    for (auto& c : f.cycles) total += c.size();
    CHECK(total == 128);
}

TEST_CASE("cycle counts, D0 pair, small rows") {
    auto t = read_table("table2.txt");
    for (int n = 1; n <= 6; ++n) {
        auto d0 = scd_d0_paren(2 * n + 1);
        CHECK_MESSAGE(row(d0, complement_scd(d0), n) == t.at(n), "n=" << n);
    }
}

TEST_CASE("cycle counts, product pair, small rows") {
    auto t = read_table("table3.txt");
    for (int n = 1; n <= 6; ++n) CHECK_MESSAGE(row(iterated_d0_product(n), iterated_d0_product(n, true), n) == t.at(n), "n=" << n);
}

TEST_CASE("rejects bad input") {
    auto d0 = scd_d0_paren(5);
    CHECK_THROWS_AS(build_factor(d0, d0, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_factor(d0, complement_scd(d0), 0), std::invalid_argument);
    CHECK_THROWS_AS(build_factor(d0, complement_scd(d0), 4), std::invalid_argument);
    CHECK_THROWS_AS(build_factor(scd_d0_paren(4), complement_scd(scd_d0_paren(4)), 1), std::invalid_argument);
}

}
