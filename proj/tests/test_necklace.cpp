#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "symchain/kinds.hpp"
#include "symchain/necklace.hpp"

using namespace symchain;

TEST_SUITE("necklace") {

TEST_CASE("rotation and representatives") {
    CHECK(rotate(V("10010"), 1).to_string() == "00101");
    CHECK(rotate(V("10010"), 5) == V("10010"));
    CHECK(necklace_rep(V("10100")).to_string() == "00101");
}

TEST_CASE("graph nodes and degrees") {
    for (int n : {5, 6, 7, 11}) {
        NecklaceGraph g(n);
        for (int k = 1; k <= n - 1; ++k) CHECK(g.nodes_at(k).size() == oracle::necklaces(n, k));
        const bool prime = n != 6;
        for (int v = 0; v < g.node_count(); ++v) {
            if (prime && g.level(v) < n - 1) CHECK(static_cast<int>(g.up_instances(v).size()) == n - g.level(v));
            if (prime && g.level(v) > 1) CHECK(static_cast<int>(g.down_instances(v).size()) == g.level(v));
            CHECK(g.node_of(g.rep(v)) == v);
        }
    }
    NecklaceGraph g(5);
    CHECK(g.multiplicity(g.node_of(V("00001")), g.node_of(V("00011"))) == 2);
    CHECK(g.multiplicity(g.node_of(V("00001")), g.node_of(V("00101"))) == 2);
}

TEST_CASE("searches in N_5 and N_7") {
    for (auto [n, k] : {std::pair{5, 3}, std::pair{7, 4}}) {
        NecklaceGraph g(n);
        auto r = search_necklace_scds(g, k, 1'000'000);
        REQUIRE(r.status == SearchStatus::Found);
        REQUIRE(r.scds.size() == static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < r.scds.size(); ++i) {
            CHECK(verify_necklace_scd(g, r.scds[i]).ok());
            for (std::size_t j = 0; j < i; ++j) CHECK(necklace_edge_disjoint(r.scds[i], r.scds[j]));
            CHECK(parse_necklace_scd_text(g, necklace_scd_to_text(g, r.scds[i])).chains.size() == r.scds[i].chains.size());
        }
        auto lifts = lift_family(g, r.scds);
        for (std::size_t i = 0; i < lifts.size(); ++i) {
            CHECK(verify_scd(lifts[i]).ok());
            CHECK(lifts[i].size() == oracle::binom(n, n / 2));
            for (std::size_t j = 0; j < i; ++j) CHECK(edge_disjoint(lifts[i], lifts[j]));
        }
        // rotating a lifted chain gives a chain of the same SCD, up to the
        // 0^n and 1^n extension carried by one rotation only
        auto core = [&](const Chain& c) {
            Chain out;
            for (auto& v : c)
                if (v.weight() != 0 && v.weight() != n) out.push_back(v);
            return out;
        };
        for (auto& d : lifts) {
            std::set<Chain> chains;
            for (auto& c : d.chains()) chains.insert(core(c));
            for (auto& c : d.chains()) {
                Chain r1;
                for (auto& v : core(c)) r1.push_back(rotate(v, 1));
                CHECK(chains.count(r1) == 1);
            }
        }
    }
}

TEST_CASE("search outcomes are distinguished") {
    NecklaceGraph g5(5), g7(7);
    CHECK(search_necklace_scds(g5, 4, 1'000'000).status == SearchStatus::Impossible);
    CHECK(search_necklace_scds(g7, 5, 1'000'000).status == SearchStatus::Impossible);
    NecklaceGraph g11(11);
    CHECK(search_necklace_scds(g11, 3, 5).status == SearchStatus::BudgetExceeded);
    CHECK_THROWS_AS(search_necklace_scds(NecklaceGraph(6), 2, 100), std::invalid_argument);
}

TEST_CASE("search is deterministic") {
    NecklaceGraph g(7);
    auto a = search_necklace_scds(g, 4, 1'000'000), b = search_necklace_scds(g, 4, 1'000'000);
    for (std::size_t i = 0; i < a.scds.size(); ++i) CHECK(necklace_scd_to_text(g, a.scds[i]) == necklace_scd_to_text(g, b.scds[i]));
}

TEST_CASE("stored fixtures match the search") {
    for (auto [n, k] : {std::pair{5, 3}, std::pair{7, 4}}) {
        NecklaceGraph g(n);
        auto r = search_necklace_scds(g, k, 1'000'000);
        auto lifts = lift_family(g, r.scds);
        for (int i = 1; i <= k; ++i) {
            std::string stem = "n" + std::to_string(n) + "_k" + std::to_string(k) + "_" + std::to_string(i) + ".txt";
            std::ifstream nf(std::string(SYMCHAIN_DATA) + "/necklace/necklace_" + stem);
            std::ifstream qf(std::string(SYMCHAIN_DATA) + "/necklace/lift_" + stem);
            REQUIRE(nf.good());
            REQUIRE(qf.good());
            std::stringstream ns, qs;
            ns << nf.rdbuf();
            qs << qf.rdbuf();
            CHECK(ns.str() == necklace_scd_to_text(g, r.scds[static_cast<std::size_t>(i - 1)]));
            CHECK(parse_scd_text(qs.str()) == lifts[static_cast<std::size_t>(i - 1)]);
        }
    }
}

TEST_CASE("kind registry") {
    auto fam = necklace_family(5);
    CHECK(fam.size() == 3);
    CHECK(scd_by_kind("necklace:2", 5) == fam[1]);
    CHECK_THROWS_AS(scd_by_kind("necklace:4", 5), std::invalid_argument);
    CHECK_THROWS_AS(scd_by_kind("necklace:1", 9), std::invalid_argument);
    CHECK(scd_by_kind("d0c", 4) == complement_scd(scd_d0_paren(4)));
    CHECK_THROWS_AS(scd_by_kind("d1", 5), std::invalid_argument);
    CHECK_THROWS_AS(scd_by_kind("lex:0,0", 3), std::invalid_argument);
    CHECK_THROWS_AS(scd_by_kind("lex:0,x,0", 3), std::invalid_argument);
    CHECK_THROWS_AS(scd_by_kind("nope", 3), std::invalid_argument);
    CHECK_THROWS_AS(necklace_family(11, 10), SearchBudgetExceeded);
}

}
