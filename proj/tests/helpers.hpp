#pragma once

#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "symchain/scd.hpp"

inline symchain::Vertex V(const std::string& s) { return symchain::Vertex::from_string(s); }

inline std::set<std::vector<std::string>> chain_strings(const symchain::ChainDecomposition& d) {
    std::set<std::vector<std::string>> out;
    for (const auto& c : d.chains()) {
        std::vector<std::string> row;
        for (const auto& v : c) row.push_back(v.to_string());
        out.insert(row);
    }
    return out;
}

inline symchain::ChainDecomposition q1_scd() { return symchain::ChainDecomposition(1, {{V("0"), V("1")}}); }
