#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "symchain/scd.hpp"

namespace symchain {

// Chains clipped to levels lo..hi; chains missing the band are dropped.
std::vector<Chain> restrict_chains(const ChainDecomposition& d, int lo, int hi);

// First, third, fifth, ... edge of every path.
std::vector<Edge> alternating_matching(const std::vector<Chain>& paths);

/// Cycle factor on levels lo..hi of Q_{2n+1}.
struct CycleFactor {
    int dimension = 0;
    int lo = 0;
    int hi = 0;
    std::vector<std::vector<Vertex>> cycles;
};

// Union of the alternating matchings of two edge-disjoint SCDs of Q_{2n+1}
// restricted to the 2*ell middle levels n+1-ell..n+ell (1 <= ell <= n+1).
CycleFactor build_factor(const ChainDecomposition& d1, const ChainDecomposition& d2, int ell);

struct Census {
    std::size_t cycle_count = 0;
    std::vector<std::size_t> lengths;  // ascending
    std::map<std::size_t, std::size_t> histogram;
};

Census factor_census(const CycleFactor& f);

// Vertex cover plus 2-regularity inside the band, all edges flip one bit.
VerificationReport verify_factor(const CycleFactor& f);

}  // namespace symchain
