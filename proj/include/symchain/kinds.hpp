#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "symchain/scd.hpp"

namespace symchain {

constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

struct SearchBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Builds an SCD of Q_n by name:
//   d0, d0c, d1, d1c
//   lex:i0,i1,...      union of lexical matchings (n entries)
//   product:d0         D0(3) x D0(2) x ... (n odd), product:d0c its partner
//   product:four.<i>   member i of the four disjoint SCDs of Q_n, n odd >= 13
//   necklace:<i>       member i of the lifted necklace family, n prime
// Throws std::invalid_argument with a one-line reason on bad input.
ChainDecomposition scd_by_kind(const std::string& kind, int n, std::uint64_t budget = kDefaultSearchBudget);

// Largest family of pairwise edge-disjoint SCDs of N_n found by search,
// lifted to Q_n.
std::vector<ChainDecomposition> necklace_family(int n, std::uint64_t budget = kDefaultSearchBudget);

// Four pairwise edge-disjoint SCDs of Q_n for odd n >= 13: the even family
// {D0, D0c, D1, D1c} of Q_{n-7} times the lifted N_7 family.
std::vector<ChainDecomposition> four_scd_family(int n, std::uint64_t budget = kDefaultSearchBudget);

}  // namespace symchain
