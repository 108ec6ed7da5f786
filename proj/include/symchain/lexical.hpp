#pragma once

#include <optional>
#include <vector>

#include "symchain/vertex.hpp"

namespace symchain {

/// Identifies the lexical matching M^i_{n,k} between levels k and k+1 of Q_n.
struct MatchingId {
    int n;
    int k;
    int i;
};

struct Edge {
    Vertex lower;
    Vertex upper;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Largest admissible index l = max(k, n-k-1).
int lexical_max_index(int n, int k);

// Partner of x (level k) in M^i_{n,k}, or nullopt if x is unmatched.
std::optional<Vertex> lex_up(const MatchingId& id, const Vertex& x);
// Partner of y (level k+1) in M^i_{n,k}, or nullopt if y is unmatched.
std::optional<Vertex> lex_down(const MatchingId& id, const Vertex& y);

// All edges of M^i_{n,k}, sorted by lower endpoint.
std::vector<Edge> lex_matching(const MatchingId& id);

}  // namespace symchain
