#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "symchain/band.hpp"
#include "symchain/lexical.hpp"
#include "symchain/scd.hpp"
#include "symchain/trees.hpp"

namespace symchain {

/// Paths formed by M^n and M^{n+1} between levels n+1 and n+2 of Q_{2n+1}.
struct PathSystem {
    int n = 0;
    std::vector<Chain> paths;  // sorted by first vertex
    std::vector<Vertex> isolated;
    std::unordered_map<Vertex, std::size_t> by_first;

    const Chain& path_from(const Vertex& x) const;
};

PathSystem build_paths(int n);

// Level n+1 vertices touching zero (F), dipping below once (L), strictly
// positive (I), plus the subset L' used for E^{n-2}.
struct LevelSets {
    std::vector<Vertex> first, last, isolated, last_prime;
};
LevelSets level_sets(const PathSystem& ps);
bool in_last_prime(const Vertex& x);

// E-edges between levels n and n+1.
struct EEdges {
    std::vector<Edge> top;         // from M^n
    std::vector<Edge> minus_one;   // from M^{n-1}
    std::vector<Edge> minus_two;   // from M^{n-2}
};
EEdges build_e_edges(int n, const LevelSets& sets);

/// The cycle factor P ∪ f(P) ∪ E on levels n-1..n+2 of Q_{2n+1}.
struct MiddleFourFactor {
    int n = 0;
    std::unique_ptr<BandIndex> band;
    std::vector<std::array<std::uint32_t, 2>> adjacency;
    std::vector<std::vector<Vertex>> cycles;
};

// Throws if some vertex does not have degree exactly two.
MiddleFourFactor build_middle4_factor(int n, const PathSystem& ps, bool extract = true);
MiddleFourFactor build_middle4_factor(int n);

struct NextFirst {
    Vertex next;
    bool visited_isolated = false;
};
// Next vertex of F met after x when following the cycle of x along P(x).
NextFirst next_first_vertex(const MiddleFourFactor& f, const Vertex& x);

/// Orbits of rho on T_{n+1}, indexed by trees sorted lexicographically.
struct RhoOrbits {
    std::vector<Vertex> trees;
    std::vector<int> orbit_of;
    int count = 0;
    int orbit(const Vertex& t) const;
};
RhoOrbits rho_orbits(int n);

struct FlippablePair {
    Vertex x;
    Vertex y;
    int position = 0;  // j with x[j..j+2] = 110
    int depth = 0;     // d
    friend bool operator==(const FlippablePair&, const FlippablePair&) = default;
};
std::vector<FlippablePair> flippable_pairs(int n);
// Pairs (x,y) starting at x; x must lie in F.
std::vector<FlippablePair> flippable_pairs_of(const Vertex& x);

struct SixCycle {
    std::string pattern;               // over {0,1,*}
    std::array<Vertex, 6> vertices{};  // cyclic order
};
std::string six_cycle_pattern(const FlippablePair& p);
SixCycle six_cycle_from_pattern(const std::string& pattern);
// Validates that the cycle meets P(x) in two non-incident edges and P(y) in
// one edge, and that the swap reconnects the endpoints; throws otherwise.
SixCycle six_cycle(const PathSystem& ps, const FlippablePair& p);

struct AuxEdge {
    int a;
    int b;
    FlippablePair pair;
};
struct AuxGraph {
    int node_count = 0;
    std::vector<AuxEdge> edges;
    bool connected() const;
};
AuxGraph aux_graph(const RhoOrbits& orbits, const std::vector<FlippablePair>& pairs);
// BFS spanning tree from the orbit of the star tree, scanning edges in
// order; returns indices into g.edges.
std::vector<std::size_t> spanning_tree(const AuxGraph& g, int root);

enum class MoveKind { HeavyRotation, LightRotation, InverseHeavyRotation, InverseLightRotation, Pull, InversePull };
std::string to_string(MoveKind k);
struct Move {
    MoveKind kind;
    int position = 0;  // for pulls
    Vertex before;
    Vertex after;
};
// Sequence of tree moves from t to star_tree(n); replayable.
std::vector<Move> normalize_to_star(const Vertex& t);
bool replay_moves(const Vertex& t, const std::vector<Move>& moves);

struct HamiltonResult {
    std::vector<Vertex> cycle;
    std::size_t six_cycles_used = 0;
    std::size_t factor_cycles = 0;
};
HamiltonResult hamilton_middle4(int n);
// The cycle closes (including the wraparound), visits every vertex of levels
// n-1..n+2 once and every step flips one bit.
VerificationReport verify_middle4_cycle(int n, const std::vector<Vertex>& cycle);

// Plane trivalent trees with n internal vertices, counted as triangulations
// of the (n+2)-gon up to rotation.
std::uint64_t trivalent_tree_count(int n);

// The structural facts behind the construction, checked exhaustively.
VerificationReport middle4_checks(int n);

}  // namespace symchain
