#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace symchain {

/// Bitstring of fixed length, read as a vertex of Q_n or as a lattice path.
/// Positions are 1-based with position 1 leftmost. As a path, 1 is an
/// up-step and 0 a down-step.
class Vertex {
public:
    static constexpr int max_length = 127;

    Vertex() = default;
    explicit Vertex(int length);
    static Vertex from_string(std::string_view bits);
    // Bit i of `word` becomes position i+1. Requires length <= 64.
    static Vertex from_word(int length, std::uint64_t word);
    static Vertex ones(int length);

    int length() const { return length_; }
    bool empty() const { return length_ == 0; }
    bool at(int pos) const;
    void set(int pos, bool value);
    Vertex flipped(int pos) const;
    int weight() const;
    std::string to_string() const;

    // Raw encoding for lengths <= 64 (bit i is position i+1).
    std::uint64_t word() const { return words_[0]; }
    const std::array<std::uint64_t, 2>& words() const { return words_; }

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b);

private:
    std::array<std::uint64_t, 2> words_{};
    std::uint8_t length_ = 0;
};

int weight(const Vertex& v);
Vertex complement(const Vertex& v);
Vertex reverse(const Vertex& v);
Vertex comp_rev(const Vertex& v);
Vertex concat(const Vertex& a, const Vertex& b);
Vertex concat(std::initializer_list<Vertex> parts);
// Substring of `len` symbols starting at 1-based position `pos`.
Vertex slice(const Vertex& v, int pos, int len);
// Heights of the lattice path: h[0] = 0, h[p] = height after step p.
std::vector<int> heights(const Vertex& v);
// Position of the single differing bit, or 0 if the strings do not differ in
// exactly one position.
int flip_position(const Vertex& a, const Vertex& b);

enum class DyckClass { StrictlyPositive, TouchesZero, BelowOnce, Other };

std::string to_string(DyckClass c);
DyckClass classify_dyck(const Vertex& v);
// Balanced, never below zero.
bool is_dyck_word(const Vertex& v);

struct CanonicalDecomposition {
    Vertex u;
    Vertex w;
};
// x = (1, u, 0, w) split at the first return to height 0.
CanonicalDecomposition canonical_decompose(const Vertex& x);

// Start positions and lengths of the top-level components of a Dyck word.
struct Component {
    int start;
    int length;
};
std::vector<Component> components(const Vertex& dyck);

/// Ordered rooted tree stored as child lists; vertex 0 is the root.
class RootedTree {
public:
    RootedTree() : children_(1) {}
    int root() const { return 0; }
    int vertex_count() const { return static_cast<int>(children_.size()); }
    int edge_count() const { return vertex_count() - 1; }
    const std::vector<int>& children(int v) const { return children_.at(static_cast<std::size_t>(v)); }
    int add_child(int parent);

private:
    std::vector<std::vector<int>> children_;
};

RootedTree dyck_to_tree(const Vertex& dyck);
Vertex tree_to_dyck(const RootedTree& t);

// All vertices of level k in Q_n, sorted lexicographically. Requires n <= 64.
std::vector<Vertex> level_vertices(int n, int k);

}  // namespace symchain

template <>
struct std::hash<symchain::Vertex> {
    std::size_t operator()(const symchain::Vertex& v) const noexcept {
        std::uint64_t h = v.words()[0] * 0x9E3779B97F4A7C15ULL;
        h ^= (v.words()[1] + static_cast<std::uint64_t>(v.length())) * 0xC2B2AE3D27D4EB4FULL;
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};
