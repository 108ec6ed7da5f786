#pragma once

#include <string>
#include <vector>

#include "symchain/vertex.hpp"

namespace symchain {

// Rooted trees of T_{n+1}: Dyck words of length 2n+2 whose root has degree
// at least two. For x in level n+1 of Q_{2n+1} touching zero, (x,0) is such
// a tree.
Vertex to_tree(const Vertex& x);    // appends 0
Vertex from_tree(const Vertex& t);  // drops the final 0
bool is_tree_word(const Vertex& t);

bool left_light(const Vertex& t);
bool right_light(const Vertex& t);

Vertex heavy_rotation(const Vertex& t);
Vertex light_rotation(const Vertex& t);
Vertex inverse_heavy_rotation(const Vertex& t);
Vertex inverse_light_rotation(const Vertex& t);
Vertex rho(const Vertex& t);
Vertex rho_inverse(const Vertex& t);

// The pull at position j: t[j..j+2] = 110 inside the first component, and
// the result swaps positions j+1 and j+2. Returns false if not applicable.
bool can_pull(const Vertex& t, int j);
Vertex pull(const Vertex& t, int j);
// Inverse pull at position j: t[j..j+2] = 101 and the swapped word admits a
// pull at j.
bool can_inverse_pull(const Vertex& t, int j);
Vertex inverse_pull(const Vertex& t, int j);

// s = (1,(1,0)^{n-1},0,1,0) in T_{n+1}: right-light, root degree two, star
// on the left.
Vertex star_tree(int n);

// Canonical string of the plane trivalent tree tau(t). Constant exactly on
// rho-orbits.
std::string trivalent_canonical(const Vertex& t);

}  // namespace symchain
