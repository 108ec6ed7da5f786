#include "symchain/trees.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace symchain {

namespace {

const Vertex kZero = Vertex::from_string("0");
const Vertex kOne = Vertex::from_string("1");

Vertex inner(const Vertex& t, const Component& c) { return slice(t, c.start + 1, c.length - 2); }

Vertex span(const Vertex& t, const std::vector<Component>& cs, std::size_t from, std::size_t to) {
    if (from >= to) return Vertex();
    int start = cs[from].start;
    int end = cs[to - 1].start + cs[to - 1].length;
    return slice(t, start, end - start);
}

std::vector<Component> tree_components(const Vertex& t) {
    auto cs = components(t);
    if (cs.size() < 2) throw std::invalid_argument("root degree below two: " + t.to_string());
    return cs;
}

}  // namespace

Vertex to_tree(const Vertex& x) { return concat(x, kZero); }

Vertex from_tree(const Vertex& t) {
    if (t.empty() || t.at(t.length())) throw std::invalid_argument("tree word must end with 0");
    return slice(t, 1, t.length() - 1);
}

bool is_tree_word(const Vertex& t) { return is_dyck_word(t) && components(t).size() >= 2; }

bool left_light(const Vertex& t) { return tree_components(t).front().length == 2; }
bool right_light(const Vertex& t) { return tree_components(t).back().length == 2; }

Vertex heavy_rotation(const Vertex& t) {
    auto cs = tree_components(t);
    if (cs.front().length == 2) throw std::invalid_argument("heavy rotation needs a left-heavy tree");
    Vertex u = inner(t, cs.front());
    Vertex v3 = inner(t, cs.back());
    if (cs.size() == 2) return concat({u, kOne, kOne, v3, kZero, kZero});
    Vertex v1 = span(t, cs, 1, cs.size() - 2);
    Vertex v2 = inner(t, cs[cs.size() - 2]);
    return concat({u, kOne, kOne, v1, kZero, v2, kOne, v3, kZero, kZero});
}

Vertex light_rotation(const Vertex& t) {
    auto cs = tree_components(t);
    if (cs.front().length != 2) throw std::invalid_argument("light rotation needs a left-light tree");
    Vertex v3 = inner(t, cs.back());
    if (cs.size() == 2) return concat({kOne, kZero, v3, kOne, kZero});
    Vertex v1 = span(t, cs, 1, cs.size() - 2);
    Vertex v2 = inner(t, cs[cs.size() - 2]);
    return concat({kOne, kOne, v1, kZero, v2, kZero, v3, kOne, kZero});
}

Vertex inverse_heavy_rotation(const Vertex& t) {
    auto cs = tree_components(t);
    if (cs.back().length == 2) throw std::invalid_argument("inverse heavy rotation needs a right-heavy tree");
    Vertex u = span(t, cs, 0, cs.size() - 1);
    Vertex z = inner(t, cs.back());
    auto zc = components(z);
    Vertex v3 = inner(z, zc.back());
    if (zc.size() == 1) return concat({kOne, u, kZero, kOne, v3, kZero});
    Vertex v1 = inner(z, zc.front());
    Vertex v2 = span(z, zc, 1, zc.size() - 1);
    return concat({kOne, u, kZero, v1, kOne, v2, kZero, kOne, v3, kZero});
}

Vertex inverse_light_rotation(const Vertex& t) {
    auto cs = tree_components(t);
    if (cs.back().length != 2) throw std::invalid_argument("inverse light rotation needs a right-light tree");
    Vertex v3 = span(t, cs, 1, cs.size() - 1);
    if (cs.front().length == 2) return concat({kOne, kZero, kOne, v3, kZero});
    Vertex q = inner(t, cs.front());
    auto qc = components(q);
    Vertex v1 = inner(q, qc.front());
    Vertex v2 = span(q, qc, 1, qc.size());
    return concat({kOne, kZero, v1, kOne, v2, kZero, kOne, v3, kZero});
}

Vertex rho(const Vertex& t) { return left_light(t) ? light_rotation(t) : heavy_rotation(t); }

Vertex rho_inverse(const Vertex& t) { return right_light(t) ? inverse_light_rotation(t) : inverse_heavy_rotation(t); }

bool can_pull(const Vertex& t, int j) {
    if (j < 1 || j + 2 > t.length()) return false;
    if (!(t.at(j) && t.at(j + 1) && !t.at(j + 2))) return false;
    return j < components(t).front().length;
}

Vertex pull(const Vertex& t, int j) {
    if (!can_pull(t, j)) throw std::invalid_argument("no pull at position " + std::to_string(j) + " of " + t.to_string());
    return t.flipped(j + 1).flipped(j + 2);
}

bool can_inverse_pull(const Vertex& t, int j) {
    if (j < 1 || j + 2 > t.length()) return false;
    if (!(t.at(j) && !t.at(j + 1) && t.at(j + 2))) return false;
    return can_pull(t.flipped(j + 1).flipped(j + 2), j);
}

Vertex inverse_pull(const Vertex& t, int j) {
    if (!can_inverse_pull(t, j))
        throw std::invalid_argument("no inverse pull at position " + std::to_string(j) + " of " + t.to_string());
    return t.flipped(j + 1).flipped(j + 2);
}

Vertex star_tree(int n) {
    if (n < 1) throw std::invalid_argument("star tree needs n >= 1");
    std::string s = "1";
    for (int i = 0; i < n - 1; ++i) s += "10";
    s += "010";
    return Vertex::from_string(s);
}

namespace {

// Plane tree with cyclic neighbour lists; leaves have one neighbour.
struct PlaneTree {
    std::vector<std::vector<int>> nbr;

    int add() {
        nbr.emplace_back();
        return static_cast<int>(nbr.size()) - 1;
    }
    void link(int parent, int child) {
        nbr[static_cast<std::size_t>(parent)].push_back(child);
        nbr[static_cast<std::size_t>(child)].push_back(parent);
    }
};

// Binary tree ell(x) or r(x) below `parent`; returns the new vertex.
int build_binary(PlaneTree& pt, int parent, const Vertex& x, bool left_form) {
    int v = pt.add();
    if (parent >= 0) pt.link(parent, v);
    if (x.empty()) return v;
    auto cs = components(x);
    Vertex a, b;
    if (left_form) {
        // x = (1,u,0,v): children ell(u), r(v)
        a = inner(x, cs.front());
        b = span(x, cs, 1, cs.size());
    } else {
        // x = (u',1,v',0): children ell(u'), r(v')
        a = span(x, cs, 0, cs.size() - 1);
        b = inner(x, cs.back());
    }
    build_binary(pt, v, a, true);
    build_binary(pt, v, b, false);
    return v;
}

std::string encode(const PlaneTree& pt, int v, int from) {
    const auto& nb = pt.nbr[static_cast<std::size_t>(v)];
    if (nb.size() == 1 && from >= 0) return "L";
    std::size_t start = 0;
    if (from >= 0) start = static_cast<std::size_t>(std::find(nb.begin(), nb.end(), from) - nb.begin()) + 1;
    std::string s = "(";
    std::size_t count = from >= 0 ? nb.size() - 1 : nb.size();
    for (std::size_t i = 0; i < count; ++i) s += encode(pt, nb[(start + i) % nb.size()], v);
    return s + ")";
}

}  // namespace

std::string trivalent_canonical(const Vertex& t) {
    auto cs = tree_components(t);
    Vertex u = inner(t, cs.front());
    Vertex v = span(t, cs, 1, cs.size() - 1);
    Vertex w = inner(t, cs.back());
    PlaneTree pt;
    int root = pt.add();
    build_binary(pt, root, u, true);
    build_binary(pt, root, v, false);
    build_binary(pt, root, w, false);
    std::string best;
    for (int r = 0; r < static_cast<int>(pt.nbr.size()); ++r) {
        auto nb = pt.nbr[static_cast<std::size_t>(r)];
        if (nb.size() != 3) continue;
        for (std::size_t k = 0; k < 3; ++k) {
            // Start the cyclic order at neighbour k by rotating the list.
            PlaneTree rotated = pt;
            std::rotate(rotated.nbr[static_cast<std::size_t>(r)].begin(),
                        rotated.nbr[static_cast<std::size_t>(r)].begin() + static_cast<long>(k),
                        rotated.nbr[static_cast<std::size_t>(r)].end());
            std::string s = encode(rotated, r, -1);
            if (best.empty() || s < best) best = s;
        }
    }
    return best;
}

}  // namespace symchain
