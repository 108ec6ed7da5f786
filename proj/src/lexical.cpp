#include "symchain/lexical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "symchain/band.hpp"

namespace symchain {

namespace {

struct Step {
    int height;
    int pos;
};

void validate(const MatchingId& id) {
    if (id.n < 1 || id.n > Vertex::max_length) throw std::invalid_argument("n out of range");
    if (id.k < 0 || id.k > id.n - 1) throw std::invalid_argument("k out of range");
    if (id.i < 0 || id.i > lexical_max_index(id.n, id.k))
        throw std::invalid_argument("matching index out of range: i=" + std::to_string(id.i));
}

void validate_vertex(const MatchingId& id, const Vertex& v, int level) {
    if (v.length() != id.n) throw std::invalid_argument("vertex length differs from n");
    if (v.weight() != level)
        throw std::invalid_argument("vertex " + v.to_string() + " is not on level " + std::to_string(level));
}

}  // namespace

int lexical_max_index(int n, int k) { return std::max(k, n - k - 1); }

std::optional<Vertex> lex_up(const MatchingId& id, const Vertex& x) {
    validate(id);
    validate_vertex(id, x, id.k);
    Step steps[2 * Vertex::max_length + 2];
    int m = 0;
    int h = 0;
    for (int p = 1; p <= id.n; ++p) {
        if (x.at(p)) {
            ++h;
        } else {
            steps[m++] = {h, p};
            --h;
        }
    }
    // Padding with down-steps until the path ends at -1.
    for (int p = id.n + 1; h >= 0; ++p, --h) steps[m++] = {h, p};
    std::sort(steps, steps + m, [](const Step& a, const Step& b) {
        return a.height != b.height ? a.height > b.height : a.pos > b.pos;
    });
    const Step& s = steps[id.i];
    if (s.pos > id.n) return std::nullopt;
    return x.flipped(s.pos);
}

std::optional<Vertex> lex_down(const MatchingId& id, const Vertex& y) {
    validate(id);
    validate_vertex(id, y, id.k + 1);
    Step steps[2 * Vertex::max_length + 2];
    int m = 0;
    int h = 0;
    for (int p = 1; p <= id.n; ++p) {
        if (y.at(p)) {
            ++h;
            steps[m++] = {h, p};
        } else {
            --h;
        }
    }
    // Padding with up-steps until the path ends at +1.
    for (int p = id.n + 1; h < 1; ++p) {
        ++h;
        steps[m++] = {h, p};
    }
    std::sort(steps, steps + m, [](const Step& a, const Step& b) {
        return a.height != b.height ? a.height > b.height : a.pos < b.pos;
    });
    const Step& s = steps[id.i];
    if (s.pos > id.n) return std::nullopt;
    return y.flipped(s.pos);
}

std::vector<Edge> lex_matching(const MatchingId& id) {
    validate(id);
    std::vector<Edge> edges;
    if (binomial(id.n, id.k) <= binomial(id.n, id.k + 1)) {
        for (const auto& x : level_vertices(id.n, id.k)) {
            auto y = lex_up(id, x);
            if (!y) throw std::logic_error("lexical matching does not saturate level " + std::to_string(id.k));
            edges.push_back({x, *y});
        }
    } else {
        for (const auto& y : level_vertices(id.n, id.k + 1)) {
            auto x = lex_down(id, y);
            if (!x) throw std::logic_error("lexical matching does not saturate level " + std::to_string(id.k + 1));
            edges.push_back({*x, y});
        }
        std::sort(edges.begin(), edges.end());
    }
    return edges;
}

}  // namespace symchain
