#include "symchain/scd.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "symchain/band.hpp"

namespace symchain {

ChainDecomposition::ChainDecomposition(int dimension, std::vector<Chain> chains)
    : dimension_(dimension), chains_(std::move(chains)) {
    for (auto& c : chains_)
        if (c.size() > 1 && c.front().weight() > c.back().weight()) std::reverse(c.begin(), c.end());
    std::sort(chains_.begin(), chains_.end(), [](const Chain& a, const Chain& b) {
        if (a.empty() || b.empty()) return a.size() < b.size();
        return a.front() < b.front();
    });
}

bool VerificationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void VerificationReport::add(std::string name, bool passed, std::string witness) {
    checks.push_back({std::move(name), passed, std::move(witness)});
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.passed ? "ok   " : "FAIL ") << c.name;
        if (!c.passed && !c.witness.empty()) os << ": " << c.witness;
        os << '\n';
    }
    return os.str();
}

namespace {

// Set of vertices of Q_n; dense for small n.
class VertexSet {
public:
    explicit VertexSet(int n) : dense_(n <= 28) {
        if (dense_) bits_.assign(std::size_t{1} << n, 0);
    }
    // Returns false if already present.
    bool insert(const Vertex& v) {
        if (dense_) {
            auto& b = bits_[v.word()];
            if (b) return false;
            b = 1;
            return true;
        }
        return sparse_.insert(v).second;
    }

private:
    bool dense_;
    std::vector<char> bits_;
    std::unordered_set<Vertex> sparse_;
};

template <class F>
void for_each_vertex(int n, F&& f) {
    if (n > 30) throw std::invalid_argument("cube too large to enumerate");
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) f(Vertex::from_word(n, w));
}

Chain chain_from_flips(const Vertex& x, const std::vector<int>& up, const std::vector<int>& down) {
    Chain below;
    Vertex cur = x;
    for (int p : down) {
        cur = cur.flipped(p);
        below.push_back(cur);
    }
    Chain c(below.rbegin(), below.rend());
    c.push_back(x);
    cur = x;
    for (int p : up) {
        cur = cur.flipped(p);
        c.push_back(cur);
    }
    return c;
}

void require_middle(const Vertex& x) {
    if (x.length() % 2 != 0 || 2 * x.weight() != x.length())
        throw std::invalid_argument("marker rules need a middle vertex of even length: " + x.to_string());
}

std::vector<int> mirror(const std::vector<int>& flips, int n) {
    std::vector<int> out;
    for (int p : flips) out.push_back(n + 1 - p);
    return out;
}

// Rightmost down-step (position) starting at height h, optionally only left
// of position `limit`. 0 if none.
int rightmost_down(const Vertex& x, const std::vector<int>& H, int h, int limit) {
    for (int p = std::min(limit, x.length()); p >= 1; --p)
        if (!x.at(p) && H[static_cast<std::size_t>(p - 1)] == h) return p;
    return 0;
}

ChainDecomposition from_middle_chains(int n, Chain (*make)(const Vertex&)) {
    if (n % 2 != 0 || n < 0) throw std::invalid_argument("marker constructions need even n");
    std::vector<Chain> chains;
    for (const auto& x : level_vertices(n, n / 2)) chains.push_back(make(x));
    return ChainDecomposition(n, std::move(chains));
}

}  // namespace

VerificationReport verify_scd(const ChainDecomposition& d) {
    VerificationReport rep;
    const int n = d.dimension();
    VertexSet seen(n);
    std::uint64_t total = 0;
    std::string part_w, path_w, sym_w;
    for (const auto& c : d.chains()) {
        if (c.empty()) {
            if (path_w.empty()) path_w = "empty chain";
            continue;
        }
        for (std::size_t i = 0; i < c.size(); ++i) {
            const Vertex& v = c[i];
            ++total;
            if (v.length() != n) {
                if (part_w.empty()) part_w = "vertex " + v.to_string() + " has wrong length";
                continue;
            }
            if (!seen.insert(v) && part_w.empty()) part_w = "vertex " + v.to_string() + " appears twice";
            if (i > 0 && path_w.empty()) {
                const Vertex& u = c[i - 1];
                if (flip_position(u, v) == 0 || v.weight() != u.weight() + 1)
                    path_w = "step " + u.to_string() + " -> " + v.to_string();
            }
        }
        int lo = c.front().weight(), hi = c.back().weight();
        if (lo + hi != n && sym_w.empty())
            sym_w = "chain " + c.front().to_string() + ".." + c.back().to_string() + " spans levels " +
                    std::to_string(lo) + ".." + std::to_string(hi);
    }
    if (part_w.empty() && n <= 62 && total != (std::uint64_t{1} << n))
        part_w = "covers " + std::to_string(total) + " vertices";
    rep.add("partition", part_w.empty(), part_w);
    rep.add("paths", path_w.empty(), path_w);
    rep.add("symmetric", sym_w.empty(), sym_w);
    std::uint64_t want = binomial(n, n / 2);
    rep.add("count", d.size() == want,
            d.size() == want ? "" : std::to_string(d.size()) + " chains, want " + std::to_string(want));
    return rep;
}

std::vector<std::pair<Vertex, int>> chain_edges(const ChainDecomposition& d) {
    std::vector<std::pair<Vertex, int>> out;
    for (const auto& c : d.chains())
        for (std::size_t i = 1; i < c.size(); ++i) out.emplace_back(c[i - 1], flip_position(c[i - 1], c[i]));
    std::sort(out.begin(), out.end());
    return out;
}

bool edge_disjoint(const ChainDecomposition& a, const ChainDecomposition& b) {
    if (a.dimension() != b.dimension()) throw std::invalid_argument("dimensions differ");
    auto ea = chain_edges(a);
    auto eb = chain_edges(b);
    std::size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i] == eb[j]) return false;
        if (ea[i] < eb[j])
            ++i;
        else
            ++j;
    }
    return true;
}

std::optional<Vertex> d0_up(const Vertex& x) {
    // 0s still open at the end are unmatched.
    std::vector<int> stack;
    for (int p = 1; p <= x.length(); ++p) {
        if (!x.at(p))
            stack.push_back(p);
        else if (!stack.empty())
            stack.pop_back();
    }
    if (stack.empty()) return std::nullopt;
    return x.flipped(stack.front());
}

std::optional<Vertex> d0_down(const Vertex& x) {
    int open = 0;
    int last_unmatched_one = 0;
    for (int p = 1; p <= x.length(); ++p) {
        if (!x.at(p))
            ++open;
        else if (open > 0)
            --open;
        else
            last_unmatched_one = p;
    }
    if (last_unmatched_one == 0) return std::nullopt;
    return x.flipped(last_unmatched_one);
}

ChainDecomposition scd_d0_paren(int n) {
    std::vector<Chain> chains;
    for_each_vertex(n, [&](const Vertex& v) {
        if (d0_down(v)) return;
        Chain c{v};
        while (auto u = d0_up(c.back())) c.push_back(*u);
        chains.push_back(std::move(c));
    });
    return ChainDecomposition(n, std::move(chains));
}

std::vector<int> d0_marker_up_flips(const Vertex& x) {
    require_middle(x);
    auto H = heights(x);
    const int n = x.length();
    int h = *std::max_element(H.begin(), H.end());
    int t = 0;
    for (int p = 0; p <= n; ++p)
        if (H[static_cast<std::size_t>(p)] == h) t = p;
    std::vector<int> flips;
    while (h >= 1) {
        flips.push_back(t + 1);
        int p = rightmost_down(x, H, h - 1, n);
        if (p == 0) break;
        t = p - 1;
        --h;
    }
    return flips;
}

std::vector<int> d0_marker_down_flips(const Vertex& x) {
    return mirror(d0_marker_up_flips(comp_rev(x)), x.length());
}

std::vector<int> d1_marker_up_flips(const Vertex& x) {
    require_middle(x);
    auto H = heights(x);
    const int n = x.length();
    int h = *std::max_element(H.begin(), H.end());
    int t = 0;
    for (int p = 0; p <= n; ++p)
        if (H[static_cast<std::size_t>(p)] == h) t = p;
    std::vector<int> flips;
    if (int p = rightmost_down(x, H, h, t); p != 0) flips.push_back(p);
    while (h >= 2) {
        int a = rightmost_down(x, H, h - 1, n);
        flips.push_back(a);
        std::vector<int> s;
        for (int p = a + 1; p <= n; ++p)
            if (!x.at(p) && H[static_cast<std::size_t>(p - 1)] == h - 2) s.push_back(p);
        s.push_back(t + 1);
        // The path ends at height 0; its padding step counts as a candidate.
        if (h == 2) s.push_back(n + 1);
        std::sort(s.begin(), s.end());
        flips.push_back(s[s.size() - 2]);
        int m = rightmost_down(x, H, h - 2, n);
        if (m == 0) break;
        t = m - 1;
        h -= 2;
    }
    return flips;
}

std::vector<int> d1_marker_down_flips(const Vertex& x) {
    return mirror(d1_marker_up_flips(comp_rev(x)), x.length());
}

Chain d0_marker_chain(const Vertex& x) {
    return chain_from_flips(x, d0_marker_up_flips(x), d0_marker_down_flips(x));
}

Chain d1_marker_chain(const Vertex& x) {
    return chain_from_flips(x, d1_marker_up_flips(x), d1_marker_down_flips(x));
}

ChainDecomposition scd_d0_marker(int n) { return from_middle_chains(n, &d0_marker_chain); }
ChainDecomposition scd_d1(int n) { return from_middle_chains(n, &d1_marker_chain); }

ChainDecomposition scd_from_lexical(int n, const std::vector<int>& i_seq) {
    if (static_cast<int>(i_seq.size()) != n) throw std::invalid_argument("index sequence must have n entries");
    for (int k = 0; k < n; ++k)
        if (i_seq[static_cast<std::size_t>(k)] < 0 || i_seq[static_cast<std::size_t>(k)] > lexical_max_index(n, k))
            throw std::invalid_argument("index out of range at level " + std::to_string(k));
    std::vector<Chain> chains;
    for_each_vertex(n, [&](const Vertex& v) {
        int w = v.weight();
        if (w > 0 && lex_down({n, w - 1, i_seq[static_cast<std::size_t>(w - 1)]}, v)) return;
        Chain c{v};
        while (c.back().weight() < n) {
            int k = c.back().weight();
            auto u = lex_up({n, k, i_seq[static_cast<std::size_t>(k)]}, c.back());
            if (!u) break;
            c.push_back(*u);
        }
        chains.push_back(std::move(c));
    });
    return ChainDecomposition(n, std::move(chains));
}

ChainDecomposition complement_scd(const ChainDecomposition& d) {
    std::vector<Chain> chains;
    chains.reserve(d.size());
    for (const auto& c : d.chains()) {
        Chain m;
        m.reserve(c.size());
        for (const auto& v : c) m.push_back(complement(v));
        chains.push_back(std::move(m));
    }
    return ChainDecomposition(d.dimension(), std::move(chains));
}

std::string to_text(const ChainDecomposition& d) {
    std::string out;
    for (const auto& c : d.chains()) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out.push_back(' ');
            out += c[i].to_string();
        }
        out.push_back('\n');
    }
    return out;
}

ChainDecomposition parse_scd_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Chain> chains;
    int n = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        Chain c;
        while (ls >> tok) {
            c.push_back(Vertex::from_string(tok));
            if (n < 0) n = c.back().length();
            if (c.back().length() != n) throw std::invalid_argument("mixed vertex lengths in SCD text");
        }
        if (!c.empty()) chains.push_back(std::move(c));
    }
    if (n < 0) throw std::invalid_argument("empty SCD text");
    return ChainDecomposition(n, std::move(chains));
}

}  // namespace symchain
