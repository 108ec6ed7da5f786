#include "symchain/middle4.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>
#include <stdexcept>
#include <unordered_set>

namespace symchain {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

void require_n(int n) {
    if (n < 1 || 2 * n + 1 > 62) throw std::invalid_argument("n out of range for the middle-four factor");
}

bool in_first_set(const Vertex& x, int n) { return x.weight() == n + 1 && classify_dyck(x) == DyckClass::TouchesZero; }

bool is_isolated(const Vertex& x, int n) {
    return x.weight() == n + 1 && classify_dyck(x) == DyckClass::StrictlyPositive;
}

std::uint64_t edge_key(std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

const Chain& PathSystem::path_from(const Vertex& x) const {
    auto it = by_first.find(x);
    if (it == by_first.end()) throw std::invalid_argument("no path starts at " + x.to_string());
    return paths[it->second];
}

PathSystem build_paths(int n) {
    require_n(n);
    const int N = 2 * n + 1;
    const MatchingId lo{N, n + 1, n}, hi{N, n + 1, n + 1};
    PathSystem ps;
    ps.n = n;
    const std::size_t bound = static_cast<std::size_t>(binomial(N, n + 1) + binomial(N, n + 2));
    for (const auto& x : level_vertices(N, n + 1)) {
        auto up_lo = lex_up(lo, x);
        auto up_hi = lex_up(hi, x);
        if (!up_lo && !up_hi) {
            ps.isolated.push_back(x);
            continue;
        }
        if (!up_lo || up_hi) continue;
        Chain p{x};
        std::optional<Vertex> up = up_lo;
        while (up) {
            p.push_back(*up);
            auto down = lex_down(hi, *up);
            if (!down) throw std::logic_error("level n+2 vertex not covered: " + up->to_string());
            p.push_back(*down);
            if (p.size() > bound) throw std::logic_error("path does not terminate from " + x.to_string());
            up = lex_up(lo, *down);
        }
        ps.by_first.emplace(x, ps.paths.size());
        ps.paths.push_back(std::move(p));
    }
    return ps;
}

bool in_last_prime(const Vertex& x) {
    if (classify_dyck(x) != DyckClass::BelowOnce) return false;
    int h = 0;
    for (int p = 1; p <= x.length(); ++p) {
        h += x.at(p) ? 1 : -1;
        if (h < 0) {
            if (p == x.length()) return false;
            Vertex v = slice(x, p + 2, x.length() - p - 1);
            return classify_dyck(v) == DyckClass::TouchesZero;
        }
    }
    return false;
}

LevelSets level_sets(const PathSystem& ps) {
    LevelSets s;
    for (const auto& p : ps.paths) {
        s.first.push_back(p.front());
        s.last.push_back(p.back());
    }
    std::sort(s.last.begin(), s.last.end());
    s.isolated = ps.isolated;
    for (const auto& x : s.last)
        if (in_last_prime(x)) s.last_prime.push_back(x);
    return s;
}

EEdges build_e_edges(int n, const LevelSets& sets) {
    const int N = 2 * n + 1;
    EEdges e;
    auto down = [&](int i, const Vertex& y) {
        auto x = lex_down({N, n, i}, y);
        if (!x) throw std::logic_error("E edge missing at " + y.to_string());
        return Edge{*x, y};
    };
    std::unordered_set<Vertex> prime(sets.last_prime.begin(), sets.last_prime.end());
    for (const auto& y : sets.first) e.top.push_back(down(n, y));
    for (const auto& y : sets.last)
        if (!prime.count(y)) e.top.push_back(down(n, y));
    for (const auto& y : sets.isolated) e.top.push_back(down(n, y));
    for (const auto& y : sets.isolated) e.minus_one.push_back(down(n - 1, y));
    if (!sets.last_prime.empty() && n < 2) throw std::logic_error("L' nonempty for n < 2");
    for (const auto& y : sets.last_prime) e.minus_two.push_back(down(n - 2, y));
    return e;
}

MiddleFourFactor build_middle4_factor(int n, const PathSystem& ps, bool extract) {
    require_n(n);
    const int N = 2 * n + 1;
    MiddleFourFactor f;
    f.n = n;
    f.band = std::make_unique<BandIndex>(N, n - 1, n + 2);
    f.adjacency.assign(f.band->size(), {kNone, kNone});
    auto add = [&](const Vertex& a, const Vertex& b) {
        auto ra = f.band->rank(a), rb = f.band->rank(b);
        for (auto [u, v] : {std::pair{ra, rb}, std::pair{rb, ra}}) {
            auto& slot = f.adjacency[u];
            if (slot[0] == kNone)
                slot[0] = v;
            else if (slot[1] == kNone)
                slot[1] = v;
            else
                throw std::logic_error("vertex of degree > 2: " + f.band->vertex(u).to_string());
        }
    };
    for (const auto& p : ps.paths)
        for (std::size_t i = 1; i < p.size(); ++i) {
            add(p[i - 1], p[i]);
            add(comp_rev(p[i - 1]), comp_rev(p[i]));
        }
    auto e = build_e_edges(n, level_sets(ps));
    for (const auto* part : {&e.top, &e.minus_one, &e.minus_two})
        for (const auto& edge : *part) add(edge.lower, edge.upper);
    for (std::uint32_t r = 0; r < f.band->size(); ++r)
        if (f.adjacency[r][1] == kNone) throw std::logic_error("vertex of degree < 2: " + f.band->vertex(r).to_string());
    if (extract) f.cycles = extract_cycles(*f.band, f.adjacency);
    return f;
}

MiddleFourFactor build_middle4_factor(int n) { return build_middle4_factor(n, build_paths(n)); }

NextFirst next_first_vertex(const MiddleFourFactor& f, const Vertex& x) {
    const int n = f.n;
    if (!in_first_set(x, n)) throw std::invalid_argument("not a first vertex: " + x.to_string());
    const BandIndex& band = *f.band;
    std::uint32_t prev = band.rank(x);
    const auto& nb = f.adjacency[prev];
    std::uint32_t cur = band.vertex(nb[0]).weight() == n + 2 ? nb[0] : nb[1];
    NextFirst out;
    for (std::size_t steps = 0; steps <= band.size(); ++steps) {
        const Vertex& v = band.vertex(cur);
        if (in_first_set(v, n)) {
            out.next = v;
            return out;
        }
        if (is_isolated(v, n)) out.visited_isolated = true;
        const auto& a = f.adjacency[cur];
        std::uint32_t next = a[0] != prev ? a[0] : a[1];
        prev = cur;
        cur = next;
    }
    throw std::logic_error("cycle through " + x.to_string() + " has no further first vertex");
}

int RhoOrbits::orbit(const Vertex& t) const {
    auto it = std::lower_bound(trees.begin(), trees.end(), t);
    if (it == trees.end() || *it != t) throw std::invalid_argument("not a tree of T_{n+1}: " + t.to_string());
    return orbit_of[static_cast<std::size_t>(it - trees.begin())];
}

RhoOrbits rho_orbits(int n) {
    require_n(n);
    RhoOrbits o;
    for (const auto& x : level_vertices(2 * n + 1, n + 1))
        if (classify_dyck(x) == DyckClass::TouchesZero) o.trees.push_back(to_tree(x));
    o.orbit_of.assign(o.trees.size(), -1);
    auto index = [&](const Vertex& t) {
        auto it = std::lower_bound(o.trees.begin(), o.trees.end(), t);
        if (it == o.trees.end() || *it != t) throw std::logic_error("rho left T_{n+1}: " + t.to_string());
        return static_cast<std::size_t>(it - o.trees.begin());
    };
    for (std::size_t i = 0; i < o.trees.size(); ++i) {
        if (o.orbit_of[i] >= 0) continue;
        Vertex t = o.trees[i];
        std::size_t j = i;
        while (o.orbit_of[j] < 0) {
            o.orbit_of[j] = o.count;
            t = rho(t);
            j = index(t);
        }
        if (o.orbit_of[j] != o.count) throw std::logic_error("rho is not a permutation");
        ++o.count;
    }
    return o;
}

std::vector<FlippablePair> flippable_pairs_of(const Vertex& x) {
    const int n = (x.length() - 1) / 2;
    if (!in_first_set(x, n)) throw std::invalid_argument("not a first vertex: " + x.to_string());
    std::vector<FlippablePair> out;
    auto H = heights(x);
    int f = components(to_tree(x)).front().length;
    for (int j = 1; j < f && j + 2 <= x.length(); ++j)
        if (x.at(j) && x.at(j + 1) && !x.at(j + 2))
            out.push_back({x, x.flipped(j + 1).flipped(j + 2), j, H[static_cast<std::size_t>(j - 1)]});
    return out;
}

std::vector<FlippablePair> flippable_pairs(int n) {
    require_n(n);
    std::vector<FlippablePair> out;
    for (const auto& x : level_vertices(2 * n + 1, n + 1))
        if (classify_dyck(x) == DyckClass::TouchesZero)
            for (auto& p : flippable_pairs_of(x)) out.push_back(std::move(p));
    std::sort(out.begin(), out.end(), [](const FlippablePair& a, const FlippablePair& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    return out;
}

std::string six_cycle_pattern(const FlippablePair& p) {
    const Vertex& x = p.x;
    const int N = x.length();
    const int j = p.position, d = p.depth;
    auto H = heights(x);
    auto h = [&](int pos) { return H[static_cast<std::size_t>(pos)]; };
    auto bits = [&](int from, int to) {  // x[from..to], empty if to < from
        return to < from ? std::string() : slice(x, from, to - from + 1).to_string();
    };
    // t[i]: last up-step from height i-1 to i before position j.
    std::vector<int> t(static_cast<std::size_t>(d) + 2, 0);
    for (int pos = 1; pos < j; ++pos)
        if (x.at(pos) && h(pos) >= 1 && h(pos) <= d) t[static_cast<std::size_t>(h(pos))] = pos;
    t[static_cast<std::size_t>(d) + 1] = j;
    std::string out;
    for (int i = 1; i <= d; ++i) out += bits(t[static_cast<std::size_t>(i)] + 1, t[static_cast<std::size_t>(i) + 1] - 1) + "0";
    out += "1**";
    // q[i]: first position after the previous one where the height drops to i.
    std::vector<int> q(static_cast<std::size_t>(d) + 1, 0);
    int from = j + 2;
    for (int i = d; i >= 0; --i) {
        int pos = from + 1;
        while (pos <= N && h(pos) != i) ++pos;
        if (pos > N) throw std::logic_error("pair does not decompose: " + x.to_string());
        q[static_cast<std::size_t>(i)] = pos;
        from = pos;
    }
    out += bits(j + 3, q[static_cast<std::size_t>(d)] - 1) + "*";
    for (int i = d; i >= 1; --i)
        out += bits(q[static_cast<std::size_t>(i)] + 1, q[static_cast<std::size_t>(i) - 1] - 1) + "1";
    out += bits(q[0] + 1, N);
    if (static_cast<int>(out.size()) != N) throw std::logic_error("six-cycle pattern has wrong length");
    return out;
}

SixCycle six_cycle_from_pattern(const std::string& pattern) {
    std::vector<int> stars;
    std::string base = pattern;
    for (std::size_t i = 0; i < pattern.size(); ++i)
        if (pattern[i] == '*') {
            stars.push_back(static_cast<int>(i));
            base[i] = '0';
        }
    if (stars.size() != 3) throw std::invalid_argument("pattern needs exactly three stars");
    SixCycle c;
    c.pattern = pattern;
    static const char* kOrder[6] = {"100", "110", "010", "011", "001", "101"};
    for (int k = 0; k < 6; ++k) {
        std::string s = base;
        for (int i = 0; i < 3; ++i) s[static_cast<std::size_t>(stars[static_cast<std::size_t>(i)])] = kOrder[k][i];
        c.vertices[static_cast<std::size_t>(k)] = Vertex::from_string(s);
    }
    return c;
}

SixCycle six_cycle(const PathSystem& ps, const FlippablePair& p) {
    SixCycle c = six_cycle_from_pattern(six_cycle_pattern(p));
    const Chain& px = ps.path_from(p.x);
    const Chain& py = ps.path_from(p.y);
    using E = std::pair<Vertex, Vertex>;
    auto norm = [](const Vertex& a, const Vertex& b) { return a < b ? E{a, b} : E{b, a}; };
    std::set<E> ex, ey, cyc;
    for (std::size_t i = 1; i < px.size(); ++i) ex.insert(norm(px[i - 1], px[i]));
    for (std::size_t i = 1; i < py.size(); ++i) ey.insert(norm(py[i - 1], py[i]));
    for (std::size_t i = 0; i < 6; ++i) cyc.insert(norm(c.vertices[i], c.vertices[(i + 1) % 6]));
    std::vector<E> in_x, in_y;
    for (const auto& e : cyc) {
        if (ex.count(e)) in_x.push_back(e);
        if (ey.count(e)) in_y.push_back(e);
    }
    auto fail = [&](const std::string& why) {
        throw std::logic_error("six-cycle " + c.pattern + " for (" + p.x.to_string() + "," + p.y.to_string() + "): " + why);
    };
    if (in_x.size() != 2 || in_y.size() != 1) fail("wrong intersection with the paths");
    const auto& [a1, b1] = in_x[0];
    const auto& [a2, b2] = in_x[1];
    if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) fail("edges on P(x) are incident");
    // Symmetric difference, then walk from x and from y.
    std::set<E> sd;
    for (const auto* s : {&ex, &ey})
        for (const auto& e : *s) sd.insert(e);
    for (const auto& e : cyc)
        if (!sd.erase(e)) sd.insert(e);
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& [a, b] : sd) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    auto walk = [&](const Vertex& start, std::size_t& count) {
        Vertex prev = start, cur = start;
        count = 1;
        while (true) {
            const auto& nb = adj[cur];
            if (nb.size() > 2) fail("symmetric difference is not a union of paths");
            const Vertex* next = nullptr;
            for (const auto& v : nb)
                if (v != prev && !(cur == start && count > 1)) next = &v;
            if (cur == start && nb.size() != 1) fail("start vertex is not an endpoint");
            if (!next) return cur;
            prev = cur;
            cur = *next;
            ++count;
            if (count > sd.size() + 2) fail("cycle in symmetric difference");
        }
    };
    std::size_t cx = 0, cy = 0;
    Vertex end_x = walk(p.x, cx), end_y = walk(p.y, cy);
    if (end_x != py.back() || end_y != px.back()) fail("endpoints not exchanged");
    std::set<Vertex> all(px.begin(), px.end());
    all.insert(py.begin(), py.end());
    if (cx + cy != all.size() || all.size() != px.size() + py.size()) fail("paths do not cover the same vertices");
    return c;
}

bool AuxGraph::connected() const {
    if (node_count == 0) return true;
    std::vector<std::size_t> t;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(node_count));
    for (const auto& e : edges) {
        adj[static_cast<std::size_t>(e.a)].push_back(e.b);
        adj[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    std::vector<char> seen(static_cast<std::size_t>(node_count), 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                q.push_back(w);
            }
    }
    return count == node_count;
}

AuxGraph aux_graph(const RhoOrbits& orbits, const std::vector<FlippablePair>& pairs) {
    AuxGraph g;
    g.node_count = orbits.count;
    for (const auto& p : pairs) g.edges.push_back({orbits.orbit(to_tree(p.x)), orbits.orbit(to_tree(p.y)), p});
    return g;
}

std::vector<std::size_t> spanning_tree(const AuxGraph& g, int root) {
    std::vector<std::vector<std::size_t>> inc(static_cast<std::size_t>(g.node_count));
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        inc[static_cast<std::size_t>(g.edges[i].a)].push_back(i);
        if (g.edges[i].b != g.edges[i].a) inc[static_cast<std::size_t>(g.edges[i].b)].push_back(i);
    }
    std::vector<char> seen(static_cast<std::size_t>(g.node_count), 0);
    std::vector<std::size_t> chosen;
    std::deque<int> q{root};
    seen[static_cast<std::size_t>(root)] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (std::size_t i : inc[static_cast<std::size_t>(v)]) {
            int w = g.edges[i].a == v ? g.edges[i].b : g.edges[i].a;
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            chosen.push_back(i);
            q.push_back(w);
        }
    }
    return chosen;
}

std::string to_string(MoveKind k) {
    switch (k) {
        case MoveKind::HeavyRotation: return "heavy";
        case MoveKind::LightRotation: return "light";
        case MoveKind::InverseHeavyRotation: return "inverse-heavy";
        case MoveKind::InverseLightRotation: return "inverse-light";
        case MoveKind::Pull: return "pull";
        case MoveKind::InversePull: return "inverse-pull";
    }
    return "?";
}

std::vector<Move> normalize_to_star(const Vertex& t) {
    if (!is_tree_word(t)) throw std::invalid_argument("not a tree of T_{n+1}: " + t.to_string());
    const int n = t.length() / 2 - 1;
    const Vertex s = star_tree(n);
    std::vector<Move> moves;
    Vertex cur = t;
    auto apply = [&](MoveKind k, int pos, Vertex next) {
        moves.push_back({k, pos, cur, next});
        cur = std::move(next);
    };
    // Pull pending edges in the left subtree up until it is a star.
    auto pull_to_star = [&]() {
        while (true) {
            int f = components(cur).front().length;
            int j = 2;
            while (j < f && !can_pull(cur, j)) ++j;
            if (j >= f) return;
            apply(MoveKind::Pull, j, pull(cur, j));
        }
    };
    // Turn the star below the leftmost child into a path, one leaf at a time.
    auto star_to_path = [&]() {
        while (true) {
            auto cs = components(cur);
            Vertex sub = slice(cur, 2, cs.front().length - 2);
            auto kids = components(sub);
            if (kids.size() <= 1) return;
            int j = kids[kids.size() - 2].start + 1;
            while (can_inverse_pull(cur, j)) {
                apply(MoveKind::InversePull, j, inverse_pull(cur, j));
                ++j;
            }
        }
    };
    for (int guard = 0; cur != s; ++guard) {
        if (guard > 4 * t.length() + 8) throw std::logic_error("normalization did not reach the star from " + t.to_string());
        bool ll = left_light(cur), rl = right_light(cur);
        if (ll && rl) {
            apply(MoveKind::LightRotation, 0, light_rotation(cur));
            pull_to_star();
        } else if (ll) {
            apply(MoveKind::InverseHeavyRotation, 0, inverse_heavy_rotation(cur));
        } else {
            pull_to_star();
            star_to_path();
            while (!left_light(cur)) apply(MoveKind::HeavyRotation, 0, heavy_rotation(cur));
            apply(MoveKind::LightRotation, 0, light_rotation(cur));
        }
    }
    return moves;
}

bool replay_moves(const Vertex& t, const std::vector<Move>& moves) {
    if (!is_tree_word(t)) return false;
    Vertex cur = t;
    try {
        for (const auto& m : moves) {
            if (m.before != cur) return false;
            Vertex next;
            switch (m.kind) {
                case MoveKind::HeavyRotation: next = heavy_rotation(cur); break;
                case MoveKind::LightRotation: next = light_rotation(cur); break;
                case MoveKind::InverseHeavyRotation: next = inverse_heavy_rotation(cur); break;
                case MoveKind::InverseLightRotation: next = inverse_light_rotation(cur); break;
                case MoveKind::Pull: next = pull(cur, m.position); break;
                case MoveKind::InversePull: next = inverse_pull(cur, m.position); break;
            }
            if (next != m.after) return false;
            cur = next;
        }
    } catch (const std::invalid_argument&) {
        return false;
    }
    return cur == star_tree(t.length() / 2 - 1);
}

HamiltonResult hamilton_middle4(int n) {
    require_n(n);
    PathSystem ps = build_paths(n);
    MiddleFourFactor f = build_middle4_factor(n, ps);
    RhoOrbits orbits = rho_orbits(n);
    if (orbits.count != static_cast<int>(f.cycles.size()))
        throw std::logic_error("orbit count differs from factor cycle count");
    AuxGraph g = aux_graph(orbits, flippable_pairs(n));
    if (!g.connected()) throw std::logic_error("auxiliary graph is disconnected");
    auto tree = spanning_tree(g, orbits.orbit(star_tree(n)));

    const BandIndex& band = *f.band;
    std::unordered_set<std::uint64_t> edges;
    for (std::uint32_t r = 0; r < band.size(); ++r)
        for (auto w : f.adjacency[r]) edges.insert(edge_key(r, w));
    for (std::size_t i : tree) {
        SixCycle c = six_cycle(ps, g.edges[i].pair);
        for (std::size_t k = 0; k < 6; ++k) {
            auto key = edge_key(band.rank(c.vertices[k]), band.rank(c.vertices[(k + 1) % 6]));
            if (!edges.erase(key)) edges.insert(key);
        }
    }
    std::vector<std::array<std::uint32_t, 2>> adj(band.size(), {kNone, kNone});
    for (auto key : edges) {
        auto a = static_cast<std::uint32_t>(key >> 32), b = static_cast<std::uint32_t>(key & 0xFFFFFFFFU);
        for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
            auto& slot = adj[u];
            if (slot[0] == kNone)
                slot[0] = v;
            else if (slot[1] == kNone)
                slot[1] = v;
            else
                throw std::logic_error("joining produced a vertex of degree > 2");
        }
    }
    auto cycles = extract_cycles(band, adj);
    if (cycles.size() != 1) throw std::logic_error("joining left " + std::to_string(cycles.size()) + " cycles");
    HamiltonResult r;
    r.cycle = std::move(cycles.front());
    r.six_cycles_used = tree.size();
    r.factor_cycles = f.cycles.size();
    return r;
}

VerificationReport verify_middle4_cycle(int n, const std::vector<Vertex>& cycle) {
    require_n(n);
    VerificationReport rep;
    BandIndex band(2 * n + 1, n - 1, n + 2);
    std::vector<char> seen(band.size(), 0);
    std::string cover_w, step_w;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Vertex& v = cycle[i];
        const Vertex& next = cycle[(i + 1) % cycle.size()];
        if (!band.contains(v)) {
            if (cover_w.empty()) cover_w = "vertex outside the middle four levels: " + v.to_string();
            continue;
        }
        auto r = band.rank(v);
        if (seen[r] && cover_w.empty()) cover_w = "vertex repeated: " + v.to_string();
        seen[r] = 1;
        if (flip_position(v, next) == 0 && step_w.empty())
            step_w = (i + 1 == cycle.size() ? "wraparound " : "step ") + v.to_string() + " -> " + next.to_string();
    }
    if (cover_w.empty() && cycle.size() != band.size())
        cover_w = std::to_string(cycle.size()) + " vertices, want " + std::to_string(band.size());
    rep.add("cover", cover_w.empty(), cover_w);
    rep.add("steps", step_w.empty(), step_w);
    return rep;
}

std::uint64_t trivalent_tree_count(int n) {
    if (n < 1 || n > 13) throw std::invalid_argument("trivalent count supports 1 <= n <= 13");
    const int m = n + 2;
    using Diag = std::pair<int, int>;
    // All triangulations of the sub-polygon i..j (i < j) as diagonal lists.
    std::map<std::pair<int, int>, std::vector<std::vector<Diag>>> memo;
    std::function<const std::vector<std::vector<Diag>>&(int, int)> tri = [&](int i, int j) -> const std::vector<std::vector<Diag>>& {
        auto key = std::pair{i, j};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<std::vector<Diag>> out;
        if (j - i < 2) {
            out.emplace_back();
        } else {
            for (int k = i + 1; k < j; ++k) {
                const auto& left = tri(i, k);
                const auto& right = tri(k, j);
                for (const auto& a : left)
                    for (const auto& b : right) {
                        std::vector<Diag> d = a;
                        d.insert(d.end(), b.begin(), b.end());
                        if (k - i > 1) d.emplace_back(i, k);
                        if (j - k > 1) d.emplace_back(k, j);
                        out.push_back(std::move(d));
                    }
            }
        }
        return memo.emplace(key, std::move(out)).first->second;
    };
    std::set<std::vector<Diag>> classes;
    for (const auto& t : tri(0, m - 1)) {
        std::vector<Diag> best;
        for (int r = 0; r < m; ++r) {
            std::vector<Diag> rot;
            for (auto [a, b] : t) {
                int x = (a + r) % m, y = (b + r) % m;
                rot.emplace_back(std::min(x, y), std::max(x, y));
            }
            std::sort(rot.begin(), rot.end());
            if (r == 0 || rot < best) best = std::move(rot);
        }
        classes.insert(std::move(best));
    }
    return classes.size();
}

VerificationReport middle4_checks(int n) {
    require_n(n);
    const int N = 2 * n + 1;
    VerificationReport rep;
    PathSystem ps = build_paths(n);
    LevelSets sets = level_sets(ps);

    // Paths cover levels n+1 and n+2 exactly once together with I.
    {
        std::unordered_set<Vertex> seen;
        std::string w;
        std::size_t total = ps.isolated.size();
        for (const auto& p : ps.paths)
            for (const auto& v : p) {
                ++total;
                if (!seen.insert(v).second && w.empty()) w = "vertex on two paths: " + v.to_string();
            }
        for (const auto& v : ps.isolated)
            if (!seen.insert(v).second && w.empty()) w = "isolated vertex on a path: " + v.to_string();
        if (w.empty() && total != binomial(N, n + 1) + binomial(N, n + 2)) w = "paths miss vertices (a cycle in P?)";
        rep.add("P is a set of paths", w.empty(), w);
    }
    // First, last and isolated vertices by lattice-path class; last = (u,0,1,v).
    {
        std::string w;
        for (const auto& x : level_vertices(N, n + 1)) {
            auto c = classify_dyck(x);
            bool f = ps.by_first.count(x) > 0;
            bool l = std::binary_search(sets.last.begin(), sets.last.end(), x);
            bool i = std::binary_search(sets.isolated.begin(), sets.isolated.end(), x);
            if (f != (c == DyckClass::TouchesZero) || l != (c == DyckClass::BelowOnce) || i != (c == DyckClass::StrictlyPositive)) {
                w = "class mismatch at " + x.to_string();
                break;
            }
        }
        for (const auto& p : ps.paths) {
            if (!w.empty()) break;
            auto [u, v] = canonical_decompose(p.front());
            Vertex want = concat({u, Vertex::from_string("01"), v});
            if (p.back() != want) w = "path from " + p.front().to_string() + " ends at " + p.back().to_string();
        }
        rep.add("first/last/isolated classes", w.empty(), w);
    }
    // F(P_0) and F(P_1) by the last bit.
    {
        std::string w;
        std::set<Vertex> f0, f1, want0, want1;
        for (const auto& x : sets.first) (x.at(N) ? f1 : f0).insert(x);
        for (const auto& z : level_vertices(2 * n, n + 1))
            if (classify_dyck(z) == DyckClass::TouchesZero) want0.insert(concat(z, Vertex::from_string("0")));
        for (const auto& z : level_vertices(2 * n, n))
            if (classify_dyck(z) == DyckClass::TouchesZero) want1.insert(concat(z, Vertex::from_string("1")));
        if (f0 != want0) w = "F(P_0) differs";
        if (f1 != want1) w = "F(P_1) differs";
        for (const auto& p : ps.paths)
            for (const auto& v : p)
                if (v.at(N) != p.front().at(N) && w.empty()) w = "path flips the last bit";
        rep.add("F(P_0), F(P_1)", w.empty(), w);
    }
    // E matches the prescribed sets bijectively.
    {
        std::string w;
        EEdges e = build_e_edges(n, sets);
        std::unordered_map<Vertex, Vertex> en, en1, en2;
        for (const auto& edge : e.top) en[edge.upper] = edge.lower;
        for (const auto& edge : e.minus_one) en1[edge.upper] = edge.lower;
        for (const auto& edge : e.minus_two) en2[edge.upper] = edge.lower;
        std::vector<Vertex> f0, f1, lnp;
        for (const auto& x : sets.first) (x.at(N) ? f1 : f0).push_back(x);
        std::unordered_set<Vertex> prime(sets.last_prime.begin(), sets.last_prime.end());
        for (const auto& x : sets.last)
            if (!prime.count(x)) lnp.push_back(x);
        auto image = [](const std::vector<Vertex>& xs) {
            std::set<Vertex> s;
            for (const auto& x : xs) s.insert(comp_rev(x));
            return s;
        };
        auto check = [&](const char* name, const std::vector<Vertex>& from, const std::unordered_map<Vertex, Vertex>& m,
                         const std::vector<Vertex>& target) {
            std::set<Vertex> got;
            for (const auto& x : from) {
                auto it = m.find(x);
                if (it == m.end()) {
                    if (w.empty()) w = std::string(name) + ": unmatched " + x.to_string();
                    return;
                }
                got.insert(it->second);
            }
            if (got.size() != from.size() || got != image(target))
                if (w.empty()) w = std::string(name) + ": wrong image";
        };
        check("F(P0)->f(F(P0))", f0, en, f0);
        check("F(P1)->f(I)", f1, en, sets.isolated);
        check("I->f(F(P1))", sets.isolated, en, f1);
        check("I->f(I)", sets.isolated, en1, sets.isolated);
        check("L\\L'->f(L\\L')", lnp, en, lnp);
        check("L'->f(L')", sets.last_prime, en2, sets.last_prime);
        rep.add("E matchings", w.empty(), w);
    }
    MiddleFourFactor f = build_middle4_factor(n, ps);
    rep.add("factor is 2-regular", true);
    // Next first vertex equals rho, and light steps pass an isolated vertex.
    {
        std::string w;
        for (const auto& x : sets.first) {
            auto nf = next_first_vertex(f, x);
            Vertex want = from_tree(rho(to_tree(x)));
            bool light = left_light(to_tree(x));
            if (nf.next != want || nf.visited_isolated != light) {
                w = "at " + x.to_string();
                break;
            }
        }
        rep.add("next first vertex is rho", w.empty(), w);
    }
    RhoOrbits orbits = rho_orbits(n);
    rep.add("orbits = factor cycles", orbits.count == static_cast<int>(f.cycles.size()),
            std::to_string(orbits.count) + " orbits, " + std::to_string(f.cycles.size()) + " cycles");
    {
        std::string w;
        std::map<int, std::string> canon;
        std::set<std::string> distinct;
        for (std::size_t i = 0; i < orbits.trees.size(); ++i) {
            std::string c = trivalent_canonical(orbits.trees[i]);
            auto [it, fresh] = canon.emplace(orbits.orbit_of[i], c);
            if (!fresh && it->second != c && w.empty()) w = "tau not constant on orbit of " + orbits.trees[i].to_string();
            distinct.insert(c);
        }
        if (w.empty() && distinct.size() != canon.size()) w = "tau merges orbits";
        std::uint64_t oracle = trivalent_tree_count(n);
        if (w.empty() && oracle != static_cast<std::uint64_t>(orbits.count))
            w = "oracle count " + std::to_string(oracle);
        rep.add("orbits = plane trivalent trees", w.empty(), w);
    }
    auto pairs = flippable_pairs(n);
    {
        std::string w1, w2, w3;
        std::set<std::pair<Vertex, Vertex>> all_edges;
        std::map<Vertex, std::vector<std::pair<std::size_t, std::size_t>>> spans;
        for (const auto& p : pairs) {
            SixCycle c;
            try {
                c = six_cycle(ps, p);
            } catch (const std::logic_error& e) {
                if (w1.empty()) w1 = e.what();
                continue;
            }
            for (std::size_t k = 0; k < 6; ++k) {
                Vertex a = c.vertices[k], b = c.vertices[(k + 1) % 6];
                if (b < a) std::swap(a, b);
                if (!all_edges.insert({a, b}).second && w2.empty()) w2 = "shared edge " + a.to_string() + " " + b.to_string();
            }
            const Chain& px = ps.path_from(p.x);
            std::vector<std::size_t> idx;
            for (std::size_t i = 1; i < px.size(); ++i)
                for (std::size_t k = 0; k < 6; ++k) {
                    const Vertex &a = c.vertices[k], &b = c.vertices[(k + 1) % 6];
                    if ((a == px[i - 1] && b == px[i]) || (b == px[i - 1] && a == px[i])) idx.push_back(i - 1);
                }
            std::sort(idx.begin(), idx.end());
            if (idx.size() == 2) spans[p.x].emplace_back(idx[0], idx[1]);
        }
        for (const auto& [x, ss] : spans)
            for (std::size_t i = 0; i < ss.size(); ++i)
                for (std::size_t j = i + 1; j < ss.size(); ++j) {
                    bool apart = ss[i].second < ss[j].first || ss[j].second < ss[i].first;
                    if (!apart && w3.empty()) w3 = "interleaved on P(" + x.to_string() + ")";
                }
        rep.add("six-cycles swap path ends", w1.empty(), w1);
        rep.add("six-cycles edge-disjoint", w2.empty(), w2);
        rep.add("six-cycles not interleaved", w3.empty(), w3);
    }
    AuxGraph g = aux_graph(orbits, pairs);
    rep.add("auxiliary graph connected", g.connected());
    {
        std::string w;
        for (const auto& t : orbits.trees) {
            auto moves = normalize_to_star(t);
            if (!replay_moves(t, moves)) {
                w = "replay failed from " + t.to_string();
                break;
            }
        }
        rep.add("every tree reaches the star", w.empty(), w);
    }
    return rep;
}

}  // namespace symchain
