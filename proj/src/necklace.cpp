#include "symchain/necklace.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace symchain {

Vertex rotate(const Vertex& v, int s) {
    const int n = v.length();
    if (n == 0) return v;
    s = ((s % n) + n) % n;
    Vertex r(n);
    for (int p = 1; p <= n; ++p)
        if (v.at(((p - 1 + s) % n) + 1)) r.set(p, true);
    return r;
}

Vertex necklace_rep(const Vertex& v) {
    Vertex best = v;
    for (int s = 1; s < v.length(); ++s) best = std::min(best, rotate(v, s));
    return best;
}

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int rotation_of(const Vertex& rep, const Vertex& v) {
    for (int s = 0; s < v.length(); ++s)
        if (rotate(rep, s) == v) return s;
    throw std::logic_error(v.to_string() + " is not a rotation of " + rep.to_string());
}

// Position in v (a rotation by s of rep) of rep's position p.
int position_in_rotation(int p, int s, int n) { return (((p - 1 - s) % n) + n) % n + 1; }

}  // namespace

NecklaceGraph::NecklaceGraph(int n) : n_(n), levels_(static_cast<std::size_t>(n) + 1) {
    if (n < 2 || n > 24) throw std::invalid_argument("necklace graph needs 2 <= n <= 24");
    for (int k = 1; k <= n - 1; ++k)
        for (const auto& v : level_vertices(n, k))
            if (necklace_rep(v) == v) {
                levels_[static_cast<std::size_t>(k)].push_back(static_cast<int>(reps_.size()));
                reps_.push_back(v);
            }
    up_.resize(reps_.size());
    down_.resize(reps_.size());
    for (int a = 0; a < node_count(); ++a) {
        if (level(a) >= n - 1) continue;
        for (int p = 1; p <= n; ++p) {
            if (rep(a).at(p)) continue;
            int b = node_of(necklace_rep(rep(a).flipped(p)));
            int id = static_cast<int>(instances_.size());
            instances_.push_back({a, b, p});
            up_[static_cast<std::size_t>(a)].push_back(id);
            down_[static_cast<std::size_t>(b)].push_back(id);
        }
    }
}

int NecklaceGraph::node_of(const Vertex& r) const {
    auto it = std::lower_bound(reps_.begin(), reps_.end(), r, [](const Vertex& a, const Vertex& b) {
        return a.weight() != b.weight() ? a.weight() < b.weight() : a < b;
    });
    if (it == reps_.end() || *it != r) throw std::invalid_argument("not a necklace representative: " + r.to_string());
    return static_cast<int>(it - reps_.begin());
}

int NecklaceGraph::multiplicity(int lower, int upper) const {
    int m = 0;
    for (int id : up_instances(lower))
        if (instances_[static_cast<std::size_t>(id)].upper == upper) ++m;
    return m;
}

VerificationReport verify_necklace_scd(const NecklaceGraph& g, const NecklaceScd& d) {
    VerificationReport rep;
    const int n = g.dimension();
    std::vector<int> seen(static_cast<std::size_t>(g.node_count()), 0);
    std::string part_w, path_w, sym_w;
    for (const auto& c : d.chains) {
        if (c.nodes.empty() || c.instances.size() + 1 != c.nodes.size()) {
            path_w = "malformed chain";
            continue;
        }
        for (int v : c.nodes) {
            if (v < 0 || v >= g.node_count()) {
                part_w = "bad node index";
                continue;
            }
            if (seen[static_cast<std::size_t>(v)]++ && part_w.empty()) part_w = "node " + g.rep(v).to_string() + " twice";
        }
        for (std::size_t i = 0; i < c.instances.size(); ++i) {
            int id = c.instances[i];
            if (id < 0 || id >= static_cast<int>(g.instances().size())) {
                path_w = "bad instance";
                continue;
            }
            const auto& e = g.instances()[static_cast<std::size_t>(id)];
            if ((e.lower != c.nodes[i] || e.upper != c.nodes[i + 1]) && path_w.empty())
                path_w = "instance does not join " + g.rep(c.nodes[i]).to_string() + " and " + g.rep(c.nodes[i + 1]).to_string();
        }
        if (g.level(c.nodes.front()) + g.level(c.nodes.back()) != n && sym_w.empty())
            sym_w = "chain from " + g.rep(c.nodes.front()).to_string() + " is not symmetric";
    }
    if (part_w.empty())
        for (int v = 0; v < g.node_count(); ++v)
            if (!seen[static_cast<std::size_t>(v)]) {
                part_w = "node " + g.rep(v).to_string() + " missing";
                break;
            }
    rep.add("partition", part_w.empty(), part_w);
    rep.add("paths", path_w.empty(), path_w);
    rep.add("symmetric", sym_w.empty(), sym_w);
    std::size_t want = g.nodes_at(n / 2).size();
    rep.add("count", d.chains.size() == want,
            d.chains.size() == want ? "" : std::to_string(d.chains.size()) + " chains, want " + std::to_string(want));
    return rep;
}

bool necklace_edge_disjoint(const NecklaceScd& a, const NecklaceScd& b) {
    std::unordered_set<int> ids;
    for (const auto& c : a.chains) ids.insert(c.instances.begin(), c.instances.end());
    for (const auto& c : b.chains)
        for (int id : c.instances)
            if (ids.count(id)) return false;
    return true;
}

namespace {

struct BudgetExhausted {};

/// Backtracking over k SCDs, each grown from the middle outward.
class Search {
public:
    Search(const NecklaceGraph& g, int k, std::uint64_t budget)
        : g_(g), k_(k), budget_(budget), used_(g.instances().size(), 0) {
        const int n = g.dimension();
        odd_ = n % 2 == 1;
        m_ = odd_ ? (n - 1) / 2 : n / 2;
        core_ = g.nodes_at(m_);
        if (odd_ && g.nodes_at(m_ + 1).size() != core_.size()) throw std::logic_error("middle levels differ in size");
        const std::size_t nc = core_.size();
        bottom_.resize(nc);
        top_.resize(nc);
        // Stage t pairs level m-t with level n-(m-t).
        for (int b = m_ - 1; b >= 1; --b) stages_.push_back({b, n - b});
        first_core_instance_.assign(static_cast<std::size_t>(k), -1);
    }

    SearchResult run() {
        SearchResult r;
        try {
            r.status = dfs_scd(0) ? SearchStatus::Found : SearchStatus::Impossible;
        } catch (const BudgetExhausted&) {
            r.status = SearchStatus::BudgetExceeded;
        }
        r.nodes_explored = explored_;
        if (r.status == SearchStatus::Found) r.scds = found_;
        return r;
    }

private:
    struct Stage {
        int bottom_level;
        int top_level;
    };
    struct Assign {
        int chain;
        int instance;
    };

    void tick() {
        if (++explored_ > budget_) throw BudgetExhausted{};
    }

    int unused(const std::vector<int>& ids) const {
        int c = 0;
        for (int id : ids) c += !used_[static_cast<std::size_t>(id)];
        return c;
    }

    // Every node below the middle needs an up-edge in each remaining SCD and
    // every node above needs a down-edge.
    bool feasible(int remaining) const {
        const int n = g_.dimension();
        for (int v = 0; v < g_.node_count(); ++v) {
            int lv = g_.level(v);
            if (lv <= (odd_ ? m_ : m_ - 1) && unused(g_.up_instances(v)) < remaining) return false;
            if (lv >= m_ + 1 && lv <= n - 1 && unused(g_.down_instances(v)) < remaining) return false;
        }
        return true;
    }

    bool dfs_scd(int j) {
        tick();
        if (j == k_) return true;
        if (!feasible(k_ - j)) return false;
        const std::size_t nc = core_.size();
        for (std::size_t c = 0; c < nc; ++c) bottom_[c] = top_[c] = core_[c];
        core_assign_.assign(nc, -1);
        stage_bottom_.assign(stages_.size(), {});
        stage_top_.assign(stages_.size(), {});
        upper_taken_.assign(static_cast<std::size_t>(g_.node_count()), 0);
        if (odd_) return dfs_core(j, 0);
        return dfs_stage(j, 0, all_chains());
    }

    std::vector<int> all_chains() const {
        std::vector<int> v(core_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
        return v;
    }

    bool dfs_core(int j, std::size_t idx) {
        tick();
        if (idx == core_.size()) return dfs_stage(j, 0, all_chains());
        for (int id : g_.up_instances(core_[idx])) {
            if (used_[static_cast<std::size_t>(id)]) continue;
            int up = g_.instances()[static_cast<std::size_t>(id)].upper;
            if (upper_taken_[static_cast<std::size_t>(up)]) continue;
            if (idx == 0) {
                if (j > 0 && id <= first_core_instance_[static_cast<std::size_t>(j - 1)]) continue;
                first_core_instance_[static_cast<std::size_t>(j)] = id;
            }
            used_[static_cast<std::size_t>(id)] = 1;
            upper_taken_[static_cast<std::size_t>(up)] = 1;
            core_assign_[idx] = id;
            top_[idx] = up;
            if (dfs_core(j, idx + 1)) return true;
            top_[idx] = core_[idx];
            upper_taken_[static_cast<std::size_t>(up)] = 0;
            used_[static_cast<std::size_t>(id)] = 0;
        }
        return false;
    }

    bool dfs_stage(int j, std::size_t t, std::vector<int> open) {
        tick();
        if (t == stages_.size()) {
            found_.push_back(assemble());
            Saved snap{bottom_, top_, core_assign_, stage_bottom_, stage_top_, upper_taken_};
            if (dfs_scd(j + 1)) return true;
            // dfs_scd(j+1) reset the per-SCD state; restore ours for backtracking.
            bottom_ = std::move(snap.bottom);
            top_ = std::move(snap.top);
            core_assign_ = std::move(snap.core_assign);
            stage_bottom_ = std::move(snap.stage_bottom);
            stage_top_ = std::move(snap.stage_top);
            upper_taken_ = std::move(snap.upper_taken);
            found_.pop_back();
            return false;
        }
        std::vector<char> is_open(core_.size(), 0);
        for (int c : open) is_open[static_cast<std::size_t>(c)] = 1;
        std::vector<char> chosen(core_.size(), 0);
        stage_bottom_[t].clear();
        return dfs_bottom(j, t, 0, is_open, chosen);
    }

    bool dfs_bottom(int j, std::size_t t, std::size_t idx, const std::vector<char>& is_open, std::vector<char>& chosen) {
        tick();
        const auto& nodes = g_.nodes_at(stages_[t].bottom_level);
        if (idx == nodes.size()) {
            stage_top_[t].clear();
            std::vector<char> topped(core_.size(), 0);
            return dfs_top(j, t, 0, chosen, topped);
        }
        for (int id : g_.up_instances(nodes[idx])) {
            if (used_[static_cast<std::size_t>(id)]) continue;
            int up = g_.instances()[static_cast<std::size_t>(id)].upper;
            int c = chain_with_bottom(up, is_open, chosen);
            if (c < 0) continue;
            used_[static_cast<std::size_t>(id)] = 1;
            chosen[static_cast<std::size_t>(c)] = 1;
            int old = bottom_[static_cast<std::size_t>(c)];
            bottom_[static_cast<std::size_t>(c)] = nodes[idx];
            stage_bottom_[t].push_back({c, id});
            if (dfs_bottom(j, t, idx + 1, is_open, chosen)) return true;
            stage_bottom_[t].pop_back();
            bottom_[static_cast<std::size_t>(c)] = old;
            chosen[static_cast<std::size_t>(c)] = 0;
            used_[static_cast<std::size_t>(id)] = 0;
        }
        return false;
    }

    bool dfs_top(int j, std::size_t t, std::size_t idx, const std::vector<char>& chosen, std::vector<char>& topped) {
        tick();
        const auto& nodes = g_.nodes_at(stages_[t].top_level);
        if (idx == nodes.size()) {
            std::vector<int> next;
            for (std::size_t c = 0; c < chosen.size(); ++c)
                if (chosen[c]) next.push_back(static_cast<int>(c));
            return dfs_stage(j, t + 1, std::move(next));
        }
        for (int id : g_.down_instances(nodes[idx])) {
            if (used_[static_cast<std::size_t>(id)]) continue;
            int low = g_.instances()[static_cast<std::size_t>(id)].lower;
            int c = -1;
            for (std::size_t x = 0; x < chosen.size(); ++x)
                if (chosen[x] && !topped[x] && top_[x] == low) {
                    c = static_cast<int>(x);
                    break;
                }
            if (c < 0) continue;
            used_[static_cast<std::size_t>(id)] = 1;
            topped[static_cast<std::size_t>(c)] = 1;
            int old = top_[static_cast<std::size_t>(c)];
            top_[static_cast<std::size_t>(c)] = nodes[idx];
            stage_top_[t].push_back({c, id});
            if (dfs_top(j, t, idx + 1, chosen, topped)) return true;
            stage_top_[t].pop_back();
            top_[static_cast<std::size_t>(c)] = old;
            topped[static_cast<std::size_t>(c)] = 0;
            used_[static_cast<std::size_t>(id)] = 0;
        }
        return false;
    }

    int chain_with_bottom(int node, const std::vector<char>& is_open, const std::vector<char>& chosen) const {
        for (std::size_t c = 0; c < core_.size(); ++c)
            if (is_open[c] && !chosen[c] && bottom_[c] == node) return static_cast<int>(c);
        return -1;
    }

    NecklaceScd assemble() const {
        const std::size_t nc = core_.size();
        std::vector<NecklaceChain> chains(nc);
        for (std::size_t c = 0; c < nc; ++c) {
            chains[c].nodes.push_back(core_[c]);
            if (odd_) {
                int id = core_assign_[c];
                chains[c].nodes.push_back(g_.instances()[static_cast<std::size_t>(id)].upper);
                chains[c].instances.push_back(id);
            }
        }
        for (std::size_t t = 0; t < stages_.size(); ++t) {
            for (const auto& a : stage_bottom_[t]) {
                auto& ch = chains[static_cast<std::size_t>(a.chain)];
                ch.nodes.insert(ch.nodes.begin(), g_.instances()[static_cast<std::size_t>(a.instance)].lower);
                ch.instances.insert(ch.instances.begin(), a.instance);
            }
            for (const auto& a : stage_top_[t]) {
                auto& ch = chains[static_cast<std::size_t>(a.chain)];
                ch.nodes.push_back(g_.instances()[static_cast<std::size_t>(a.instance)].upper);
                ch.instances.push_back(a.instance);
            }
        }
        std::sort(chains.begin(), chains.end(), [&](const NecklaceChain& a, const NecklaceChain& b) {
            return g_.rep(a.nodes.front()) < g_.rep(b.nodes.front());
        });
        return {chains};
    }

    struct Saved {
        std::vector<int> bottom, top, core_assign;
        std::vector<std::vector<Assign>> stage_bottom, stage_top;
        std::vector<char> upper_taken;
    };

    const NecklaceGraph& g_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t explored_ = 0;
    bool odd_ = false;
    int m_ = 0;
    std::vector<int> core_;
    std::vector<Stage> stages_;
    std::vector<char> used_;
    std::vector<int> bottom_, top_, core_assign_, first_core_instance_;
    std::vector<std::vector<Assign>> stage_bottom_, stage_top_;
    std::vector<char> upper_taken_;
    std::vector<NecklaceScd> found_;
};

}  // namespace

SearchResult search_necklace_scds(const NecklaceGraph& g, int k, std::uint64_t budget) {
    if (!is_prime(g.dimension())) throw std::invalid_argument("necklace search needs prime n");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    return Search(g, k, budget).run();
}

Chain lift_chain(const NecklaceGraph& g, const NecklaceChain& c, int s) {
    const int n = g.dimension();
    Chain out{rotate(g.rep(c.nodes.front()), s)};
    for (std::size_t i = 0; i < c.instances.size(); ++i) {
        const auto& e = g.instances()[static_cast<std::size_t>(c.instances[i])];
        const Vertex& cur = out.back();
        int r = rotation_of(g.rep(e.lower), cur);
        Vertex next = cur.flipped(position_in_rotation(e.position, r, n));
        if (necklace_rep(next) != g.rep(e.upper)) throw std::logic_error("lift left the necklace chain");
        out.push_back(next);
    }
    return out;
}

namespace {

const NecklaceChain& long_chain(const NecklaceGraph& g, const NecklaceScd& d) {
    for (const auto& c : d.chains)
        if (g.level(c.nodes.front()) == 1 && g.level(c.nodes.back()) == g.dimension() - 1) return c;
    throw std::invalid_argument("necklace SCD has no chain from level 1 to level n-1");
}

}  // namespace

ChainDecomposition lift_to_cube(const NecklaceGraph& g, const NecklaceScd& d, int extend_rotation) {
    const int n = g.dimension();
    if (!is_prime(n)) throw std::invalid_argument("lifting needs prime n");
    const NecklaceChain& lc = long_chain(g, d);
    std::vector<Chain> chains;
    for (const auto& c : d.chains)
        for (int s = 0; s < n; ++s) {
            Chain q = lift_chain(g, c, s);
            if (&c == &lc && s == extend_rotation) {
                q.insert(q.begin(), Vertex(n));
                q.push_back(Vertex::ones(n));
            }
            chains.push_back(std::move(q));
        }
    return ChainDecomposition(n, std::move(chains));
}

std::vector<ChainDecomposition> lift_family(const NecklaceGraph& g, const std::vector<NecklaceScd>& scds) {
    const int n = g.dimension();
    const std::size_t k = scds.size();
    std::vector<Chain> base;
    for (const auto& d : scds) base.push_back(lift_chain(g, long_chain(g, d), 0));
    std::vector<int> rot(k, 0);
    std::function<bool(std::size_t)> choose = [&](std::size_t i) -> bool {
        if (i == k) return true;
        for (int s = 0; s < n; ++s) {
            Vertex first = rotate(base[i].front(), s), last = rotate(base[i].back(), s);
            bool clash = false;
            for (std::size_t j = 0; j < i && !clash; ++j)
                clash = rotate(base[j].front(), rot[j]) == first || rotate(base[j].back(), rot[j]) == last;
            if (clash) continue;
            rot[i] = s;
            if (choose(i + 1)) return true;
        }
        return false;
    };
    if (!choose(0)) throw std::invalid_argument("no rotation choice keeps the extension edges distinct");
    std::vector<ChainDecomposition> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(lift_to_cube(g, scds[i], rot[i]));
    return out;
}

std::string necklace_scd_to_text(const NecklaceGraph& g, const NecklaceScd& d) {
    std::vector<Chain> chains;
    for (const auto& c : d.chains) chains.push_back(lift_chain(g, c, 0));
    return to_text(ChainDecomposition(g.dimension(), std::move(chains)));
}

NecklaceScd parse_necklace_scd_text(const NecklaceGraph& g, const std::string& text) {
    const int n = g.dimension();
    auto cd = parse_scd_text(text);
    if (cd.dimension() != n) throw std::invalid_argument("dimension mismatch in necklace SCD text");
    NecklaceScd d;
    for (const auto& q : cd.chains()) {
        NecklaceChain c;
        for (std::size_t i = 0; i < q.size(); ++i) {
            c.nodes.push_back(g.node_of(necklace_rep(q[i])));
            if (i == 0) continue;
            int pos = flip_position(q[i - 1], q[i]);
            if (pos == 0 || q[i].weight() != q[i - 1].weight() + 1) throw std::invalid_argument("not a chain step");
            int lower = c.nodes[i - 1];
            int r = rotation_of(g.rep(lower), q[i - 1]);
            int p = ((pos - 1 + r) % n) + 1;
            int found = -1;
            for (int id : g.up_instances(lower))
                if (g.instances()[static_cast<std::size_t>(id)].position == p) found = id;
            if (found < 0) throw std::logic_error("no instance for step");
            c.instances.push_back(found);
        }
        d.chains.push_back(std::move(c));
    }
    return d;
}

}  // namespace symchain
