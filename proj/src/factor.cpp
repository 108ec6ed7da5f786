#include "symchain/factor.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "symchain/band.hpp"

namespace symchain {

std::vector<Chain> restrict_chains(const ChainDecomposition& d, int lo, int hi) {
    std::vector<Chain> out;
    for (const auto& c : d.chains()) {
        Chain r;
        for (const auto& v : c) {
            int w = v.weight();
            if (w >= lo && w <= hi) r.push_back(v);
        }
        if (!r.empty()) out.push_back(std::move(r));
    }
    return out;
}

std::vector<Edge> alternating_matching(const std::vector<Chain>& paths) {
    std::vector<Edge> out;
    for (const auto& p : paths) {
        if (p.size() % 2 != 0) throw std::invalid_argument("path of even length starting at " + p.front().to_string());
        for (std::size_t i = 0; i + 1 < p.size(); i += 2) out.push_back({p[i], p[i + 1]});
    }
    return out;
}

CycleFactor build_factor(const ChainDecomposition& d1, const ChainDecomposition& d2, int ell) {
    const int dim = d1.dimension();
    if (dim != d2.dimension()) throw std::invalid_argument("dimensions differ");
    if (dim % 2 == 0) throw std::invalid_argument("cycle factors need an odd-dimensional cube");
    const int n = (dim - 1) / 2;
    if (ell < 1 || ell > n + 1) throw std::invalid_argument("ell must lie in 1..n+1");
    for (const auto* d : {&d1, &d2}) {
        auto rep = verify_scd(*d);
        if (!rep.ok()) throw std::invalid_argument("input is not an SCD:\n" + rep.to_text());
    }
    if (!edge_disjoint(d1, d2)) throw std::invalid_argument("SCDs share an edge");

    const int lo = n + 1 - ell, hi = n + ell;
    BandIndex band(dim, lo, hi);
    const std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::array<std::uint32_t, 2>> adj(band.size(), {none, none});
    for (int slot = 0; slot < 2; ++slot) {
        const auto& d = slot == 0 ? d1 : d2;
        auto paths = restrict_chains(d, lo, hi);
        for (const auto& e : alternating_matching(paths)) {
            auto a = band.rank(e.lower), b = band.rank(e.upper);
            adj[a][static_cast<std::size_t>(slot)] = b;
            adj[b][static_cast<std::size_t>(slot)] = a;
        }
    }
    CycleFactor f;
    f.dimension = dim;
    f.lo = lo;
    f.hi = hi;
    f.cycles = extract_cycles(band, adj);
    return f;
}

Census factor_census(const CycleFactor& f) {
    Census c;
    c.cycle_count = f.cycles.size();
    for (const auto& cyc : f.cycles) {
        c.lengths.push_back(cyc.size());
        ++c.histogram[cyc.size()];
    }
    return c;
}

VerificationReport verify_factor(const CycleFactor& f) {
    VerificationReport rep;
    BandIndex band(f.dimension, f.lo, f.hi);
    std::vector<char> seen(band.size(), 0);
    std::string cover_w, edge_w;
    std::size_t total = 0;
    for (const auto& cyc : f.cycles) {
        if (cyc.size() < 4 && edge_w.empty()) edge_w = "cycle shorter than 4";
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const Vertex& v = cyc[i];
            const Vertex& u = cyc[(i + 1) % cyc.size()];
            if (!band.contains(v)) {
                if (cover_w.empty()) cover_w = "vertex outside band: " + v.to_string();
                continue;
            }
            auto r = band.rank(v);
            if (seen[r] && cover_w.empty()) cover_w = "vertex repeated: " + v.to_string();
            seen[r] = 1;
            ++total;
            if (flip_position(v, u) == 0 && edge_w.empty()) edge_w = "non-edge " + v.to_string() + " " + u.to_string();
        }
    }
    if (cover_w.empty() && total != band.size())
        cover_w = "covers " + std::to_string(total) + " of " + std::to_string(band.size());
    rep.add("cover", cover_w.empty(), cover_w);
    rep.add("edges", edge_w.empty(), edge_w);
    return rep;
}

}  // namespace symchain
