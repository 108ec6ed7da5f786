#include "symchain/band.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace symchain {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return static_cast<std::uint64_t>(r);
}

BandIndex::BandIndex(int n, int lo, int hi) : n_(n), lo_(lo), hi_(hi) {
    if (n < 0 || n > 62 || lo < 0 || hi > n || lo > hi) throw std::invalid_argument("bad band");
    binom_.assign(static_cast<std::size_t>(n) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 2, 0));
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= a + 1 && b <= n + 1; ++b) binom_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = binomial(a, b);
    std::uint64_t total = 0;
    for (int k = lo; k <= hi; ++k) {
        offset_.push_back(total);
        total += binomial(n, k);
    }
    if (total > std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("band too large");
    vertices_.reserve(total);
    for (int k = lo; k <= hi; ++k) {
        if (k == 0) {
            vertices_.emplace_back(n);
            continue;
        }
        std::uint64_t w = (std::uint64_t{1} << k) - 1;
        std::uint64_t last = w << (n - k);
        while (true) {
            vertices_.push_back(Vertex::from_word(n, w));
            if (w == last) break;
            std::uint64_t c = w & (~w + 1);
            std::uint64_t r = w + c;
            w = (((r ^ w) >> 2) / c) | r;
        }
    }
}

bool BandIndex::contains(const Vertex& v) const {
    int k = v.weight();
    return v.length() == n_ && k >= lo_ && k <= hi_;
}

std::uint32_t BandIndex::rank(const Vertex& v) const {
    int k = v.weight();
    if (v.length() != n_ || k < lo_ || k > hi_) throw std::out_of_range("vertex outside band: " + v.to_string());
    std::uint64_t r = offset_[static_cast<std::size_t>(k - lo_)];
    std::uint64_t w = v.word();
    int j = 1;
    while (w != 0) {
        int b = std::countr_zero(w);
        r += binom_[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
        w &= w - 1;
        ++j;
    }
    return static_cast<std::uint32_t>(r);
}

std::vector<std::vector<Vertex>> extract_cycles(const BandIndex& band,
                                                const std::vector<std::array<std::uint32_t, 2>>& adjacency) {
    const std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
    std::vector<char> seen(band.size(), 0);
    std::vector<std::vector<Vertex>> cycles;
    for (std::uint32_t start = 0; start < band.size(); ++start) {
        if (seen[start]) continue;
        std::vector<std::uint32_t> ranks;
        std::uint32_t prev = none, cur = start;
        while (true) {
            seen[cur] = 1;
            ranks.push_back(cur);
            const auto& nb = adjacency[cur];
            if (nb[0] == none || nb[1] == none) throw std::logic_error("vertex of degree < 2: " + band.vertex(cur).to_string());
            std::uint32_t next = (nb[0] != prev) ? nb[0] : nb[1];
            if (nb[0] == nb[1]) throw std::logic_error("double edge at " + band.vertex(cur).to_string());
            prev = cur;
            cur = next;
            if (cur == start) break;
            if (seen[cur]) throw std::logic_error("adjacency is not 2-regular");
        }
        std::size_t m = ranks.size();
        std::size_t best = 0;
        for (std::size_t i = 1; i < m; ++i)
            if (band.vertex(ranks[i]) < band.vertex(ranks[best])) best = i;
        const Vertex& fwd = band.vertex(ranks[(best + 1) % m]);
        const Vertex& bwd = band.vertex(ranks[(best + m - 1) % m]);
        bool forward = fwd < bwd;
        std::vector<Vertex> cyc;
        cyc.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t idx = forward ? (best + i) % m : (best + m - i) % m;
            cyc.push_back(band.vertex(ranks[idx]));
        }
        cycles.push_back(std::move(cyc));
    }
    std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
    return cycles;
}

}  // namespace symchain
