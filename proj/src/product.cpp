#include "symchain/product.hpp"

#include <algorithm>
#include <stdexcept>

namespace symchain {

namespace {

void grid_chains(const Chain& x, const Chain& y, GridRule rule, std::vector<Chain>& out) {
    const std::size_t a = x.size(), b = y.size();
    const std::size_t m = std::min(a, b);
    for (std::size_t j = 1; j <= m; ++j) {
        Chain c;
        if (rule == GridRule::FirstCoordinate) {
            const std::size_t last = a - j + 1;
            for (std::size_t s = 1; s <= last; ++s) c.push_back(concat(x[s - 1], y[j - 1]));
            for (std::size_t t = j + 1; t <= b; ++t) c.push_back(concat(x[last - 1], y[t - 1]));
        } else {
            const std::size_t last = b - j + 1;
            for (std::size_t t = 1; t <= last; ++t) c.push_back(concat(x[j - 1], y[t - 1]));
            for (std::size_t s = j + 1; s <= a; ++s) c.push_back(concat(x[s - 1], y[last - 1]));
        }
        out.push_back(std::move(c));
    }
}

void require_scd(const ChainDecomposition& d) {
    auto rep = verify_scd(d);
    if (!rep.ok()) throw std::invalid_argument("product input is not an SCD:\n" + rep.to_text());
}

}  // namespace

ChainDecomposition product_scd(const ChainDecomposition& a, const ChainDecomposition& b, GridRule rule) {
    require_scd(a);
    require_scd(b);
    if (a.dimension() + b.dimension() > Vertex::max_length) throw std::invalid_argument("product too large");
    std::vector<Chain> chains;
    for (const auto& x : a.chains())
        for (const auto& y : b.chains()) grid_chains(x, y, rule, chains);
    return ChainDecomposition(a.dimension() + b.dimension(), std::move(chains));
}

std::vector<ChainDecomposition> product_scd_family(const std::vector<ChainDecomposition>& left,
                                                   const std::vector<ChainDecomposition>& right, GridRule rule) {
    if (left.size() != right.size()) throw std::invalid_argument("families differ in size");
    std::vector<ChainDecomposition> out;
    for (std::size_t i = 0; i < left.size(); ++i) out.push_back(product_scd(left[i], right[i], rule));
    return out;
}

ChainDecomposition iterated_d0_product(int n, bool complemented) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    ChainDecomposition d = scd_d0_paren(3);
    ChainDecomposition q2 = scd_d0_paren(2);
    if (complemented) {
        d = complement_scd(d);
        q2 = complement_scd(q2);
    }
    for (int i = 1; i < n; ++i) d = product_scd(d, q2, GridRule::FirstCoordinate);
    return d;
}

}  // namespace symchain
