#include "symchain/kinds.hpp"

#include <charconv>

#include "symchain/necklace.hpp"
#include "symchain/product.hpp"

namespace symchain {

namespace {

int parse_int(std::string_view s, const std::string& what) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw std::invalid_argument("bad integer '" + std::string(s) + "' in " + what);
    return v;
}

std::size_t member(const std::string& s, std::size_t size, const std::string& kind) {
    int i = parse_int(s, kind);
    if (i < 1 || static_cast<std::size_t>(i) > size)
        throw std::invalid_argument(kind + ": index must be in 1.." + std::to_string(size));
    return static_cast<std::size_t>(i - 1);
}

}  // namespace

std::vector<ChainDecomposition> necklace_family(int n, std::uint64_t budget) {
    NecklaceGraph g(n);
    std::vector<NecklaceScd> best;
    for (int k = 1;; ++k) {
        auto r = search_necklace_scds(g, k, budget);
        if (r.status == SearchStatus::BudgetExceeded)
            throw SearchBudgetExceeded("necklace search for k=" + std::to_string(k) + " exceeded the budget");
        if (r.status == SearchStatus::Impossible) break;
        best = std::move(r.scds);
    }
    if (best.empty()) throw std::invalid_argument("N_" + std::to_string(n) + " has no SCD");
    return lift_family(g, best);
}

std::vector<ChainDecomposition> four_scd_family(int n, std::uint64_t budget) {
    if (n < 13 || n % 2 == 0) throw std::invalid_argument("four-SCD product needs odd n >= 13");
    const int a = n - 7;
    std::vector<ChainDecomposition> left{scd_d0_paren(a), complement_scd(scd_d0_paren(a)), scd_d1(a),
                                         complement_scd(scd_d1(a))};
    auto right = necklace_family(7, budget);
    if (right.size() < 4) throw std::logic_error("N_7 search found fewer than four SCDs");
    right.resize(4);
    return product_scd_family(left, right);
}

ChainDecomposition scd_by_kind(const std::string& kind, int n, std::uint64_t budget) {
    if (n < 1 || n > 127) throw std::invalid_argument("dimension must be in 1..127");
    if (kind == "d0") return scd_d0_paren(n);
    if (kind == "d0c") return complement_scd(scd_d0_paren(n));
    if (kind == "d1" || kind == "d1c") {
        if (n % 2) throw std::invalid_argument(kind + " needs even n");
        return kind == "d1" ? scd_d1(n) : complement_scd(scd_d1(n));
    }
    auto colon = kind.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("unknown kind '" + kind + "'");
    std::string head = kind.substr(0, colon), arg = kind.substr(colon + 1);
    if (head == "lex") {
        std::vector<int> seq;
        std::size_t pos = 0;
        while (pos <= arg.size()) {
            auto comma = arg.find(',', pos);
            if (comma == std::string::npos) comma = arg.size();
            seq.push_back(parse_int(std::string_view(arg).substr(pos, comma - pos), kind));
            pos = comma + 1;
        }
        if (static_cast<int>(seq.size()) != n)
            throw std::invalid_argument(kind + ": need " + std::to_string(n) + " indices, got " + std::to_string(seq.size()));
        return scd_from_lexical(n, seq);
    }
    if (head == "product") {
        if (arg == "d0" || arg == "d0c") {
            if (n % 2 == 0 || n < 3) throw std::invalid_argument(kind + " needs odd n >= 3");
            return iterated_d0_product((n - 1) / 2, arg == "d0c");
        }
        if (arg.rfind("four.", 0) == 0) {
            auto fam = four_scd_family(n, budget);
            return fam[member(arg.substr(5), fam.size(), kind)];
        }
        throw std::invalid_argument("unknown product '" + arg + "' (d0, d0c, four.<i>)");
    }
    if (head == "necklace") {
        auto fam = necklace_family(n, budget);
        return fam[member(arg, fam.size(), kind)];
    }
    throw std::invalid_argument("unknown kind '" + kind + "'");
}

}  // namespace symchain
