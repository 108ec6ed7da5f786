// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "oracles.hpp"
#include "symchain/factor.hpp"
#include "symchain/kinds.hpp"
#include "symchain/lexical.hpp"
#include "symchain/middle4.hpp"
#include "symchain/necklace.hpp"
#include "symchain/product.hpp"

using namespace symchain;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

int failures = 0;

void criterion(const std::string& id, const std::string& what, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.ok && s > limit_s) out.fail("took " + std::to_string(s) + " s, limit " + std::to_string(limit_s) + " s");
    std::ostringstream line;
    line.precision(1);
    line << std::fixed << id << " " << (out.ok ? "PASS" : "FAIL") << "  " << what << "  (" << s << " s)";
    if (!out.ok) line << "  -- " << out.detail;
    std::cout << line.str() << std::endl;
    if (!out.ok) ++failures;
}

std::map<int, std::vector<std::size_t>> read_table(const std::string& name) {
    std::ifstream in(std::string(SYMCHAIN_FIXTURES) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::map<int, std::vector<std::size_t>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int n;
        ls >> n;
        std::size_t c;
        while (ls >> c) rows[n].push_back(c);
    }
    return rows;
}

std::string row_text(const std::vector<std::size_t>& r) {
    std::string s;
    for (auto c : r) s += (s.empty() ? "" : " ") + std::to_string(c);
    return s;
}

void table(Outcome& out, const std::string& fixture, const std::function<std::pair<ChainDecomposition, ChainDecomposition>(int)>& pair) {
    auto t = read_table(fixture);
    for (int n = 1; n <= 9; ++n) {
        auto [a, b] = pair(n);
        std::vector<std::size_t> got;
        for (int ell = 1; ell <= n + 1; ++ell) got.push_back(build_factor(a, b, ell).cycles.size());
        if (got != t.at(n)) out.fail("n=" + std::to_string(n) + ": got " + row_text(got) + ", want " + row_text(t.at(n)));
    }
}

bool family_ok(const std::vector<ChainDecomposition>& f, std::string& why) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto rep = verify_scd(f[i]);
        if (!rep.ok()) {
            why = "member " + std::to_string(i + 1) + " invalid:\n" + rep.to_text();
            return false;
        }
        for (std::size_t j = 0; j < i; ++j)
            if (!edge_disjoint(f[i], f[j])) {
                why = "members " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " share an edge";
                return false;
            }
    }
    return true;
}

std::string bits(const Vertex& v) { return v.to_string(); }

}  // namespace

int main() {
    criterion("AC1", "cycle counts with D0 and its complement, n=1..9, all ell", 60, [](Outcome& out) {
        table(out, "table2.txt", [](int n) {
            auto d = scd_d0_paren(2 * n + 1);
            return std::pair{d, complement_scd(d)};
        });
    });

    criterion("AC2", "cycle counts with the iterated D0 product pair, n=1..9, all ell", 60, [](Outcome& out) {
        table(out, "table3.txt", [](int n) { return std::pair{iterated_d0_product(n), iterated_d0_product(n, true)}; });
    });

    criterion("AC3", "middle-four factor cycle counts n=1..10 and trivalent-tree oracle (n=11 adjudicated)", 120, [](Outcome& out) {
        const std::vector<std::size_t> listed{1, 1, 1, 4, 6, 19, 49, 150, 442, 1424};
        for (int n = 1; n <= 11; ++n) {
            std::size_t cycles = build_middle4_factor(n).cycles.size();
            std::uint64_t burnside = oracle::trivalent_burnside(n);
            std::uint64_t enumerated = trivalent_tree_count(n);
            if (n <= 10 && cycles != listed[static_cast<std::size_t>(n - 1)])
                out.fail("n=" + std::to_string(n) + ": " + std::to_string(cycles) + " cycles");
            if (cycles != burnside || enumerated != burnside)
                out.fail("n=" + std::to_string(n) + ": cycles " + std::to_string(cycles) + ", oracle " + std::to_string(burnside) +
                         ", enumeration " + std::to_string(enumerated));
        }
    });

    criterion("AC4", "verified Hamilton cycles of the middle four levels, n=1..8", 300, [](Outcome& out) {
        for (int n = 1; n <= 8; ++n) {
            auto h = hamilton_middle4(n);
            const int N = 2 * n + 1;
            std::uint64_t want = oracle::binom(N, n - 1) + oracle::binom(N, n) + oracle::binom(N, n + 1) + oracle::binom(N, n + 2);
            std::unordered_set<Vertex> seen;
            bool good = h.cycle.size() == want;
            for (std::size_t i = 0; good && i < h.cycle.size(); ++i) {
                const Vertex& a = h.cycle[i];
                const Vertex& b = h.cycle[(i + 1) % h.cycle.size()];
                good = a.weight() >= n - 1 && a.weight() <= n + 2 && seen.insert(a).second && flip_position(a, b) != 0;
            }
            if (!good) out.fail("n=" + std::to_string(n) + ": not a Hamilton cycle");
        }
    });

    criterion("AC5", "D0, D0c, D1, D1c pairwise edge-disjoint SCDs for even n=6..14", 60, [](Outcome& out) {
        for (int n = 6; n <= 14; n += 2) {
            std::string why;
            std::vector<ChainDecomposition> f{scd_d0_paren(n), complement_scd(scd_d0_paren(n)), scd_d1(n), complement_scd(scd_d1(n))};
            if (!family_ok(f, why)) out.fail("n=" + std::to_string(n) + ": " + why);
        }
    });

    criterion("AC6", "necklace search: 3 in N5, 4 in N7, 4 in N5 impossible, lifts verified", 600, [](Outcome& out) {
        for (auto [n, k] : {std::pair{5, 3}, std::pair{7, 4}}) {
            NecklaceGraph g(n);
            auto r = search_necklace_scds(g, k, kDefaultSearchBudget);
            if (r.status != SearchStatus::Found) {
                out.fail("N" + std::to_string(n) + " k=" + std::to_string(k) + " not found");
                continue;
            }
            std::string why;
            if (!family_ok(lift_family(g, r.scds), why)) out.fail("lift of N" + std::to_string(n) + ": " + why);
        }
        NecklaceGraph g5(5);
        if (search_necklace_scds(g5, 4, kDefaultSearchBudget).status != SearchStatus::Impossible) out.fail("N5 k=4 not ruled out");
    });

    criterion("AC7", "four pairwise edge-disjoint SCDs of Q13 from Q6 x Q7", 60, [](Outcome& out) {
        auto f = four_scd_family(13);
        std::string why;
        if (f.size() != 4) out.fail("family size " + std::to_string(f.size()));
        if (!family_ok(f, why)) out.fail(why);
    });

    criterion("AC8", "property suites", 600, [](Outcome& out) {
        // lexical matchings against the scan oracle, with the matching properties, n <= 9
        for (int n = 1; n <= 9; ++n)
            for (int k = 0; k < n; ++k) {
                const int l = lexical_max_index(n, k);
                std::set<std::pair<std::string, std::string>> all;
                for (int i = 0; i <= l; ++i) {
                    auto m = lex_matching({n, k, i});
                    std::set<Edge> ms(m.begin(), m.end());
                    if (m.size() != std::min(oracle::binom(n, k), oracle::binom(n, k + 1))) out.fail("saturation");
                    for (auto& e : m) {
                        if (oracle::lex_up(bits(e.lower), i) != bits(e.upper)) out.fail("lex_up oracle");
                        all.insert({bits(e.lower), bits(e.upper)});
                    }
                    std::set<Edge> comp, rev;
                    for (auto& e : m) {
                        comp.insert({complement(e.upper), complement(e.lower)});
                        rev.insert({reverse(e.lower), reverse(e.upper)});
                    }
                    auto mc = lex_matching({n, n - k - 1, l - i}), mr = lex_matching({n, k, l - i});
                    if (comp != std::set<Edge>(mc.begin(), mc.end()) || rev != std::set<Edge>(mr.begin(), mr.end()))
                        out.fail("symmetry at n=" + std::to_string(n));
                }
                if (all.size() != oracle::binom(n, k) * static_cast<std::size_t>(n - k)) out.fail("edge partition");
            }
        // the two quoted vertices of Q_22
        const Vertex x = Vertex::from_string("1110001001001001100001"), y = Vertex::from_string("1110001001001001100101");
        std::set<int> xm, yu;
        for (int i = 0; i <= 12; ++i) {
            if (lex_up({22, 9, i}, x)) xm.insert(i);
            if (!lex_down({22, 9, i}, y)) yu.insert(i);
        }
        if (xm.size() != 13 || yu != std::set<int>{4, 6, 9}) out.fail("Q22 incidences");
        // D0 three ways, D1 two ways
        for (int n = 2; n <= 8; n += 2) {
            auto paren = scd_d0_paren(n);
            if (scd_d0_marker(n) != paren || scd_from_lexical(n, std::vector<int>(static_cast<std::size_t>(n), 0)) != paren)
                out.fail("D0 constructions differ at n=" + std::to_string(n));
            if (scd_d1(n) != scd_from_lexical(n, std::vector<int>(static_cast<std::size_t>(n), 1)))
                out.fail("D1 constructions differ at n=" + std::to_string(n));
        }
        // paths, E, traversal and six-cycle suites
        for (int n = 1; n <= 7; ++n) {
            auto rep = middle4_checks(n);
            if (!rep.ok()) out.fail("n=" + std::to_string(n) + ":\n" + rep.to_text());
            MiddleFourFactor f = build_middle4_factor(n);
            for (auto& v : level_sets(build_paths(n)).first)
                if (bits(next_first_vertex(f, v).next) != oracle::next_first(bits(v))) out.fail("traversal formula");
        }
    });

    return failures == 0 ? 0 : 1;
}
