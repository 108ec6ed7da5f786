#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "symchain/factor.hpp"
#include "symchain/kinds.hpp"
#include "symchain/middle4.hpp"
#include "symchain/necklace.hpp"

using namespace symchain;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

bool g_json = false;

json report_json(const VerificationReport& r) {
    json a = json::array();
    for (const auto& c : r.checks) a.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
    return a;
}

json chains_json(const std::vector<std::vector<Vertex>>& chains) {
    json a = json::array();
    for (const auto& c : chains) {
        json row = json::array();
        for (const auto& v : c) row.push_back(v.to_string());
        a.push_back(std::move(row));
    }
    return a;
}

std::string line_of(const std::vector<Vertex>& vs) {
    std::string s;
    for (const auto& v : vs) {
        if (!s.empty()) s += ' ';
        s += v.to_string();
    }
    return s;
}

std::string join(const std::vector<std::size_t>& xs) {
    std::string s;
    for (auto x : xs) {
        if (!s.empty()) s += ',';
        s += std::to_string(x);
    }
    return s;
}

void emit_json(const std::string& command, json params, json results) {
    std::cout << json{{"command", command}, {"params", std::move(params)}, {"results", std::move(results)}}.dump(2) << "\n";
}

// ---- scd ----

struct ScdArgs {
    std::string kind;
    int n = 0;
    bool verify = false;
    std::string out;
    std::uint64_t budget = kDefaultSearchBudget;
};

int run_scd(const ScdArgs& a) {
    auto d = scd_by_kind(a.kind, a.n, a.budget);
    std::string text = to_text(d);
    VerificationReport rep;
    if (a.verify) rep = verify_scd(d);
    if (!a.out.empty()) {
        std::ofstream f(a.out);
        if (!f) throw std::invalid_argument("cannot write " + a.out);
        f << text;
    }
    if (g_json) {
        json res{{"chains", d.size()}};
        if (a.out.empty()) res["scd"] = chains_json(d.chains());
        if (a.verify) res["report"] = report_json(rep), res["ok"] = rep.ok();
        emit_json("scd", {{"kind", a.kind}, {"n", a.n}}, res);
    } else {
        if (a.out.empty()) std::cout << text;
        if (a.verify) std::cout << "# " << d.size() << " chains\n" << rep.to_text();
    }
    return a.verify && !rep.ok() ? kVerifyFailed : kOk;
}

// ---- disjoint ----

int run_disjoint(int n, const std::vector<std::string>& kinds, std::uint64_t budget) {
    if (kinds.size() < 2) throw std::invalid_argument("need at least two kinds");
    std::vector<ChainDecomposition> ds;
    std::vector<bool> valid;
    for (const auto& k : kinds) {
        ds.push_back(scd_by_kind(k, n, budget));
        valid.push_back(verify_scd(ds.back()).ok());
    }
    const std::size_t m = ds.size();
    std::vector<std::vector<int>> mat(m, std::vector<int>(m, -1));
    bool all = true;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            bool d = edge_disjoint(ds[i], ds[j]);
            mat[i][j] = mat[j][i] = d ? 1 : 0;
            all = all && d;
        }
    bool all_valid = std::all_of(valid.begin(), valid.end(), [](bool b) { return b; });
    if (g_json) {
        emit_json("disjoint", {{"n", n}, {"kinds", kinds}},
                  {{"matrix", mat}, {"valid", valid}, {"all_disjoint", all}});
    } else {
        std::size_t w = 4;
        for (const auto& k : kinds) w = std::max(w, k.size() + 1);
        auto pad = [&](const std::string& s) { return s + std::string(w - s.size(), ' '); };
        std::cout << pad("");
        for (const auto& k : kinds) std::cout << pad(k);
        std::cout << "\n";
        for (std::size_t i = 0; i < m; ++i) {
            std::cout << pad(kinds[i]);
            for (std::size_t j = 0; j < m; ++j) std::cout << pad(i == j ? "-" : mat[i][j] ? "yes" : "no");
            std::cout << "\n";
        }
        for (std::size_t i = 0; i < m; ++i)
            if (!valid[i]) std::cout << kinds[i] << " is not a valid SCD\n";
        std::cout << (all ? "all disjoint" : "not disjoint") << "\n";
    }
    return all && all_valid ? kOk : kVerifyFailed;
}

// ---- factor ----

struct FactorArgs {
    int n = 0;
    int ell = 1;
    std::string scds = "d0,d0c";
    bool emit = false;
    bool table = false;
    std::uint64_t budget = kDefaultSearchBudget;
};

std::pair<ChainDecomposition, ChainDecomposition> factor_pair(const FactorArgs& a) {
    std::string spec = a.scds == "product" ? "product:d0,product:d0c" : a.scds;
    auto comma = spec.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--scds needs two kinds separated by a comma, or 'product'");
    const int dim = 2 * a.n + 1;
    return {scd_by_kind(spec.substr(0, comma), dim, a.budget), scd_by_kind(spec.substr(comma + 1), dim, a.budget)};
}

int run_factor(const FactorArgs& a) {
    if (a.n < 1) throw std::invalid_argument("n must be >= 1");
    auto [d1, d2] = factor_pair(a);
    if (a.table) {
        std::vector<std::size_t> row;
        for (int ell = 1; ell <= a.n + 1; ++ell) row.push_back(build_factor(d1, d2, ell).cycles.size());
        if (g_json) {
            emit_json("factor", {{"n", a.n}, {"scds", a.scds}, {"mode", "table"}}, {{"counts", row}});
        } else {
            std::cout << a.n;
            for (auto c : row) std::cout << ' ' << c;
            std::cout << "\n";
        }
        return kOk;
    }
    if (a.ell < 1 || a.ell > a.n + 1) throw std::invalid_argument("--ell must be in 1..n+1");
    CycleFactor f = build_factor(d1, d2, a.ell);
    VerificationReport rep = verify_factor(f);
    if (!rep.ok()) {
        std::cerr << rep.to_text();
        return kVerifyFailed;
    }
    if (a.emit) {
        if (g_json)
            emit_json("factor", {{"n", a.n}, {"ell", a.ell}, {"scds", a.scds}, {"mode", "emit"}}, {{"cycles", chains_json(f.cycles)}});
        else
            for (const auto& c : f.cycles) std::cout << line_of(c) << "\n";
        return kOk;
    }
    Census c = factor_census(f);
    if (g_json) {
        json hist = json::object();
        for (auto [len, mult] : c.histogram) hist[std::to_string(len)] = mult;
        emit_json("factor", {{"n", a.n}, {"ell", a.ell}, {"scds", a.scds}, {"mode", "census"}},
                  {{"cycle_count", c.cycle_count}, {"histogram", hist}});
    } else {
        std::cout << c.cycle_count << " cycles: " << join(c.lengths) << "\n";
        std::cout << "histogram:";
        for (auto [len, mult] : c.histogram) std::cout << ' ' << len << 'x' << mult;
        std::cout << "\n";
    }
    return kOk;
}

// ---- middle4 ----

int run_middle4(int n, bool emit, bool check, bool orbits, bool close) {
    if (n < 1 || n > 30) throw std::invalid_argument("n must be in 1..30");
    if (int(emit) + int(check) + int(orbits) != 1) throw std::invalid_argument("choose exactly one of --emit, --check, --orbits");
    if (orbits) {
        RhoOrbits o = rho_orbits(n);
        std::vector<std::size_t> sizes(static_cast<std::size_t>(o.count), 0);
        for (int id : o.orbit_of) ++sizes[static_cast<std::size_t>(id)];
        std::sort(sizes.begin(), sizes.end());
        if (g_json)
            emit_json("middle4", {{"n", n}, {"mode", "orbits"}}, {{"orbits", o.count}, {"sizes", sizes}});
        else
            std::cout << o.count << "\nsizes: " << join(sizes) << "\n";
        return kOk;
    }
    if (check) {
        VerificationReport rep = middle4_checks(n);
        HamiltonResult h = hamilton_middle4(n);
        for (auto& c : verify_middle4_cycle(n, h.cycle).checks) rep.add("hamilton " + c.name, c.passed, c.witness);
        if (g_json)
            emit_json("middle4", {{"n", n}, {"mode", "check"}}, {{"report", report_json(rep)}, {"ok", rep.ok()}});
        else
            std::cout << rep.to_text();
        return rep.ok() ? kOk : kVerifyFailed;
    }
    HamiltonResult h = hamilton_middle4(n);
    VerificationReport rep = verify_middle4_cycle(n, h.cycle);
    if (!rep.ok()) {
        std::cerr << rep.to_text();
        return kVerifyFailed;
    }
    if (g_json) {
        json cyc = json::array();
        for (const auto& v : h.cycle) cyc.push_back(v.to_string());
        emit_json("middle4", {{"n", n}, {"mode", "emit"}},
                  {{"length", h.cycle.size()}, {"factor_cycles", h.factor_cycles}, {"six_cycles", h.six_cycles_used}, {"cycle", cyc}});
    } else {
        for (const auto& v : h.cycle) std::cout << v.to_string() << "\n";
        if (close) std::cout << h.cycle.front().to_string() << "\n";
    }
    return kOk;
}

// ---- necklace-search ----

int run_necklace_search(int n, int k, std::uint64_t budget, const std::string& out) {
    NecklaceGraph g(n);
    SearchResult r = search_necklace_scds(g, k, budget);
    const char* status = r.status == SearchStatus::Found ? "found" : r.status == SearchStatus::Impossible ? "impossible" : "budget exceeded";
    json files = json::array();
    bool lifts_ok = true;
    if (r.status == SearchStatus::Found) {
        auto lifts = lift_family(g, r.scds);
        for (std::size_t i = 0; i < lifts.size(); ++i) {
            lifts_ok = lifts_ok && verify_scd(lifts[i]).ok();
            for (std::size_t j = 0; j < i; ++j) lifts_ok = lifts_ok && edge_disjoint(lifts[i], lifts[j]);
        }
        if (!out.empty() && lifts_ok) {
            std::filesystem::create_directories(out);
            for (std::size_t i = 0; i < lifts.size(); ++i) {
                std::string stem = "n" + std::to_string(n) + "_k" + std::to_string(k) + "_" + std::to_string(i + 1) + ".txt";
                std::string nf = (std::filesystem::path(out) / ("necklace_" + stem)).string();
                std::string qf = (std::filesystem::path(out) / ("lift_" + stem)).string();
                std::ofstream(nf) << necklace_scd_to_text(g, r.scds[i]);
                std::ofstream(qf) << to_text(lifts[i]);
                files.push_back(nf);
                files.push_back(qf);
            }
        }
    }
    if (g_json) {
        json res{{"status", status}, {"nodes_explored", r.nodes_explored}, {"files", files}};
        if (r.status == SearchStatus::Found) {
            json scds = json::array();
            for (const auto& d : r.scds) scds.push_back(necklace_scd_to_text(g, d));
            res["scds"] = scds;
            res["lifts_verified"] = lifts_ok;
        }
        emit_json("necklace-search", {{"n", n}, {"k", k}, {"budget", budget}}, res);
    } else {
        std::cout << status << " (" << r.nodes_explored << " search nodes)\n";
        if (r.status == SearchStatus::Found) {
            for (std::size_t i = 0; i < r.scds.size(); ++i)
                std::cout << "# scd " << i + 1 << "\n" << necklace_scd_to_text(g, r.scds[i]);
            std::cout << (lifts_ok ? "lifts verified\n" : "lift verification failed\n");
            for (const auto& f : files) std::cout << "wrote " << f.get<std::string>() << "\n";
        }
    }
    switch (r.status) {
        case SearchStatus::Found: return lifts_ok ? kOk : kVerifyFailed;
        case SearchStatus::Impossible: return kVerifyFailed;
        case SearchStatus::BudgetExceeded: return kBudget;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric chain decompositions, cycle factors and middle-level Gray codes"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "Structured output");

    ScdArgs sa;
    auto* scd = app.add_subcommand("scd", "Build an SCD of Q_n");
    scd->add_option("kind", sa.kind, "d0, d0c, d1, d1c, lex:<list>, product:<d0|d0c|four.i>, necklace:<i>")->required();
    scd->add_option("n", sa.n, "Cube dimension")->required();
    scd->add_flag("--verify", sa.verify, "Append the verification report");
    scd->add_option("--out", sa.out, "Write the SCD to a file");
    scd->add_option("--budget", sa.budget, "Necklace search budget");

    int dn = 0;
    std::vector<std::string> dkinds;
    std::uint64_t dbudget = kDefaultSearchBudget;
    auto* dis = app.add_subcommand("disjoint", "Pairwise edge-disjointness of SCDs of Q_n");
    dis->add_option("n", dn, "Cube dimension")->required();
    dis->add_option("kinds", dkinds, "SCD kinds")->required();
    dis->add_option("--budget", dbudget, "Necklace search budget");

    FactorArgs fa;
    auto* fac = app.add_subcommand("factor", "Cycle factor of the middle 2*ell levels of Q_{2n+1}");
    fac->add_option("n", fa.n, "Q_{2n+1}")->required();
    fac->add_option("--ell", fa.ell, "Half the number of levels");
    fac->add_option("--scds", fa.scds, "Two kinds 'a,b' or 'product'");
    auto* census = fac->add_flag("--census", "Cycle count and lengths (default)");
    auto* femit = fac->add_flag("--emit", fa.emit, "Print every cycle");
    auto* table = fac->add_flag("--table", fa.table, "Counts for ell = 1..n+1 on one row");
    census->excludes(femit)->excludes(table);
    femit->excludes(table);
    fac->add_option("--budget", fa.budget, "Necklace search budget");

    int mn = 0;
    bool memit = false, mcheck = false, morbits = false, mclose = false;
    auto* m4 = app.add_subcommand("middle4", "Hamilton cycle through the middle four levels of Q_{2n+1}");
    m4->add_option("n", mn, "Q_{2n+1}")->required();
    m4->add_flag("--emit", memit, "Print the Hamilton cycle");
    m4->add_flag("--check", mcheck, "Run every structural check");
    m4->add_flag("--orbits", morbits, "Census of the rho-orbits");
    m4->add_flag("--close", mclose, "Repeat the first vertex at the end (--emit)");

    int nn = 0, nk = 0;
    std::uint64_t nbudget = kDefaultSearchBudget;
    std::string nout;
    auto* ns = app.add_subcommand("necklace-search", "Search for k edge-disjoint SCDs of the necklace graph N_n");
    ns->add_option("n", nn, "Prime n")->required();
    ns->add_option("k", nk, "Number of SCDs")->required();
    ns->add_option("--budget", nbudget, "Maximum number of search nodes");
    ns->add_option("--out", nout, "Directory for fixture files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*scd) return run_scd(sa);
        if (*dis) return run_disjoint(dn, dkinds, dbudget);
        if (*fac) return run_factor(fa);
        if (*m4) return run_middle4(mn, memit, mcheck, morbits, mclose);
        if (*ns) return run_necklace_search(nn, nk, nbudget, nout);
    } catch (const SearchBudgetExceeded& e) {
        std::cerr << "symchain: " << e.what() << "\n";
        return kBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "symchain: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
