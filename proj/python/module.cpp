#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "symchain/factor.hpp"
#include "symchain/kinds.hpp"
#include "symchain/middle4.hpp"
#include "symchain/necklace.hpp"

namespace py = pybind11;
using namespace symchain;

namespace {

using Chains = std::vector<std::vector<std::string>>;

Chains to_py(const std::vector<std::vector<Vertex>>& chains) {
    Chains out;
    for (const auto& c : chains) {
        std::vector<std::string> row;
        for (const auto& v : c) row.push_back(v.to_string());
        out.push_back(std::move(row));
    }
    return out;
}

ChainDecomposition from_py(const Chains& chains) {
    std::vector<Chain> cs;
    int n = -1;
    for (const auto& row : chains) {
        Chain c;
        for (const auto& s : row) {
            c.push_back(Vertex::from_string(s));
            if (n < 0) n = c.back().length();
            if (c.back().length() != n) throw std::invalid_argument("mixed vertex lengths");
        }
        cs.push_back(std::move(c));
    }
    if (n < 0) throw std::invalid_argument("empty decomposition");
    return ChainDecomposition(n, std::move(cs));
}

std::pair<ChainDecomposition, ChainDecomposition> pair_for(int n, const std::string& scds) {
    std::string spec = scds == "product" ? "product:d0,product:d0c" : scds;
    auto comma = spec.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("scds must be 'a,b' or 'product'");
    return {scd_by_kind(spec.substr(0, comma), 2 * n + 1), scd_by_kind(spec.substr(comma + 1), 2 * n + 1)};
}

std::optional<std::string> lex(bool up, int n, int k, int i, const std::string& x) {
    auto r = up ? lex_up({n, k, i}, Vertex::from_string(x)) : lex_down({n, k, i}, Vertex::from_string(x));
    if (!r) return std::nullopt;
    return r->to_string();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "C++ core of symchain";
    py::register_exception<SearchBudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    m.def("scd", [](const std::string& kind, int n) { return to_py(scd_by_kind(kind, n).chains()); },
          py::arg("kind"), py::arg("n"), "Chains of an SCD of Q_n, each bottom-up, as bitstrings.");
    m.def("verify_scd",
          [](const Chains& chains) {
              std::vector<std::tuple<std::string, bool, std::string>> out;
              for (const auto& c : verify_scd(from_py(chains)).checks) out.emplace_back(c.name, c.passed, c.witness);
              return out;
          },
          py::arg("chains"), "List of (check, passed, witness).");
    m.def("edge_disjoint", [](const Chains& a, const Chains& b) { return edge_disjoint(from_py(a), from_py(b)); });
    m.def("lex_up", [](int n, int k, int i, const std::string& x) { return lex(true, n, k, i, x); },
          py::arg("n"), py::arg("k"), py::arg("i"), py::arg("x"));
    m.def("lex_down", [](int n, int k, int i, const std::string& y) { return lex(false, n, k, i, y); },
          py::arg("n"), py::arg("k"), py::arg("i"), py::arg("y"));
    m.def("factor_cycles",
          [](int n, int ell, const std::string& scds) {
              auto [a, b] = pair_for(n, scds);
              return to_py(build_factor(a, b, ell).cycles);
          },
          py::arg("n"), py::arg("ell"), py::arg("scds") = "d0,d0c");
    m.def("factor_census",
          [](int n, int ell, const std::string& scds) {
              auto [a, b] = pair_for(n, scds);
              auto c = factor_census(build_factor(a, b, ell));
              return py::make_tuple(c.cycle_count, c.lengths);
          },
          py::arg("n"), py::arg("ell"), py::arg("scds") = "d0,d0c", "(cycle count, sorted cycle lengths)");
    m.def("middle4_cycle_count", [](int n) { return build_middle4_factor(n).cycles.size(); });
    m.def("rho_orbit_count", [](int n) { return rho_orbits(n).count; });
    m.def("trivalent_tree_count", &trivalent_tree_count);
    m.def("hamilton_middle4",
          [](int n) {
              std::vector<std::string> out;
              for (const auto& v : hamilton_middle4(n).cycle) out.push_back(v.to_string());
              return out;
          },
          py::arg("n"));
    m.def("verify_middle4_cycle",
          [](int n, const std::vector<std::string>& cycle) {
              std::vector<Vertex> vs;
              for (const auto& s : cycle) vs.push_back(Vertex::from_string(s));
              return verify_middle4_cycle(n, vs).ok();
          },
          py::arg("n"), py::arg("cycle"));
    m.def("necklace_search",
          [](int n, int k, std::uint64_t budget) {
              NecklaceGraph g(n);
              auto r = search_necklace_scds(g, k, budget);
              const char* status = r.status == SearchStatus::Found        ? "found"
                                   : r.status == SearchStatus::Impossible ? "impossible"
                                                                          : "budget exceeded";
              std::vector<Chains> lifts;
              if (r.status == SearchStatus::Found)
                  for (const auto& d : lift_family(g, r.scds)) lifts.push_back(to_py(d.chains()));
              return py::make_tuple(status, lifts);
          },
          py::arg("n"), py::arg("k"), py::arg("budget") = kDefaultSearchBudget,
          "(status, lifted SCDs of Q_n) with status 'found', 'impossible' or 'budget exceeded'.");
}
