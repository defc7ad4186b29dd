#include "chainlat/report.hpp"

#include "chainlat/battery.hpp"
#include "chainlat/chains.hpp"
#include "chainlat/errors.hpp"
#include "chainlat/hilbert.hpp"
#include "chainlat/sorting.hpp"
#include "chainlat/toric.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

namespace chainlat {

namespace {

std::string monomial_text(const DistLattice& L, const Monomial& m) {
    if (m.word.empty()) return "1";
    std::string out;
    for (int v : m.word) out += L.label(v);
    return out;
}

std::string tmono_text(const TMono& t) {
    if (t.empty()) return "1";
    std::string out;
    for (int i : t) out += "T" + std::to_string(i + 1);
    return out;
}

Json tmono_json(const TMono& t) {
    Json a = Json::array();
    for (int i : t) a.push_back(i + 1);
    return a;
}

Json big_json(const BigInt& x) {
    if (x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

} // namespace

Json lattice_report(const DistLattice& L) {
    Json rep;
    const bool planar = L.is_planar();
    std::vector<std::pair<int, int>> coords;
    std::vector<std::pair<int, int>> cell_rc;
    if (planar) {
        const auto g = grid_embedding(L);
        coords = g.coord;
        cell_rc = g.cell_rc;
    }
    rep["elements"] = Json::array();
    for (int i = 0; i < L.size(); ++i) {
        Json e;
        e["label"] = L.label(i);
        e["ideal"] = L.ideal_names(i);
        e["rank"] = L.rank(i);
        if (planar) e["coord"] = {coords[i].first, coords[i].second};
        rep["elements"].push_back(std::move(e));
    }
    rep["covers"] = Json::array();
    for (auto [u, v] : L.covers()) rep["covers"].push_back({u, v});
    rep["planar"] = planar;
    if (planar)
        rep["cells"] = static_cast<int>(cell_rc.size());
    else
        rep["cells"] = nullptr;
    return rep;
}

std::string lattice_dot(const DistLattice& L) {
    std::ostringstream out;
    out << "digraph lattice {\n  rankdir=BT;\n";
    for (int i = 0; i < L.size(); ++i) {
        out << "  " << L.label(i) << " [label=\"" << L.label(i) << " = {";
        const auto names = L.ideal_names(i);
        for (std::size_t k = 0; k < names.size(); ++k)
            out << (k ? "," : "") << names[k];
        out << "}\"];\n";
    }
    for (auto [u, v] : L.covers())
        out << "  " << L.label(u) << " -> " << L.label(v) << ";\n";
    out << "}\n";
    return out.str();
}

Json chains_report(const DistLattice& L, const Budgets& b) {
    const auto chains = maximal_chains(L, b.max_chains);
    Json rep;
    rep["chains"] = Json::array();
    for (const auto& c : chains) {
        Json labels = Json::array();
        for (std::size_t k = 1; k + 1 < c.size(); ++k) labels.push_back(L.label(c[k]));
        rep["chains"].push_back(std::move(labels));
    }
    rep["dim"] = krull_dimension(L, b.max_chains).dim;
    rep["components"] = chain_graph(L).components;
    return rep;
}

Json dim_report(const DistLattice& L, const Budgets& b) {
    const auto k = krull_dimension(L, b.max_chains);
    Json rep;
    rep["dim"] = k.dim;
    rep["formula"] = k.by_formula;
    rep["rank"] = k.by_rank;
    return rep;
}

Json planar_report(const DistLattice& L) {
    Json rep;
    rep["planar"] = L.is_planar();
    rep["width"] = L.source().width();
    if (L.is_planar())
        rep["cells"] = static_cast<int>(grid_embedding(L).cells.size());
    else
        rep["cells"] = nullptr;
    return rep;
}

Json sortable_report(const DistLattice& L, const Budgets& b) {
    const auto chains = maximal_chains(L, b.max_chains);
    const auto monos = chain_monomials(chains);
    const auto ctx = L.is_planar() ? SortContext::grid(grid_embedding(L))
                                   : SortContext::identity(L.size());
    const auto result = is_sortable_set(monos, ctx);

    Json rep;
    rep["sortable"] = result.sortable;
    rep["generators"] = Json::array();
    for (const auto& m : monos) rep["generators"].push_back(monomial_text(L, m));
    if (result.sortable) {
        rep["relations"] = Json::array();
        for (const auto& rel : sorting_relations(monos, ctx)) {
            Json r;
            r["lhs"] = {rel.lhs.first, rel.lhs.second};
            r["rhs"] = {rel.rhs.first, rel.rhs.second};
            rep["relations"].push_back(std::move(r));
        }
    } else {
        Json w;
        w["pair"] = {result.witness->i + 1, result.witness->j + 1};
        w["sorts_to"] = {monomial_text(L, result.witness->v1),
                         monomial_text(L, result.witness->v2)};
        rep["witness"] = std::move(w);
    }
    return rep;
}

Json hibi_sort_report(const Poset& p, const Budgets& b) {
    const auto L = DistLattice::birkhoff(p, b.max_ideals);
    const auto sys = hibi_sort_monomials(p, L);
    const auto verified = verify_hibi_sorting(p, b.max_ideals);

    Json rep;
    rep["verified"] = verified.ok;
    if (!verified.ok) rep["failure"] = verified.failure;
    rep["blocks"] = sys.block_sizes;
    rep["monomials"] = Json::array();
    for (int e = 0; e < L.size(); ++e) {
        Json m;
        m["label"] = L.label(e);
        std::string text;
        for (int v : sys.monomials[e].word) text += (text.empty() ? "" : " ") + sys.var_names[v];
        m["monomial"] = text;
        rep["monomials"].push_back(std::move(m));
    }
    rep["relations"] = Json::array();
    for (const auto& rel : sorting_relations(sys.monomials, sys.ctx)) {
        Json r;
        r["lhs"] = {rel.lhs.first - 1, rel.lhs.second - 1}; // lattice element ids
        r["rhs"] = {rel.rhs.first - 1, rel.rhs.second - 1};
        rep["relations"].push_back(std::move(r));
    }
    return rep;
}

Json hilbert_report(const DistLattice& L, const Budgets& b, int oracle_k, bool gorenstein) {
    const auto hs = hilbert_series(L, b.max_syt_cells);
    Json rep;
    rep["h"] = Json::array();
    for (const auto& c : hs.h) rep["h"].push_back(big_json(c));
    rep["denom_power"] = hs.denom_power;
    const auto check = is_gorenstein(L, b.max_syt_cells);
    rep["gorenstein"] = check.gorenstein;
    rep["unimodal"] = unimodality_report(hs.h).unimodal;
    if (oracle_k > 0) {
        const auto cl = chain_lattice(L, grid_embedding(L), b.max_chains);
        Json oracle;
        for (int k = 1; k <= oracle_k; ++k) {
            Json entry;
            entry["series"] = big_json(hs.coefficient(k));
            entry["paths"] = big_json(nontraversing_count(cl, k));
            oracle[std::to_string(k)] = std::move(entry);
        }
        rep["oracle"] = std::move(oracle);
    }
    if (gorenstein) rep["h_symmetric"] = check.h_symmetric;
    return rep;
}

Json toric_report(const DistLattice& L, const Budgets& b, int max_degree, bool certify_gb,
                  bool squarefree_report) {
    const auto basis = chain_minimal_generators(L, max_degree, b.max_chains,
                                                b.max_fiber_nodes);
    Json rep;
    rep["degrees"] = Json::object();
    for (const auto& [d, bins] : basis.by_degree)
        rep["degrees"][std::to_string(d)] = bins.size();
    rep["generators"] = Json::array();
    for (const auto& [d, bins] : basis.by_degree)
        for (const auto& bin : bins) {
            Json g;
            g["plus"] = tmono_json(bin.plus);
            g["minus"] = tmono_json(bin.minus);
            rep["generators"].push_back(std::move(g));
        }
    rep["truncated"] = basis.truncated;
    rep["quadratic"] = is_quadratically_generated(basis);

    if (certify_gb || squarefree_report) {
        std::vector<Binomial> bins;
        if (L.is_planar()) {
            const auto g = grid_embedding(L);
            const auto monos = chain_monomials(maximal_chains(L, b.max_chains));
            for (const auto& rel : sorting_relations(monos, SortContext::grid(g)))
                bins.push_back({{rel.lhs.first - 1, rel.lhs.second - 1},
                                {rel.rhs.first - 1, rel.rhs.second - 1}});
        } else {
            for (const auto& [d, dbins] : basis.by_degree)
                bins.insert(bins.end(), dbins.begin(), dbins.end());
        }
        const int m = static_cast<int>(maximal_chains(L, b.max_chains).size());
        const auto gb = buchberger(bins, m, 100000);
        if (certify_gb) {
            Json c;
            c["input_was_groebner"] = gb.input_was_groebner;
            c["input_was_reduced"] = gb.input_was_reduced;
            c["basis_size"] = gb.basis.size();
            rep["certify"] = std::move(c);
        }
        if (squarefree_report)
            rep["squarefree_initial_ideal"] = initial_ideal_squarefree(gb.basis);
    }
    return rep;
}

Json cycle_witness_report(const DistLattice& L, const Budgets& b, int antichain_size,
                          bool search_longer, int search_rank) {
    const Poset& p = L.source();
    const int n = antichain_size > 0 ? antichain_size : p.width();
    const auto w = build_cycle_witness(L, find_antichain(p, n), b.max_chains);
    const auto v = verify_witness(L, w, b.max_chains, b.max_fiber_nodes);

    Json rep;
    rep["antichain"] = Json::array();
    for (int x : w.antichain) rep["antichain"].push_back(p.name(x));
    rep["rank"] = w.rank_a;
    rep["cycle"] = Json::object();
    rep["cycle"]["low"] = Json::array();
    for (int x : w.low) rep["cycle"]["low"].push_back(L.label(x));
    rep["cycle"]["high"] = Json::array();
    for (int x : w.high) rep["cycle"]["high"].push_back(L.label(x));
    auto chain_labels = [&](const Chain& c) {
        Json a = Json::array();
        for (std::size_t k = 1; k + 1 < c.size(); ++k) a.push_back(L.label(c[k]));
        return a;
    };
    rep["chains"] = Json::array();
    for (const auto& c : w.chains_main) rep["chains"].push_back(chain_labels(c));
    rep["chains_hat"] = Json::array();
    for (const auto& c : w.chains_hat) rep["chains_hat"].push_back(chain_labels(c));
    rep["binomial"] = Json::object();
    rep["binomial"]["plus"] = tmono_json(w.binomial.plus);
    rep["binomial"]["minus"] = tmono_json(w.binomial.minus);
    rep["degree"] = w.binomial.degree();
    rep["in_kernel"] = v.in_kernel;
    rep["minimal"] = v.minimal;
    rep["fiber_size"] = v.fiber_size;

    if (search_longer) {
        Json found = Json::array();
        for (int s = n + 1; s <= n + 2; ++s) {
            for (int a = 1; a + 1 < L.top_rank(); ++a) {
                if (search_rank > 0 && a != search_rank) continue;
                auto cyc = find_induced_cycle(L, a, s, b.max_fiber_nodes);
                if (!cyc) continue;
                Json entry;
                entry["rank"] = a;
                entry["length"] = 2 * s;
                entry["low"] = Json::array();
                for (int x : cyc->first) entry["low"].push_back(L.label(x));
                entry["high"] = Json::array();
                for (int x : cyc->second) entry["high"].push_back(L.label(x));
                found.push_back(std::move(entry));
                break;
            }
        }
        rep["longer_cycles"] = std::move(found);
    }
    return rep;
}

Json corpus_report(int max_size, const Budgets& b) {
    const auto corpus = poset_corpus(max_size);
    const auto results = run_battery(corpus, b);

    Json rep;
    rep["max_size"] = max_size;
    rep["posets"] = corpus.size();
    rep["checks"] = Json::array();
    bool all_pass = true;
    for (const auto& r : results) {
        Json c;
        c["name"] = r.name;
        c["checked"] = r.checked;
        c["pass"] = r.pass();
        if (!r.failures.empty()) c["failures"] = r.failures;
        if (!r.warnings.empty()) c["warnings"] = r.warnings;
        rep["checks"].push_back(std::move(c));
        all_pass = all_pass && r.pass();
    }
    rep["pass"] = all_pass;
    return rep;
}

namespace {

void render_table(std::ostringstream& out, const Json& checks) {
    for (const auto& c : checks) {
        out << (c["pass"].get<bool>() ? "[PASS] " : "[FAIL] ")
            << c["name"].get<std::string>() << " (" << c["checked"].get<std::size_t>()
            << " checked)\n";
        if (c.contains("failures"))
            for (const auto& f : c["failures"])
                out << "       " << f.get<std::string>() << "\n";
        if (c.contains("warnings"))
            for (const auto& w : c["warnings"])
                out << "  warn " << w.get<std::string>() << "\n";
    }
}

} // namespace

std::string render_text(const Json& rep, const std::string& command) {
    std::ostringstream out;
    if (command == "lattice") {
        out << "lattice on " << rep["elements"].size() << " elements, planar = "
            << (rep["planar"].get<bool>() ? "yes" : "no") << "\n";
        for (const auto& e : rep["elements"]) {
            out << "  " << e["label"].get<std::string>() << " = {";
            bool first = true;
            for (const auto& n : e["ideal"]) {
                out << (first ? "" : ",") << n.get<std::string>();
                first = false;
            }
            out << "} rank " << e["rank"].get<int>();
            if (e.contains("coord"))
                out << " at (" << e["coord"][0].get<int>() << ","
                    << e["coord"][1].get<int>() << ")";
            out << "\n";
        }
        if (!rep["cells"].is_null()) out << "cells: " << rep["cells"].get<int>() << "\n";
    } else if (command == "chains") {
        out << "maximal chains (" << rep["chains"].size() << "):\n";
        for (const auto& c : rep["chains"]) {
            out << "  ";
            for (const auto& l : c) out << l.get<std::string>();
            out << "\n";
        }
        out << "Krull dimension " << rep["dim"].get<int>() << ", graph components "
            << rep["components"].get<int>() << "\n";
    } else if (command == "dim") {
        out << "dim = " << rep["dim"].get<int>() << " (|L|-|P| = "
            << rep["formula"].get<int>() << ", exponent rank = "
            << rep["rank"].get<int>() << ")\n";
    } else if (command == "planar") {
        out << "planar = " << (rep["planar"].get<bool>() ? "yes" : "no") << " (width "
            << rep["width"].get<int>() << ")\n";
    } else if (command == "sortable") {
        out << "sortable = " << (rep["sortable"].get<bool>() ? "yes" : "no") << "\n";
        if (rep.contains("relations"))
            for (const auto& r : rep["relations"])
                out << "  T" << r["lhs"][0].get<int>() << "T" << r["lhs"][1].get<int>()
                    << " - T" << r["rhs"][0].get<int>() << "T" << r["rhs"][1].get<int>()
                    << "\n";
        if (rep.contains("witness"))
            out << "  witness pair (" << rep["witness"]["pair"][0].get<int>() << ","
                << rep["witness"]["pair"][1].get<int>() << ") sorts to "
                << rep["witness"]["sorts_to"][0].get<std::string>() << ", "
                << rep["witness"]["sorts_to"][1].get<std::string>() << "\n";
    } else if (command == "hilbert") {
        out << "h = (";
        for (std::size_t i = 0; i < rep["h"].size(); ++i)
            out << (i ? "," : "") << rep["h"][i].dump();
        out << ") / (1-z)^" << rep["denom_power"].get<int>() << "\n";
        out << "gorenstein = " << (rep["gorenstein"].get<bool>() ? "yes" : "no")
            << ", unimodal = " << (rep["unimodal"].get<bool>() ? "yes" : "no") << "\n";
        if (rep.contains("oracle"))
            for (const auto& [k, entry] : rep["oracle"].items())
                out << "  z^" << k << ": series " << entry["series"].dump() << ", paths "
                    << entry["paths"].dump() << "\n";
    } else if (command == "toric") {
        out << "minimal generators by degree:";
        if (rep["degrees"].empty()) out << " none";
        for (const auto& [d, n] : rep["degrees"].items())
            out << " " << d << ":" << n.dump();
        out << "\n";
        for (const auto& g : rep["generators"]) {
            TMono plus, minus;
            for (const auto& i : g["plus"]) plus.push_back(i.get<int>() - 1);
            for (const auto& i : g["minus"]) minus.push_back(i.get<int>() - 1);
            out << "  " << tmono_text(plus) << " - " << tmono_text(minus) << "\n";
        }
        out << "truncated = " << (rep["truncated"].get<bool>() ? "yes" : "no")
            << ", quadratic = " << (rep["quadratic"].get<bool>() ? "yes" : "no") << "\n";
        if (rep.contains("certify"))
            out << "input was reduced Groebner basis = "
                << (rep["certify"]["input_was_reduced"].get<bool>() ? "yes" : "no")
                << "\n";
        if (rep.contains("squarefree_initial_ideal"))
            out << "squarefree initial ideal = "
                << (rep["squarefree_initial_ideal"].get<bool>() ? "yes" : "no") << "\n";
    } else if (command == "cycle-witness") {
        out << "antichain {";
        bool first = true;
        for (const auto& n : rep["antichain"]) {
            out << (first ? "" : ",") << n.get<std::string>();
            first = false;
        }
        out << "} at rank " << rep["rank"].get<int>() << ", cycle length "
            << 2 * rep["degree"].get<int>() << "\n";
        out << "degree-" << rep["degree"].get<int>() << " binomial: in kernel = "
            << (rep["in_kernel"].get<bool>() ? "yes" : "no") << ", minimal = "
            << (rep["minimal"].get<bool>() ? "yes" : "no") << " (fiber size "
            << rep["fiber_size"].get<std::uint64_t>() << ")\n";
    } else if (command == "hibi-sort") {
        out << "verified = " << (rep["verified"].get<bool>() ? "yes" : "no") << "\n";
        for (const auto& m : rep["monomials"])
            out << "  " << m["label"].get<std::string>() << " -> "
                << m["monomial"].get<std::string>() << "\n";
        out << rep["relations"].size() << " sorting relations\n";
    } else if (command == "corpus") {
        out << "corpus of " << rep["posets"].get<std::size_t>() << " posets (size <= "
            << rep["max_size"].get<int>() << ")\n";
        render_table(out, rep["checks"]);
        out << (rep["pass"].get<bool>() ? "all checks passed" : "CHECKS FAILED") << "\n";
    } else {
        out << rep.dump(2) << "\n";
    }
    return out.str();
}

} // namespace chainlat
