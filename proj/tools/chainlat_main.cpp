#include "chainlat/errors.hpp"
#include "chainlat/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace chainlat;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void env_override(const char* name, auto& value) {
    if (const char* s = std::getenv(name))
        value = static_cast<std::remove_reference_t<decltype(value)>>(std::stoll(s));
}

Budgets budgets_from_env(Budgets b) {
    env_override("CHAINLAT_BUDGET_MAX_IDEALS", b.max_ideals);
    env_override("CHAINLAT_BUDGET_MAX_CHAINS", b.max_chains);
    env_override("CHAINLAT_BUDGET_MAX_DEGREE", b.max_degree);
    env_override("CHAINLAT_BUDGET_MAX_FIBER_NODES", b.max_fiber_nodes);
    env_override("CHAINLAT_BUDGET_MAX_SYT_CELLS", b.max_syt_cells);
    return b;
}

struct Options {
    std::string input;
    std::string format = "text";
    Budgets budgets;
    int max_degree = 0; // 0 = use budget default
    int oracle = 0;
    int antichain = 0;
    int search_rank = 0;
    bool certify_gb = false;
    bool squarefree = false;
    bool gorenstein = false;
    bool search_longer = false;
    bool dot = false;
    int corpus_size = 5;
};

void add_common(CLI::App* cmd, Options& opt, bool needs_input = true) {
    if (needs_input)
        cmd->add_option("input", opt.input, "poset file")->required();
    cmd->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--budget-max-ideals", opt.budgets.max_ideals);
    cmd->add_option("--budget-max-chains", opt.budgets.max_chains);
    cmd->add_option("--budget-max-fiber-nodes", opt.budgets.max_fiber_nodes);
    cmd->add_option("--budget-max-syt-cells", opt.budgets.max_syt_cells);
}

void emit(const Json& rep, const Options& opt, const std::string& command) {
    if (opt.format == "json")
        std::cout << rep.dump(2) << "\n";
    else
        std::cout << render_text(rep, command);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chain algebras of finite distributive lattices"};
    app.require_subcommand(1);

    Options opt;
    opt.budgets = budgets_from_env(Budgets{});

    auto* lattice_cmd = app.add_subcommand("lattice", "ideal lattice of a poset");
    add_common(lattice_cmd, opt);
    lattice_cmd->add_flag("--dot", opt.dot, "emit the Hasse diagram as DOT");

    auto* chains_cmd = app.add_subcommand("chains", "maximal chains and dimension");
    add_common(chains_cmd, opt);

    auto* dim_cmd = app.add_subcommand("dim", "Krull dimension, both routes");
    add_common(dim_cmd, opt);

    auto* planar_cmd = app.add_subcommand("planar", "planarity and width");
    add_common(planar_cmd, opt);

    auto* sortable_cmd = app.add_subcommand("sortable", "sortability of chain monomials");
    add_common(sortable_cmd, opt);

    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series of a planar chain algebra");
    add_common(hilbert_cmd, opt);
    hilbert_cmd->add_option("--oracle", opt.oracle, "cross-check coefficients up to degree k");
    hilbert_cmd->add_flag("--gorenstein", opt.gorenstein, "report the symmetry check");

    auto* toric_cmd = app.add_subcommand("toric", "minimal generators of the toric ideal");
    add_common(toric_cmd, opt);
    toric_cmd->add_option("--max-degree", opt.max_degree, "scan bound (default from budget)");
    toric_cmd->add_flag("--certify-gb", opt.certify_gb, "Buchberger certification");
    toric_cmd->add_flag("--squarefree-report", opt.squarefree, "squarefree initial ideal");

    auto* cycle_cmd = app.add_subcommand("cycle-witness", "degree-n witness from an antichain");
    add_common(cycle_cmd, opt);
    cycle_cmd->add_option("-n,--antichain", opt.antichain, "antichain size (default width)");
    cycle_cmd->add_option("--rank", opt.search_rank,
                          "restrict the longer-cycle search to one rank");
    cycle_cmd->add_flag("--search-longer", opt.search_longer, "look for longer induced cycles");

    auto* hibi_cmd = app.add_subcommand("hibi-sort", "sortable realisation of the Hibi ring");
    add_common(hibi_cmd, opt);

    auto* corpus_cmd = app.add_subcommand("corpus", "invariant battery over all small posets");
    add_common(corpus_cmd, opt, false);
    corpus_cmd->add_option("--max-size", opt.corpus_size, "largest poset size (default 5)")
        ->check(CLI::Range(1, 6));

    CLI11_PARSE(app, argc, argv);

    try {
        if (corpus_cmd->parsed()) {
            const Json rep = corpus_report(opt.corpus_size, opt.budgets);
            emit(rep, opt, "corpus");
            return rep["pass"].get<bool>() ? 0 : 1;
        }

        const Poset p = Poset::parse(read_file(opt.input));

        if (hibi_cmd->parsed()) {
            emit(hibi_sort_report(p, opt.budgets), opt, "hibi-sort");
            return 0;
        }

        const DistLattice L = DistLattice::birkhoff(p, opt.budgets.max_ideals);
        if (lattice_cmd->parsed()) {
            if (opt.dot)
                std::cout << lattice_dot(L);
            else
                emit(lattice_report(L), opt, "lattice");
        } else if (chains_cmd->parsed()) {
            emit(chains_report(L, opt.budgets), opt, "chains");
        } else if (dim_cmd->parsed()) {
            emit(dim_report(L, opt.budgets), opt, "dim");
        } else if (planar_cmd->parsed()) {
            emit(planar_report(L), opt, "planar");
        } else if (sortable_cmd->parsed()) {
            emit(sortable_report(L, opt.budgets), opt, "sortable");
        } else if (hilbert_cmd->parsed()) {
            emit(hilbert_report(L, opt.budgets, opt.oracle, opt.gorenstein), opt, "hilbert");
        } else if (toric_cmd->parsed()) {
            const int d = opt.max_degree > 0 ? opt.max_degree : opt.budgets.max_degree;
            emit(toric_report(L, opt.budgets, d, opt.certify_gb, opt.squarefree), opt,
                 "toric");
        } else if (cycle_cmd->parsed()) {
            emit(cycle_witness_report(L, opt.budgets, opt.antichain, opt.search_longer,
                                      opt.search_rank),
                 opt, "cycle-witness");
        }
        return 0;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
