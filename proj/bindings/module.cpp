#include "chainlat/battery.hpp"
#include "chainlat/chains.hpp"
#include "chainlat/errors.hpp"
#include "chainlat/hilbert.hpp"
#include "chainlat/nonplanar.hpp"
#include "chainlat/report.hpp"
#include "chainlat/sorting.hpp"
#include "chainlat/toric.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace chainlat;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
            return out;
        }
        default: return py::none();
    }
}

Budgets make_budgets(std::size_t max_ideals, std::size_t max_chains, int max_degree,
                     std::uint64_t max_fiber_nodes, int max_syt_cells) {
    Budgets b;
    b.max_ideals = max_ideals;
    b.max_chains = max_chains;
    b.max_degree = max_degree;
    b.max_fiber_nodes = max_fiber_nodes;
    b.max_syt_cells = max_syt_cells;
    return b;
}

} // namespace

PYBIND11_MODULE(_chainlat, m) {
    m.doc() = "chain algebras of finite distributive lattices";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<NonPlanarError>(m, "NonPlanarError", PyExc_ValueError);
    py::register_exception<WidthError>(m, "WidthError", PyExc_ValueError);

    py::class_<Poset>(m, "Poset")
        .def_static("parse", &Poset::parse, py::arg("text"))
        .def_static("chain", &Poset::chain, py::arg("k"))
        .def_static("antichain", &Poset::antichain, py::arg("k"))
        .def_property_readonly("size", &Poset::size)
        .def_property_readonly("names", &Poset::names)
        .def_property_readonly("covers", &Poset::covers)
        .def("width", &Poset::width)
        .def("max_antichain",
             [](const Poset& p) {
                 std::vector<std::string> out;
                 for (int x : p.max_antichain()) out.push_back(p.name(x));
                 return out;
             })
        .def("chain_decomposition",
             [](const Poset& p) {
                 std::vector<std::vector<std::string>> out;
                 for (const auto& c : p.chain_decomposition()) {
                     std::vector<std::string> names;
                     for (int x : c) names.push_back(p.name(x));
                     out.push_back(std::move(names));
                 }
                 return out;
             })
        .def("linear_extension_count", &Poset::linear_extension_count,
             py::arg("cap") = std::uint64_t{1} << 32)
        .def("isomorphic_to", &Poset::isomorphic_to)
        .def("__repr__", [](const Poset& p) {
            return "<Poset with " + std::to_string(p.size()) + " elements>";
        });

    py::class_<DistLattice>(m, "Lattice")
        .def_property_readonly("size", &DistLattice::size)
        .def_property_readonly("planar", &DistLattice::is_planar)
        .def("label", &DistLattice::label)
        .def("ideal", &DistLattice::ideal_names)
        .def("rank", &DistLattice::rank)
        .def("meet", &DistLattice::meet)
        .def("join", &DistLattice::join)
        .def("__len__", &DistLattice::size)
        .def("__repr__", [](const DistLattice& L) {
            return "<Lattice with " + std::to_string(L.size()) + " elements>";
        });

    m.def(
        "birkhoff",
        [](const Poset& p, std::size_t max_ideals) {
            return DistLattice::birkhoff(p, max_ideals);
        },
        py::arg("poset"), py::arg("max_ideals") = std::size_t{1} << 16);

    m.def(
        "maximal_chains",
        [](const DistLattice& L, std::size_t cap) {
            std::vector<std::vector<std::string>> out;
            for (const auto& c : maximal_chains(L, cap)) {
                std::vector<std::string> labels;
                for (std::size_t k = 1; k + 1 < c.size(); ++k)
                    labels.push_back(L.label(c[k]));
                out.push_back(std::move(labels));
            }
            return out;
        },
        py::arg("lattice"), py::arg("max_chains") = std::size_t{1000000});

    m.def(
        "krull_dimension",
        [](const DistLattice& L, std::size_t cap) {
            const auto k = krull_dimension(L, cap);
            return py::make_tuple(k.dim, k.by_formula, k.by_rank);
        },
        py::arg("lattice"), py::arg("max_chains") = std::size_t{1000000});

    // raw graded dimensions by fiber counting; the route for lattices whose
    // series has no closed form here
    m.def(
        "graded_dimensions",
        [](const DistLattice& L, int max_degree, std::size_t max_chains,
           std::uint64_t max_fiber_nodes) {
            const auto g = chain_generators(L, max_chains);
            std::vector<std::uint64_t> dims{1};
            for (int d = 1; d <= max_degree; ++d)
                dims.push_back(hilbert_by_fibers(g, d, max_fiber_nodes));
            return dims;
        },
        py::arg("lattice"), py::arg("max_degree") = 3,
        py::arg("max_chains") = std::size_t{1000000},
        py::arg("max_fiber_nodes") = std::uint64_t{10000000});

    m.def(
        "lattice_report",
        [](const DistLattice& L) { return json_to_py(lattice_report(L)); },
        py::arg("lattice"));
    m.def(
        "sortable_report",
        [](const DistLattice& L) { return json_to_py(sortable_report(L, Budgets{})); },
        py::arg("lattice"));
    m.def(
        "hilbert_report",
        [](const DistLattice& L, int oracle) {
            return json_to_py(hilbert_report(L, Budgets{}, oracle, true));
        },
        py::arg("lattice"), py::arg("oracle") = 0);
    m.def(
        "toric_report",
        [](const DistLattice& L, int max_degree, bool certify, bool squarefree) {
            return json_to_py(toric_report(L, Budgets{}, max_degree, certify, squarefree));
        },
        py::arg("lattice"), py::arg("max_degree") = 4, py::arg("certify_gb") = false,
        py::arg("squarefree_report") = false);
    m.def(
        "cycle_witness_report",
        [](const DistLattice& L, int antichain) {
            return json_to_py(cycle_witness_report(L, Budgets{}, antichain, false));
        },
        py::arg("lattice"), py::arg("antichain_size") = 0);
    m.def(
        "hibi_sort_report",
        [](const Poset& p) { return json_to_py(hibi_sort_report(p, Budgets{})); },
        py::arg("poset"));
    m.def(
        "verify_hibi_sorting",
        [](const Poset& p) { return verify_hibi_sorting(p, Budgets{}.max_ideals).ok; },
        py::arg("poset"));
    m.def(
        "corpus_report",
        [](int max_size, std::size_t max_ideals, std::size_t max_chains, int max_degree,
           std::uint64_t max_fiber_nodes, int max_syt_cells) {
            return json_to_py(corpus_report(
                max_size, make_budgets(max_ideals, max_chains, max_degree,
                                       max_fiber_nodes, max_syt_cells)));
        },
        py::arg("max_size") = 4, py::arg("max_ideals") = std::size_t{1} << 16,
        py::arg("max_chains") = std::size_t{1000000}, py::arg("max_degree") = 4,
        py::arg("max_fiber_nodes") = std::uint64_t{10000000},
        py::arg("max_syt_cells") = 16);
}
