#pragma once

#include "chainlat/budgets.hpp"
#include "chainlat/lattice.hpp"
#include "chainlat/nonplanar.hpp"

#include <json.hpp>

#include <string>

namespace chainlat {

using Json = nlohmann::ordered_json;

Json lattice_report(const DistLattice& L);
std::string lattice_dot(const DistLattice& L);
Json chains_report(const DistLattice& L, const Budgets& b);
Json dim_report(const DistLattice& L, const Budgets& b);
Json planar_report(const DistLattice& L);
Json sortable_report(const DistLattice& L, const Budgets& b);
Json hibi_sort_report(const Poset& p, const Budgets& b);
Json hilbert_report(const DistLattice& L, const Budgets& b, int oracle_k, bool gorenstein);
Json toric_report(const DistLattice& L, const Budgets& b, int max_degree, bool certify_gb,
                  bool squarefree_report);
Json cycle_witness_report(const DistLattice& L, const Budgets& b, int antichain_size,
                          bool search_longer, int search_rank = 0);
Json corpus_report(int max_size, const Budgets& b);

std::string render_text(const Json& report, const std::string& command);

} // namespace chainlat
