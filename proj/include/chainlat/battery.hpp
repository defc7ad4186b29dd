#pragma once

#include "chainlat/budgets.hpp"
#include "chainlat/corpus.hpp"
#include "chainlat/poset.hpp"

#include <string>
#include <vector>

namespace chainlat {

/// Outcome of one corpus-wide check. `checked` counts the posets (or pairs,
/// fibers, ...) actually exercised; empty `failures` means a pass.
struct CheckResult {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> failures;
    std::vector<std::string> warnings; // non-failing observations

    bool pass() const { return failures.empty(); }
};

CheckResult check_width_oracle(const std::vector<Poset>& corpus);
CheckResult check_chain_cover(const std::vector<Poset>& corpus);
CheckResult check_birkhoff_roundtrip(const std::vector<Poset>& corpus, const Budgets& b);
CheckResult check_dimension_theorem(const std::vector<Poset>& corpus, const Budgets& b);
CheckResult check_edge_rule(const std::vector<Poset>& corpus, const Budgets& b);
CheckResult check_cells_remark(const std::vector<Poset>& corpus, const Budgets& b);
CheckResult check_planar_sorting(const std::vector<Poset>& corpus, const Budgets& b);
CheckResult check_groebner_certification(const std::vector<Poset>& corpus, const Budgets& b);
CheckResult check_ascent_descent(const std::vector<Poset>& corpus, const Budgets& b);
CheckResult check_series_oracles(const std::vector<Poset>& corpus, const Budgets& b);
CheckResult check_gorenstein(const std::vector<Poset>& corpus, const Budgets& b);
CheckResult check_nonplanar_not_sortable(const std::vector<Poset>& corpus, const Budgets& b);
CheckResult check_nonplanar_witnesses(const std::vector<Poset>& corpus, const Budgets& b);
CheckResult check_degree_profile(const std::vector<Poset>& corpus, const Budgets& b);
CheckResult check_hibi_sorting(const std::vector<Poset>& corpus, const Budgets& b);
CheckResult check_squarefree_terms(const std::vector<Poset>& corpus, const Budgets& b);

std::vector<CheckResult> run_battery(const std::vector<Poset>& corpus, const Budgets& b);

} // namespace chainlat
