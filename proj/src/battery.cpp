#include "chainlat/battery.hpp"

#include "chainlat/chains.hpp"
#include "chainlat/errors.hpp"
#include "chainlat/hilbert.hpp"
#include "chainlat/nonplanar.hpp"
#include "chainlat/sorting.hpp"
#include "chainlat/toric.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace chainlat {

namespace {

std::string describe(const Poset& p) {
    std::ostringstream out;
    out << "poset{";
    for (int i = 0; i < p.size(); ++i) out << (i ? " " : "") << p.name(i);
    for (auto [u, v] : p.covers()) out << "; " << p.name(u) << "<" << p.name(v);
    out << "}";
    return out.str();
}

template <typename Fn>
CheckResult per_poset(std::string name, const std::vector<Poset>& corpus, Fn&& body) {
    CheckResult res;
    res.name = std::move(name);
    for (const auto& p : corpus) {
        ++res.checked;
        try {
            std::string why = body(p);
            if (!why.empty()) res.failures.push_back(describe(p) + ": " + why);
        } catch (const std::exception& e) {
            res.failures.push_back(describe(p) + ": " + e.what());
        }
    }
    return res;
}

int exhaustive_width(const Poset& p) {
    int best = 0;
    for (Mask m = 0; m <= p.all(); ++m)
        if (p.is_antichain(m)) best = std::max(best, popcount(m));
    return best;
}

} // namespace

CheckResult check_width_oracle(const std::vector<Poset>& corpus) {
    return per_poset("width equals exhaustive antichain maximum", corpus,
                     [](const Poset& p) -> std::string {
                         if (p.width() != exhaustive_width(p)) return "width mismatch";
                         if (!p.is_antichain([&] {
                                 Mask m = 0;
                                 for (int x : p.max_antichain()) m |= Mask{1} << x;
                                 return m;
                             }()))
                             return "certificate is not an antichain";
                         return {};
                     });
}

CheckResult check_chain_cover(const std::vector<Poset>& corpus) {
    return per_poset("chain decomposition covers with width chains", corpus,
                     [](const Poset& p) -> std::string {
                         const auto& chains = p.chain_decomposition();
                         if (static_cast<int>(chains.size()) != p.width())
                             return "chain count differs from width";
                         Mask seen = 0;
                         for (const auto& c : chains) {
                             for (std::size_t k = 0; k + 1 < c.size(); ++k)
                                 if (!p.less(c[k], c[k + 1])) return "not a chain";
                             for (int x : c) {
                                 if ((seen >> x) & 1u) return "chains overlap";
                                 seen |= Mask{1} << x;
                             }
                         }
                         if (seen != p.all()) return "chains do not cover";
                         return {};
                     });
}

CheckResult check_birkhoff_roundtrip(const std::vector<Poset>& corpus, const Budgets& b) {
    return per_poset(
        "Birkhoff roundtrip, purity, distributivity", corpus,
        [&](const Poset& p) -> std::string {
            const auto L = DistLattice::birkhoff(p, b.max_ideals);
            for (int i = 0; i < L.size(); ++i)
                if (!p.is_downset(L.ideal(i))) return "member is not a downset";
            int downsets = 0;
            for (Mask m = 0;; ++m) {
                if (p.is_downset(m)) ++downsets;
                if (m == p.all()) break;
            }
            if (downsets != L.size()) return "a downset is missing";
            const auto [jp, elems] = L.join_irreducibles();
            if (!jp.isomorphic_to(p)) return "join-irreducibles differ from the source";
            // purity: maximal chains run through every rank 0..|P| once
            for (const auto& c : maximal_chains(L, b.max_chains))
                if (static_cast<int>(c.size()) != p.size() + 1) return "lattice not pure";
            for (int u = 0; u < L.size(); ++u)
                for (int v = 0; v < L.size(); ++v)
                    for (int w = 0; w < L.size(); ++w)
                        if (L.meet(u, L.join(v, w)) !=
                            L.join(L.meet(u, v), L.meet(u, w)))
                            return "distributivity fails";
            return {};
        });
}

CheckResult check_dimension_theorem(const std::vector<Poset>& corpus, const Budgets& b) {
    return per_poset("exponent rank = |L|-|P| and |P|+1 graph components", corpus,
                     [&](const Poset& p) -> std::string {
                         const auto L = DistLattice::birkhoff(p, b.max_ideals);
                         krull_dimension(L, b.max_chains); // asserts rank = formula
                         chain_graph(L);                   // asserts |P|+1 components
                         return {};
                     });
}

CheckResult check_edge_rule(const std::vector<Poset>& corpus, const Budgets& b) {
    return per_poset(
        "rank-join edge rule matches chain differences", corpus,
        [&](const Poset& p) -> std::string {
            const auto L = DistLattice::birkhoff(p, b.max_ideals);
            const auto chains = maximal_chains(L, b.max_chains);
            if (chains.size() > 50) return {}; // brute force only at small scale
            std::set<std::pair<int, int>> by_chains;
            for (std::size_t i = 0; i < chains.size(); ++i)
                for (std::size_t j = 0; j < chains.size(); ++j) {
                    std::vector<int> only_a, only_b;
                    for (int x : chains[i])
                        if (std::find(chains[j].begin(), chains[j].end(), x) ==
                            chains[j].end())
                            only_a.push_back(x);
                    for (int x : chains[j])
                        if (std::find(chains[i].begin(), chains[i].end(), x) ==
                            chains[i].end())
                            only_b.push_back(x);
                    if (only_a.size() == 1 && only_b.size() == 1)
                        by_chains.insert({std::min(only_a[0], only_b[0]),
                                          std::max(only_a[0], only_b[0])});
                }
            std::set<std::pair<int, int>> by_rule;
            for (auto [u, v] : chain_graph(L).edges) by_rule.insert({u, v});
            if (by_rule != by_chains) return "edge sets differ";
            return {};
        });
}

CheckResult check_cells_remark(const std::vector<Poset>& corpus, const Budgets& b) {
    return per_poset("|L| - |P| counts cells plus one (planar)", corpus,
                     [&](const Poset& p) -> std::string {
                         if (p.width() > 2) return {};
                         const auto L = DistLattice::birkhoff(p, b.max_ideals);
                         const auto g = grid_embedding(L);
                         if (L.size() - p.size() !=
                             static_cast<int>(g.cells.size()) + 1)
                             return "cell count mismatch";
                         return {};
                     });
}

CheckResult check_planar_sorting(const std::vector<Poset>& corpus, const Budgets& b) {
    return per_poset(
        "planar chain monomials sortable; sort = (meet, join)", corpus,
        [&](const Poset& p) -> std::string {
            if (p.width() > 2) return {};
            const auto L = DistLattice::birkhoff(p, b.max_ideals);
            const auto g = grid_embedding(L);
            const auto chains = maximal_chains(L, b.max_chains);
            const auto monos = chain_monomials(chains);
            const auto ctx = SortContext::grid(g);
            if (!is_sortable_set(monos, ctx).sortable) return "not sortable";
            for (std::size_t i = 0; i < chains.size(); ++i)
                for (std::size_t j = 0; j < chains.size(); ++j) {
                    const auto got = sort_pair(monos[i], monos[j], ctx);
                    const auto meet = chain_monomial(chain_meet(chains[i], chains[j], g));
                    const auto join = chain_monomial(chain_join(chains[i], chains[j], g));
                    if (got.first != meet || got.second != join)
                        return "sorting differs from meet/join";
                }
            return {};
        });
}

CheckResult check_groebner_certification(const std::vector<Poset>& corpus,
                                         const Budgets& b) {
    return per_poset(
        "sorting relations form the reduced DegRevLex basis (planar)", corpus,
        [&](const Poset& p) -> std::string {
            if (p.width() > 2) return {};
            const auto L = DistLattice::birkhoff(p, b.max_ideals);
            const auto chains = maximal_chains(L, b.max_chains);
            if (chains.size() > 20) return {};
            const auto g = grid_embedding(L);
            const auto monos = chain_monomials(chains);
            const auto rels = sorting_relations(monos, SortContext::grid(g));
            std::vector<Binomial> bins;
            for (const auto& rel : rels)
                bins.push_back({{rel.lhs.first - 1, rel.lhs.second - 1},
                                {rel.rhs.first - 1, rel.rhs.second - 1}});
            const auto gb = buchberger(bins, static_cast<int>(chains.size()), 10000);
            if (!gb.input_was_groebner) return "an S-binomial does not reduce to zero";
            if (!gb.input_was_reduced) return "basis is not reduced";
            for (const auto& bin : gb.basis) {
                Monomial lead{bin.plus};
                if (!lead.squarefree()) return "leading term not squarefree";
            }
            return {};
        });
}

CheckResult check_ascent_descent(const std::vector<Poset>& corpus, const Budgets& b) {
    return per_poset("ascent counts equal descent counts (planar)", corpus,
                     [&](const Poset& p) -> std::string {
                         if (p.width() > 2) return {};
                         const auto L = DistLattice::birkhoff(p, b.max_ideals);
                         const auto shape = skew_shape(grid_embedding(L));
                         if (syt_ascents(shape, b.max_syt_cells) !=
                             descents_oracle(shape, b.max_syt_cells))
                             return "distributions differ";
                         return {};
                     });
}

CheckResult check_series_oracles(const std::vector<Poset>& corpus, const Budgets& b) {
    return per_poset(
        "series coefficients match path DP and fiber counts (planar)", corpus,
        [&](const Poset& p) -> std::string {
            if (p.width() > 2) return {};
            const auto L = DistLattice::birkhoff(p, b.max_ideals);
            const auto hs = hilbert_series(L, b.max_syt_cells);
            const auto cl = chain_lattice(L, grid_embedding(L), b.max_chains);
            const auto gens = chain_generators(L, b.max_chains);
            for (int k = 1; k <= 3; ++k) {
                const BigInt coeff = hs.coefficient(k);
                if (coeff != nontraversing_count(cl, k))
                    return "path DP differs in degree " + std::to_string(k);
                if (coeff != hilbert_by_fibers(gens, k, b.max_fiber_nodes))
                    return "fiber count differs in degree " + std::to_string(k);
            }
            return {};
        });
}

CheckResult check_gorenstein(const std::vector<Poset>& corpus, const Budgets& b) {
    return per_poset("Gorenstein iff symmetric h-vector (planar)", corpus,
                     [&](const Poset& p) -> std::string {
                         if (p.width() > 2) return {};
                         const auto L = DistLattice::birkhoff(p, b.max_ideals);
                         is_gorenstein(L, b.max_syt_cells); // asserts the equivalence
                         return {};
                     });
}

CheckResult check_nonplanar_not_sortable(const std::vector<Poset>& corpus,
                                         const Budgets& b) {
    return per_poset("non-planar chain monomials are unsorted (label order)", corpus,
                     [&](const Poset& p) -> std::string {
                         if (p.width() <= 2) return {};
                         const auto L = DistLattice::birkhoff(p, b.max_ideals);
                         const auto monos =
                             chain_monomials(maximal_chains(L, b.max_chains));
                         const auto ctx = SortContext::identity(L.size());
                         if (is_sortable_set(monos, ctx).sortable)
                             return "unexpectedly sortable";
                         return {};
                     });
}

CheckResult check_nonplanar_witnesses(const std::vector<Poset>& corpus, const Budgets& b) {
    return per_poset(
        "width-n antichain yields a minimal degree-n kernel element", corpus,
        [&](const Poset& p) -> std::string {
            if (p.width() <= 2) return {};
            const auto L = DistLattice::birkhoff(p, b.max_ideals);
            const auto w = build_cycle_witness(L, find_antichain(p, p.width()),
                                               b.max_chains);
            if (w.binomial.degree() != p.width()) return "witness degree differs";
            const auto v = verify_witness(L, w, b.max_chains, b.max_fiber_nodes);
            if (!v.in_kernel) return "witness binomial leaves the kernel";
            if (!v.minimal) return "witness binomial is not minimal";
            if (!v.matchings_restricted) return "fiber escapes the two matchings";
            return {};
        });
}

CheckResult check_degree_profile(const std::vector<Poset>& corpus, const Budgets& b) {
    return per_poset(
        "width 3 and 4 lattices have a degree-width minimal generator", corpus,
        [&](const Poset& p) -> std::string {
            const int n = p.width();
            if (n != 3 && n != 4) return {};
            const auto L = DistLattice::birkhoff(p, b.max_ideals);
            const auto basis = chain_minimal_generators(L, n, b.max_chains,
                                                        b.max_fiber_nodes);
            if (is_quadratically_generated(basis)) return "quadratically generated";
            const auto it = basis.by_degree.find(n);
            if (it == basis.by_degree.end() || it->second.empty())
                return "no degree-" + std::to_string(n) + " generator";
            return {};
        });
}

CheckResult check_hibi_sorting(const std::vector<Poset>& corpus, const Budgets& b) {
    return per_poset("Hibi relations realised as sorting relations", corpus,
                     [&](const Poset& p) -> std::string {
                         const auto v = verify_hibi_sorting(p, b.max_ideals);
                         return v.ok ? std::string{} : v.failure;
                     });
}

CheckResult check_squarefree_terms(const std::vector<Poset>& corpus, const Budgets& b) {
    CheckResult res;
    res.name = "minimal generators have squarefree terms (observation)";
    for (const auto& p : corpus) {
        try {
            const auto L = DistLattice::birkhoff(p, b.max_ideals);
            const auto gens = chain_generators(L, b.max_chains);
            // keep the global scan affordable; report the range actually seen
            int max_degree = 2;
            auto multisets = [&](int d) {
                double v = 1.0;
                for (int t = 1; t <= d; ++t) v *= double(gens.count() + t - 1) / t;
                return v;
            };
            while (max_degree < std::max(2, std::min(b.max_degree, p.width())) &&
                   multisets(max_degree + 1) < 2e6)
                ++max_degree;
            const auto basis = minimal_generators(gens, max_degree, b.max_fiber_nodes);
            for (const auto& [d, bins] : basis.by_degree)
                for (const auto& bin : bins) {
                    ++res.checked;
                    if (!Monomial{bin.plus}.squarefree() ||
                        !Monomial{bin.minus}.squarefree())
                        res.warnings.push_back(describe(p) +
                                               ": non-squarefree generator in degree " +
                                               std::to_string(d));
                }
        } catch (const std::exception& e) {
            res.failures.push_back(describe(p) + ": " + e.what());
        }
    }
    return res;
}

std::vector<CheckResult> run_battery(const std::vector<Poset>& corpus, const Budgets& b) {
    return {
        check_width_oracle(corpus),
        check_chain_cover(corpus),
        check_birkhoff_roundtrip(corpus, b),
        check_dimension_theorem(corpus, b),
        check_edge_rule(corpus, b),
        check_cells_remark(corpus, b),
        check_planar_sorting(corpus, b),
        check_groebner_certification(corpus, b),
        check_ascent_descent(corpus, b),
        check_series_oracles(corpus, b),
        check_gorenstein(corpus, b),
        check_nonplanar_not_sortable(corpus, b),
        check_nonplanar_witnesses(corpus, b),
        check_degree_profile(corpus, b),
        check_hibi_sorting(corpus, b),
        check_squarefree_terms(corpus, b),
    };
}

} // namespace chainlat
