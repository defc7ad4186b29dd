#pragma once

#include "chainlat/lattice.hpp"
#include "chainlat/monomial.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace chainlat {

/// Monomial in the presentation variables T_1..T_m, as the sorted multiset
/// of its generator indices (0-based).
using TMono = std::vector<int>;

/// The map T_i -> u_i onto a set of distinct equal-degree monomials.
/// DegRevLex with T_1 > ... > T_m always refers to this indexing.
struct GeneratorMap {
    int ambient_dim = 0;
    std::vector<Monomial> gens;

    GeneratorMap() = default;
    GeneratorMap(int ambient, std::vector<Monomial> generators);

    int count() const { return static_cast<int>(gens.size()); }
    int degree() const { return gens.empty() ? 0 : gens.front().degree(); }
    std::vector<int> image(const TMono& t) const;
};

GeneratorMap chain_generators(const DistLattice& L, std::size_t max_chains);

/// Pure-difference binomial T^plus - T^minus with disjoint supports.
struct Binomial {
    TMono plus, minus;
    int degree() const { return static_cast<int>(plus.size()); }
};

/// Degree-graded minimal generating set of the toric ideal, up to a degree
/// bound. `truncated` records that the bound may hide higher generators.
struct MarkovBasis {
    std::map<int, std::vector<Binomial>> by_degree;
    bool truncated = false;

    std::size_t total() const;
    int max_generator_degree() const; // 0 when empty
};

/// All multisets of d generators whose product is `target`, by backtracking
/// on the lowest remaining ambient variable.
std::vector<TMono> fiber(const GeneratorMap& g, const Monomial& target, int d,
                         std::uint64_t max_fiber_nodes);

/// Scans every fiber of each degree 2..max_degree and keeps one binomial per
/// extra connected component of the fiber graph (edges join T-monomials with
/// a common generator, i.e. points one lower-degree kernel move apart).
MarkovBasis minimal_generators(const GeneratorMap& g, int max_degree,
                               std::uint64_t max_fiber_nodes);

/// True when no minimal generator of degree >= 3 exists within the scan.
bool is_quadratically_generated(const MarkovBasis& basis);

/// Minimal generators of a chain algebra; `truncated` cleared exactly when
/// planarity certifies completeness of the scan.
MarkovBasis chain_minimal_generators(const DistLattice& L, int max_degree,
                                     std::size_t max_chains,
                                     std::uint64_t max_fiber_nodes);

/// Chain-algebra variant: cross-checks the scan against planarity, which
/// must agree whenever the scan reaches the poset width.
bool is_quadratically_generated(const DistLattice& L, int max_degree,
                                std::size_t max_chains, std::uint64_t max_fiber_nodes);

struct GroebnerResult {
    std::vector<Binomial> basis;     // completed basis, leading term first
    bool input_was_groebner = false; // every input S-binomial reduced to zero
    bool input_was_reduced = false;  // moreover no leading term divides
                                     // another input term
};

/// Binomial Buchberger under DegRevLex with T_1 > ... > T_m. S-binomials and
/// reductions of binomials stay binomial; coefficients never leave {1, -1}.
GroebnerResult buchberger(const std::vector<Binomial>& bins, int num_gens,
                          std::size_t max_basis);

/// Every leading term squarefree; evidence gathering, not a proof of
/// normality.
bool initial_ideal_squarefree(const std::vector<Binomial>& gb);

/// Number of distinct products of d generators = graded dimension of the
/// algebra in degree d.
std::uint64_t hilbert_by_fibers(const GeneratorMap& g, int d,
                                std::uint64_t max_fiber_nodes);

} // namespace chainlat
