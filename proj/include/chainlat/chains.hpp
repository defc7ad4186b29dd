#pragma once

#include "chainlat/lattice.hpp"
#include "chainlat/monomial.hpp"

#include <optional>
#include <vector>

namespace chainlat {

/// Maximal chain of a lattice: element per rank, from bottom to top.
using Chain = std::vector<int>;

/// All maximal chains in canonical order: lexicographic on the element
/// sequence, under the grid total order for planar lattices (this refines
/// the chain order of the planar theory; verified on construction) and
/// under the label order otherwise.
std::vector<Chain> maximal_chains(const DistLattice& L, std::size_t max_chains);

/// Word of the interior elements t_1..t_r of a maximal chain.
Monomial chain_monomial(const Chain& c);

std::vector<Monomial> chain_monomials(const std::vector<Chain>& chains);

/// Graph on the lattice elements joining equal-rank pairs whose join sits
/// one rank up. Its component count is forced to |P|+1.
struct ChainGraph {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> component_of; // component id per element
    int components = 0;
};

ChainGraph chain_graph(const DistLattice& L);

struct KrullDimension {
    int dim = 0;
    int by_formula = 0; // |L| - |P|
    int by_rank = 0;    // rank of the chain exponent matrix over Q
};

KrullDimension krull_dimension(const DistLattice& L, std::size_t max_chains);

enum class ChainRelation { Less, Greater, Equal, Incomparable };

struct ChainComparison {
    ChainRelation rel;
    // set when incomparable: largest rank with comparable truncations, and
    // the common element there (the first traversing point)
    int traverse_rank = -1;
    int traverse_element = -1;
};

ChainComparison chain_compare(const Chain& c, const Chain& d, const GridEmbedding& g);

Chain chain_meet(const Chain& c, const Chain& d, const GridEmbedding& g);
Chain chain_join(const Chain& c, const Chain& d, const GridEmbedding& g);

/// The distributive lattice of all maximal chains of a planar lattice,
/// validated by a Birkhoff roundtrip. `cell_poset` is the down/right order
/// on the cells; it is checked isomorphic to the join-irreducible poset.
/// Both posets are absent exactly when the lattice has a single chain.
struct ChainLattice {
    std::vector<Chain> chains;           // canonical order
    std::vector<std::vector<bool>> leq;  // chain_i below chain_j
    std::optional<Poset> jirr_poset;     // join-irreducibles of the chain lattice
    std::optional<Poset> cell_poset;
    std::size_t size() const { return chains.size(); }
};

ChainLattice chain_lattice(const DistLattice& L, const GridEmbedding& g,
                           std::size_t max_chains);

/// Down/right order on the cells, row-major names p1..pd (empty shape -> nullopt).
std::optional<Poset> cell_poset(const GridEmbedding& g);

} // namespace chainlat
