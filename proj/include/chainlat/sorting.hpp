#pragma once

#include "chainlat/chains.hpp"
#include "chainlat/lattice.hpp"
#include "chainlat/monomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chainlat {

/// Total order on the ambient variables under which words are interleaved.
struct SortContext {
    std::vector<int> pos; // pos[variable id] = position in the order

    bool less(int x, int y) const { return pos[x] < pos[y]; }

    /// Variables ordered by their id.
    static SortContext identity(int num_vars);
    /// Grid total order on the interior elements of a planar lattice
    /// (variable ids are lattice element indices).
    static SortContext grid(const GridEmbedding& g);
};

/// Interleaves the sorted 2r-letter word of u*v into its odd and even
/// subwords. The result multiplies back to u*v and is itself sorted.
std::pair<Monomial, Monomial> sort_pair(const Monomial& u, const Monomial& v,
                                        const SortContext& ctx);

bool is_sorted_pair(const Monomial& u, const Monomial& v, const SortContext& ctx);

struct SortabilityWitness {
    int i = -1, j = -1;   // offending unordered pair (0-based indices into B)
    Monomial v1, v2;      // its sorting, not contained in B
};

struct SortabilityResult {
    bool sortable = false;
    std::optional<SortabilityWitness> witness;
};

/// Checks sort(B x B) within B x B; on failure reports a pair whose sorting
/// leaves B.
SortabilityResult is_sortable_set(const std::vector<Monomial>& B, const SortContext& ctx);

/// One relation per unsorted unordered pair {i, j}: the 1-based index pairs
/// lift to the binomials T_i T_j - T_k T_l.
struct SortingRelation {
    std::pair<int, int> lhs; // unsorted pair, i < j
    std::pair<int, int> rhs; // indices of the sorted pair, in sort order
};

std::vector<SortingRelation> sorting_relations(const std::vector<Monomial>& B,
                                               const SortContext& ctx);

/// Sortable realisation of the ideal lattice of a poset: ideal I is encoded
/// by how many elements it takes from each chain of a fixed minimal chain
/// decomposition, one variable block per chain.
struct HibiSystem {
    std::vector<int> block_sizes;      // chain lengths |A_1|..|A_n|
    int num_vars = 0;                  // |P| + n, blocks concatenated
    std::vector<std::string> var_names;
    std::vector<Monomial> monomials;   // per lattice element index
    SortContext ctx;                   // block order, then index within block
};

HibiSystem hibi_sort_monomials(const Poset& p, const DistLattice& L);

struct HibiVerification {
    bool ok = true;
    std::string failure; // empty when ok
};

/// Executable form of the Hibi-relations-are-sorting-relations statement:
/// sort(m_I, m_J) = (m_{I∩J}, m_{I∪J}) for all ideal pairs, the monomial set
/// is sortable, and the relation set equals the Hibi relation set.
HibiVerification verify_hibi_sorting(const Poset& p, std::size_t max_ideals);

} // namespace chainlat
