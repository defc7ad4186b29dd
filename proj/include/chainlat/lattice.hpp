#pragma once

#include "chainlat/poset.hpp"

#include <unordered_map>
#include <utility>
#include <vector>

namespace chainlat {

/// The lattice of order ideals of a poset (Birkhoff representation).
/// Elements are indexed 0..s+1 by (cardinality, bitmask value), so index 0
/// is the empty ideal and index s+1 the full one; labels are t0..t{s+1}.
class DistLattice {
public:
    static DistLattice birkhoff(Poset p, std::size_t max_ideals);

    const Poset& source() const { return source_; }
    int size() const { return static_cast<int>(ideals_.size()); }
    int interior_size() const { return size() - 2; }
    /// Rank of the top element, |P|.
    int top_rank() const { return source_.size(); }

    Mask ideal(int idx) const { return ideals_[idx]; }
    int rank(int idx) const { return popcount(ideals_[idx]); }
    std::string label(int idx) const { return "t" + std::to_string(idx); }
    std::vector<std::string> ideal_names(int idx) const;
    int index_of(Mask ideal) const; // -1 if absent

    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& lower_covers(int idx) const { return lower_[idx]; }
    const std::vector<int>& upper_covers(int idx) const { return upper_[idx]; }

    bool leq(int u, int v) const { return subset(ideals_[u], ideals_[v]); }
    int meet(int u, int v) const;
    int join(int u, int v) const;

    /// Elements covering exactly one element, as an induced subposet.
    /// Each is a principal ideal; it is named after its generator, and the
    /// second return value gives the lattice index per subposet element.
    std::pair<Poset, std::vector<int>> join_irreducibles() const;

    bool is_planar() const { return source_.width() <= 2; }

private:
    DistLattice(Poset p) : source_(std::move(p)) {}

    Poset source_;
    std::vector<Mask> ideals_;
    std::unordered_map<Mask, int> index_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> lower_, upper_;
};

/// Planar embedding into the grid spanned by a fixed two-chain cover of the
/// source poset: element I sits at (|I ∩ A|, |I ∩ B|).
struct GridEmbedding {
    int a = 0, b = 0;                         // chain lengths
    std::vector<int> chain_a, chain_b;        // poset element ids
    std::vector<std::pair<int, int>> coord;   // per lattice element
    std::vector<int> order_pos;               // rank then i-coordinate, per element
    std::vector<int> cells;                   // elements with two lower covers
    std::vector<std::pair<int, int>> cell_rc; // matrix coords of cells, row 0 on top

    bool less(int u, int v) const { return order_pos[u] < order_pos[v]; }
    int min_element(int u, int v) const { return less(u, v) ? u : v; }
    int max_element(int u, int v) const { return less(u, v) ? v : u; }
};

GridEmbedding grid_embedding(const DistLattice& L);

} // namespace chainlat
