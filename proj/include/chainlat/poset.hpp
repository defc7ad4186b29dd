#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chainlat {

/// Subset of a poset's ground set, one bit per element id.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Finite poset on elements 0..d-1. Immutable after construction; the
/// closed relation is kept as per-element up/down bitmasks.
class Poset {
public:
    /// Builds from cover pairs (u covered by v). Closes transitively,
    /// reduces to the canonical cover set, rejects cycles.
    static Poset from_covers(std::vector<std::string> names,
                             const std::vector<std::pair<int, int>>& covers);

    /// Poset file format: lines `# comment`, `elements <name>+`, `cover <u> <v>`.
    static Poset parse(std::string_view text);

    static Poset chain(int k);
    static Poset antichain(int k);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int u) const { return names_[u]; }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(std::string_view name) const; // -1 if absent

    /// Canonical cover pairs (transitive reduction), sorted.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    bool leq(int u, int v) const { return (up_[u] >> v) & 1u; }
    bool less(int u, int v) const { return u != v && leq(u, v); }
    bool comparable(int u, int v) const { return leq(u, v) || leq(v, u); }

    Mask up_set(int u) const { return up_[u]; }
    Mask down_set(int u) const { return down_[u]; }
    Mask strict_down(int u) const { return down_[u] & ~(Mask{1} << u); }
    Mask all() const { return size() == 32 ? ~Mask{0} : (Mask{1} << size()) - 1; }

    bool is_downset(Mask m) const;
    bool is_antichain(Mask m) const;

    /// Maximum antichain size, via maximum bipartite matching on the strict
    /// comparability relation (Dilworth duality). Cached.
    int width() const;
    /// An antichain realising width(), from the Koenig vertex cover.
    const std::vector<int>& max_antichain() const;
    /// width() disjoint chains covering the poset, recovered from the
    /// matching. Deterministic; chains sorted by their minimal element.
    const std::vector<std::vector<int>>& chain_decomposition() const;

    /// All order-preserving bijections onto 1..d, as element sequences in
    /// lexicographic order. Throws BudgetError past `cap` extensions.
    std::vector<std::vector<int>> linear_extensions(std::size_t cap) const;
    std::uint64_t linear_extension_count(std::uint64_t cap) const;

    bool isomorphic_to(const Poset& other) const;
    /// Encoding of the relation matrix, minimal over all relabellings.
    /// Equal keys iff isomorphic.
    std::string canonical_key() const;

    bool operator==(const Poset& other) const;

private:
    Poset() = default;
    void ensure_matching() const;

    std::vector<std::string> names_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<Mask> up_, down_;

    // lazily computed Dilworth data
    mutable bool matched_ = false;
    mutable int width_ = 0;
    mutable std::vector<int> antichain_;
    mutable std::vector<std::vector<int>> chains_;
};

} // namespace chainlat
