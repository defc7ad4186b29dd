#pragma once

#include "chainlat/chains.hpp"
#include "chainlat/lattice.hpp"
#include "chainlat/toric.hpp"

#include <cstdint>
#include <vector>

namespace chainlat {

/// Induced cycle in the bipartite cover graph between two consecutive ranks,
/// together with the two families of maximal chains realising its perfect
/// matchings and the resulting kernel binomial of degree s.
struct CycleWitness {
    std::vector<int> antichain;  // poset ids; empty for explicitly given cycles
    Mask base_ideal = 0;         // elements strictly below the antichain
    int rank_a = 0;
    std::vector<int> low, high;  // lattice ids; low[i] -< high[i] and high[i] >- low[i+1]
    std::vector<Chain> chains_main, chains_hat;
    Binomial binomial;           // over the canonical chain indexing
};

/// Deterministic antichain of the requested size; the width certificate when
/// n equals the width, otherwise the first antichain in mask order.
std::vector<int> find_antichain(const Poset& p, int n);

/// The antichain construction: base ideal I, low elements I+{p_i}, high
/// elements I+{p_i, p_{i+1}}, greedy chain extensions, degree-s binomial.
CycleWitness build_cycle_witness(const DistLattice& L, const std::vector<int>& antichain,
                                 std::size_t max_chains);

/// Same machinery for an explicitly given induced cycle (low[i], high[i] as
/// lattice element ids, cyclically adjacent).
CycleWitness witness_from_cycle(const DistLattice& L, const std::vector<int>& low,
                                const std::vector<int>& high, std::size_t max_chains);

struct WitnessVerification {
    bool in_kernel = false;
    bool minimal = false;
    std::uint64_t fiber_size = 0;
    /// every fiber point restricts to one of the two matchings on the cycle
    bool matchings_restricted = false;
};

WitnessVerification verify_witness(const DistLattice& L, const CycleWitness& w,
                                   std::size_t max_chains, std::uint64_t max_fiber_nodes);

/// The 12-cycle between ranks 2 and 3 of the Boolean lattice on five atoms
/// whose witness binomial has degree six; vertices as atom masks.
std::pair<std::vector<Mask>, std::vector<Mask>> boolean5_long_cycle();

/// Exhaustive search for an induced cycle of length 2s between ranks a and
/// a+1, in lexicographic vertex order; nullopt when none exists.
std::optional<std::pair<std::vector<int>, std::vector<int>>>
find_induced_cycle(const DistLattice& L, int rank_a, int s, std::uint64_t max_nodes);

} // namespace chainlat
