#pragma once

#include <cstdint>

namespace chainlat {

/// Enumeration caps shared by the CLI and the library entry points.
/// All algorithms are deterministic; budgets only bound work, never results.
struct Budgets {
    std::size_t max_ideals = 1u << 16;
    std::size_t max_chains = 1000000;
    int max_degree = 4;
    std::uint64_t max_fiber_nodes = 10000000;
    int max_syt_cells = 16;
};

} // namespace chainlat
