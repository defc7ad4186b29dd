#pragma once

#include "chainlat/chains.hpp"
#include "chainlat/lattice.hpp"
#include "chainlat/linalg.hpp"

#include <map>
#include <vector>

namespace chainlat {

/// Cells of a planar lattice as a skew diagram; row 0 is the top row.
struct SkewShape {
    std::vector<std::pair<int, int>> cells; // (row, col), row-major order
    int num_cells() const { return static_cast<int>(cells.size()); }
};

SkewShape skew_shape(const GridEmbedding& g);

/// Standard fillings counted by ascents (i+1 strictly above i), as the exact
/// distribution vector indexed by ascent count.
std::vector<BigInt> syt_ascents(const SkewShape& shape, int max_cells);

/// h-polynomial over (1-z)^{d+1}, d the number of cells.
struct HilbertSeries {
    std::vector<BigInt> h;
    int denom_power = 1;

    BigInt coefficient(int k) const; // of z^k in the expanded series
    BigInt h_sum() const;
    bool symmetric() const;
};

HilbertSeries hilbert_series(const DistLattice& L, int max_cells);

/// Linear extensions of the cell poset under its natural row-major
/// labelling, counted by descents. Must coincide with syt_ascents.
std::vector<BigInt> descents_oracle(const SkewShape& shape, int max_cells);

/// Number of weakly increasing k-tuples of maximal chains, by dynamic
/// programming over the chain lattice.
BigInt nontraversing_count(const ChainLattice& cl, int k);

struct GorensteinCheck {
    bool gorenstein = false;     // all maximal cell paths of equal length
    bool h_symmetric = false;    // always equal to `gorenstein`
};

GorensteinCheck is_gorenstein(const DistLattice& L, int max_cells);

/// h-vector of the a x b rectangle lattice.
std::vector<BigInt> narayana_polynomial(int a, int b, int max_cells);

struct UnimodalityReport {
    bool unimodal = false;
    int peak = 0; // index of a maximal entry (first peak)
};

UnimodalityReport unimodality_report(const std::vector<BigInt>& h);

} // namespace chainlat
