#include "chainlat/hilbert.hpp"

#include "chainlat/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace chainlat {

SkewShape skew_shape(const GridEmbedding& g) {
    SkewShape s;
    s.cells = g.cell_rc;
    std::sort(s.cells.begin(), s.cells.end());

    // rows contiguous, row starts and ends weakly decreasing downwards
    std::map<int, std::pair<int, int>> span; // row -> [min col, max col]
    std::map<int, int> count;
    for (auto [r, c] : s.cells) {
        auto it = span.find(r);
        if (it == span.end())
            span[r] = {c, c};
        else
            it->second = {std::min(it->second.first, c), std::max(it->second.second, c)};
        ++count[r];
    }
    int prev_row = -1;
    std::pair<int, int> prev{0, 0};
    for (auto [r, se] : span) {
        if (se.second - se.first + 1 != count[r])
            throw InternalError("skew shape has a gap in row " + std::to_string(r));
        if (prev_row != -1) {
            if (r != prev_row + 1 || se.first > prev.first || se.second > prev.second)
                throw InternalError("cells do not form a skew diagram");
        }
        prev_row = r;
        prev = se;
    }
    return s;
}

namespace {

// Backtracking over standard fillings; f(value row sequence) via ascents.
std::vector<BigInt> count_fillings_by_ascents(const SkewShape& shape) {
    const int d = shape.num_cells();
    std::vector<BigInt> dist(d == 0 ? 1 : d, 0);
    if (d == 0) {
        dist[0] = 1;
        return dist;
    }

    std::map<std::pair<int, int>, int> cell_id;
    for (int i = 0; i < d; ++i) cell_id[shape.cells[i]] = i;
    std::vector<int> left(d, -1), up(d, -1);
    for (int i = 0; i < d; ++i) {
        auto [r, c] = shape.cells[i];
        if (auto it = cell_id.find({r, c - 1}); it != cell_id.end()) left[i] = it->second;
        if (auto it = cell_id.find({r - 1, c}); it != cell_id.end()) up[i] = it->second;
    }

    std::vector<char> filled(d, 0);
    auto rec = [&](auto&& self, int value, int prev_row, int ascents) -> void {
        if (value > d) {
            dist[ascents] += 1;
            return;
        }
        for (int i = 0; i < d; ++i) {
            if (filled[i]) continue;
            if (left[i] != -1 && !filled[left[i]]) continue;
            if (up[i] != -1 && !filled[up[i]]) continue;
            filled[i] = 1;
            const int row = shape.cells[i].first;
            self(self, value + 1, row,
                 ascents + (value > 1 && row < prev_row ? 1 : 0));
            filled[i] = 0;
        }
    };
    rec(rec, 1, -1, 0);

    while (dist.size() > 1 && dist.back() == 0) dist.pop_back();
    return dist;
}

} // namespace

std::vector<BigInt> syt_ascents(const SkewShape& shape, int max_cells) {
    if (shape.num_cells() > max_cells)
        throw BudgetError("max_syt_cells", max_cells);
    return count_fillings_by_ascents(shape);
}

BigInt HilbertSeries::coefficient(int k) const {
    // h(z) / (1-z)^D expands against binomial(D-1+j, D-1)
    BigInt out = 0;
    for (int i = 0; i <= k && i < static_cast<int>(h.size()); ++i) {
        BigInt binom = 1;
        for (int t = 1; t <= denom_power - 1; ++t)
            binom = binom * (k - i + t) / t;
        out += h[i] * binom;
    }
    return out;
}

BigInt HilbertSeries::h_sum() const {
    BigInt s = 0;
    for (const auto& x : h) s += x;
    return s;
}

bool HilbertSeries::symmetric() const {
    for (std::size_t i = 0; i < h.size(); ++i)
        if (h[i] != h[h.size() - 1 - i]) return false;
    return true;
}

HilbertSeries hilbert_series(const DistLattice& L, int max_cells) {
    const GridEmbedding g = grid_embedding(L);
    const SkewShape shape = skew_shape(g);

    HilbertSeries hs;
    hs.h = syt_ascents(shape, max_cells);
    hs.denom_power = shape.num_cells() + 1;
    if (hs.h.front() != 1)
        throw InternalError("h-vector must start at 1");

    // degree-one dimension is the number of maximal chains
    const auto chains = maximal_chains(L, std::size_t{1} << 24);
    if (hs.coefficient(1) != static_cast<long long>(chains.size()))
        throw InternalError("series disagrees with the chain count in degree 1");
    return hs;
}

std::vector<BigInt> descents_oracle(const SkewShape& shape, int max_cells) {
    const int d = shape.num_cells();
    if (d > max_cells) throw BudgetError("max_syt_cells", max_cells);
    if (d == 0) return {1};

    // natural labelling: cells already sit in row-major order p1..pd
    std::vector<std::pair<int, int>> rc = shape.cells;
    auto leq = [&](int i, int j) {
        return rc[i].first <= rc[j].first && rc[i].second <= rc[j].second;
    };

    std::vector<BigInt> dist(d, 0);
    std::vector<char> placed(d, 0);
    std::vector<int> seq;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(seq.size()) == d) {
            int descents = 0;
            for (int i = 0; i + 1 < d; ++i)
                if (seq[i] > seq[i + 1]) ++descents;
            dist[descents] += 1;
            return;
        }
        for (int i = 0; i < d; ++i) {
            if (placed[i]) continue;
            bool ready = true;
            for (int j = 0; j < d && ready; ++j)
                if (!placed[j] && j != i && leq(j, i)) ready = false;
            if (!ready) continue;
            placed[i] = 1;
            seq.push_back(i);
            self(self);
            seq.pop_back();
            placed[i] = 0;
        }
    };
    rec(rec);
    while (dist.size() > 1 && dist.back() == 0) dist.pop_back();
    return dist;
}

BigInt nontraversing_count(const ChainLattice& cl, int k) {
    const std::size_t m = cl.size();
    std::vector<BigInt> count(m, 1);
    for (int step = 1; step < k; ++step) {
        std::vector<BigInt> next(m, 0);
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < m; ++i)
                if (cl.leq[i][j]) next[j] += count[i];
        count = std::move(next);
    }
    BigInt total = 0;
    for (const auto& c : count) total += c;
    return total;
}

GorensteinCheck is_gorenstein(const DistLattice& L, int max_cells) {
    const GridEmbedding g = grid_embedding(L);
    const SkewShape shape = skew_shape(g);

    GorensteinCheck check;
    check.h_symmetric = hilbert_series(L, max_cells).symmetric();

    if (shape.num_cells() == 0) {
        check.gorenstein = true;
    } else {
        // every maximal down/right cell path must have one common length
        const auto poset = cell_poset(g);
        const int d = poset->size();
        std::set<int> lengths;
        auto extend = [&](auto&& self, int x, int len) -> void {
            bool maximal = true;
            for (int y = 0; y < d; ++y)
                if (poset->less(x, y)) maximal = false;
            if (maximal) {
                lengths.insert(len);
                return;
            }
            for (auto [u, v] : poset->covers())
                if (u == x) self(self, v, len + 1);
        };
        for (int x = 0; x < d; ++x) {
            bool minimal = true;
            for (int y = 0; y < d; ++y)
                if (poset->less(y, x)) minimal = false;
            if (minimal) extend(extend, x, 1);
        }
        check.gorenstein = lengths.size() == 1;
    }
    if (check.gorenstein != check.h_symmetric)
        throw InternalError("cell purity disagrees with h-vector symmetry");
    return check;
}

std::vector<BigInt> narayana_polynomial(int a, int b, int max_cells) {
    if (a * b > max_cells) throw BudgetError("max_syt_cells", max_cells);
    SkewShape shape;
    for (int r = 0; r < b; ++r)
        for (int c = 0; c < a; ++c) shape.cells.emplace_back(r, c);
    return syt_ascents(shape, max_cells);
}

UnimodalityReport unimodality_report(const std::vector<BigInt>& h) {
    UnimodalityReport rep;
    int peak = 0;
    for (std::size_t i = 1; i < h.size(); ++i)
        if (h[i] > h[peak]) peak = static_cast<int>(i);
    rep.peak = peak;
    rep.unimodal = true;
    for (int i = 1; i <= peak && rep.unimodal; ++i)
        if (h[i] < h[i - 1]) rep.unimodal = false;
    for (std::size_t i = peak + 1; i < h.size() && rep.unimodal; ++i)
        if (h[i] > h[i - 1]) rep.unimodal = false;
    return rep;
}

} // namespace chainlat
