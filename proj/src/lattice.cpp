#include "chainlat/lattice.hpp"

#include "chainlat/errors.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace chainlat {

DistLattice DistLattice::birkhoff(Poset p, std::size_t max_ideals) {
    DistLattice L(std::move(p));
    const Poset& P = L.source_;
    const int d = P.size();

    std::unordered_set<Mask> seen{0};
    std::queue<Mask> work;
    work.push(0);
    while (!work.empty()) {
        Mask I = work.front();
        work.pop();
        for (int x = 0; x < d; ++x) {
            if ((I >> x) & 1u) continue;
            if (!subset(P.strict_down(x), I)) continue; // x minimal in the complement
            Mask J = I | (Mask{1} << x);
            if (seen.insert(J).second) {
                if (seen.size() > max_ideals)
                    throw BudgetError("max_ideals", static_cast<long long>(max_ideals));
                work.push(J);
            }
        }
    }

    L.ideals_.assign(seen.begin(), seen.end());
    std::sort(L.ideals_.begin(), L.ideals_.end(), [](Mask x, Mask y) {
        return std::make_pair(popcount(x), x) < std::make_pair(popcount(y), y);
    });
    for (int i = 0; i < L.size(); ++i) L.index_[L.ideals_[i]] = i;

    L.lower_.resize(L.size());
    L.upper_.resize(L.size());
    for (int i = 0; i < L.size(); ++i) {
        const Mask I = L.ideals_[i];
        for (int x = 0; x < d; ++x) {
            if ((I >> x) & 1u) continue;
            if (!subset(P.strict_down(x), I)) continue;
            const int j = L.index_.at(I | (Mask{1} << x));
            L.covers_.emplace_back(i, j);
            L.upper_[i].push_back(j);
            L.lower_[j].push_back(i);
        }
    }
    std::sort(L.covers_.begin(), L.covers_.end());
    for (auto& v : L.lower_) std::sort(v.begin(), v.end());
    for (auto& v : L.upper_) std::sort(v.begin(), v.end());
    return L;
}

std::vector<std::string> DistLattice::ideal_names(int idx) const {
    std::vector<std::string> out;
    for (int x = 0; x < source_.size(); ++x)
        if ((ideals_[idx] >> x) & 1u) out.push_back(source_.name(x));
    return out;
}

int DistLattice::index_of(Mask ideal) const {
    auto it = index_.find(ideal);
    return it == index_.end() ? -1 : it->second;
}

int DistLattice::meet(int u, int v) const {
    return index_.at(ideals_[u] & ideals_[v]);
}

int DistLattice::join(int u, int v) const {
    return index_.at(ideals_[u] | ideals_[v]);
}

std::pair<Poset, std::vector<int>> DistLattice::join_irreducibles() const {
    std::vector<int> elems;
    for (int i = 0; i < size(); ++i)
        if (lower_[i].size() == 1) elems.push_back(i);

    std::vector<std::string> names;
    for (int e : elems) {
        // a join-irreducible ideal is principal; name it by its generator
        const Mask added = ideals_[e] & ~ideals_[lower_[e].front()];
        names.push_back(source_.name(__builtin_ctz(added)));
    }
    std::vector<std::pair<int, int>> covers;
    const int n = static_cast<int>(elems.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !leq(elems[i], elems[j])) continue;
            bool is_cover = true;
            for (int k = 0; k < n && is_cover; ++k)
                if (k != i && k != j && leq(elems[i], elems[k]) && leq(elems[k], elems[j]))
                    is_cover = false;
            if (is_cover) covers.emplace_back(i, j);
        }
    return {Poset::from_covers(std::move(names), covers), elems};
}

GridEmbedding grid_embedding(const DistLattice& L) {
    if (!L.is_planar()) throw NonPlanarError();
    const Poset& P = L.source();

    GridEmbedding g;
    auto chains = P.chain_decomposition();
    if (chains.size() > 2) throw InternalError("planar poset with more than two cover chains");
    g.chain_a = chains.empty() ? std::vector<int>{} : chains[0];
    g.chain_b = chains.size() > 1 ? chains[1] : std::vector<int>{};
    g.a = static_cast<int>(g.chain_a.size());
    g.b = static_cast<int>(g.chain_b.size());

    Mask mask_a = 0, mask_b = 0;
    for (int x : g.chain_a) mask_a |= Mask{1} << x;
    for (int x : g.chain_b) mask_b |= Mask{1} << x;

    g.coord.resize(L.size());
    for (int i = 0; i < L.size(); ++i)
        g.coord[i] = {popcount(L.ideal(i) & mask_a), popcount(L.ideal(i) & mask_b)};

    // total order: by rank, then by the A-coordinate
    std::vector<int> order(L.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int u, int v) {
        auto [iu, ju] = g.coord[u];
        auto [iv, jv] = g.coord[v];
        return std::make_pair(iu + ju, iu) < std::make_pair(iv + jv, iv);
    });
    g.order_pos.resize(L.size());
    for (std::size_t k = 0; k < order.size(); ++k) g.order_pos[order[k]] = static_cast<int>(k);

    for (int i : order) {
        if (L.lower_covers(i).size() != 2) continue;
        g.cells.push_back(i); // cell named by its top-right corner
        auto [ci, cj] = g.coord[i];
        g.cell_rc.emplace_back(g.b - cj, ci - 1);
    }
    return g;
}

} // namespace chainlat
