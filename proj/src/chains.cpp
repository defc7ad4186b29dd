#include "chainlat/chains.hpp"

#include "chainlat/errors.hpp"
#include "chainlat/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace chainlat {

namespace {

std::vector<Chain> enumerate_chains(const DistLattice& L, std::size_t max_chains) {
    std::vector<Chain> out;
    Chain cur{0};
    auto dfs = [&](auto&& self) -> void {
        const int top = cur.back();
        if (L.upper_covers(top).empty()) {
            if (out.size() >= max_chains)
                throw BudgetError("max_chains", static_cast<long long>(max_chains));
            out.push_back(cur);
            return;
        }
        for (int next : L.upper_covers(top)) {
            cur.push_back(next);
            self(self);
            cur.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

} // namespace

std::vector<Chain> maximal_chains(const DistLattice& L, std::size_t max_chains) {
    auto chains = enumerate_chains(L, max_chains);
    if (L.is_planar()) {
        const GridEmbedding g = grid_embedding(L);
        std::sort(chains.begin(), chains.end(), [&](const Chain& x, const Chain& y) {
            return std::lexicographical_compare(
                x.begin(), x.end(), y.begin(), y.end(),
                [&](int u, int v) { return g.less(u, v); });
        });
        // the canonical index of a chain must grow along the chain order;
        // checked exhaustively at small scale, guaranteed by the grid order
        if (chains.size() <= 500) {
            for (std::size_t i = 0; i < chains.size(); ++i)
                for (std::size_t j = i + 1; j < chains.size(); ++j)
                    if (chain_compare(chains[j], chains[i], g).rel == ChainRelation::Less)
                        throw InternalError("canonical chain order does not refine the chain order");
        }
    } else {
        std::sort(chains.begin(), chains.end());
    }
    return chains;
}

Monomial chain_monomial(const Chain& c) {
    return Monomial(std::vector<int>(c.begin() + 1, c.end() - 1));
}

std::vector<Monomial> chain_monomials(const std::vector<Chain>& chains) {
    std::vector<Monomial> out;
    out.reserve(chains.size());
    for (const auto& c : chains) out.push_back(chain_monomial(c));
    return out;
}

ChainGraph chain_graph(const DistLattice& L) {
    ChainGraph g;
    g.component_of.resize(L.size());
    std::vector<int> parent(L.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    for (int u = 0; u < L.size(); ++u)
        for (int v = u + 1; v < L.size(); ++v) {
            if (L.rank(u) != L.rank(v)) continue;
            if (L.rank(L.join(u, v)) != L.rank(u) + 1) continue;
            g.edges.emplace_back(u, v);
            parent[find(u)] = find(v);
        }

    std::vector<int> label(L.size(), -1);
    for (int u = 0; u < L.size(); ++u) {
        int root = find(u);
        if (label[root] == -1) label[root] = g.components++;
        g.component_of[u] = label[root];
    }
    if (g.components != L.source().size() + 1)
        throw InternalError("chain graph has " + std::to_string(g.components) +
                            " components, expected |P|+1 = " +
                            std::to_string(L.source().size() + 1));
    return g;
}

KrullDimension krull_dimension(const DistLattice& L, std::size_t max_chains) {
    const auto chains = maximal_chains(L, max_chains);

    std::vector<std::vector<BigInt>> m;
    m.reserve(chains.size());
    for (const auto& c : chains) {
        std::vector<BigInt> row(L.interior_size(), 0);
        for (int e : chain_monomial(c).word) row[e - 1] = 1;
        m.push_back(std::move(row));
    }

    KrullDimension k;
    k.by_formula = L.size() - L.source().size();
    // a one-point poset has the single empty chain monomial; graded by chain
    // count it still spans the one-variable polynomial ring
    k.by_rank = L.interior_size() == 0 ? 1 : integer_matrix_rank(std::move(m));
    if (k.by_formula != k.by_rank)
        throw InternalError("Krull dimension mismatch: formula " +
                            std::to_string(k.by_formula) + " vs rank " +
                            std::to_string(k.by_rank));
    k.dim = k.by_formula;
    return k;
}

ChainComparison chain_compare(const Chain& c, const Chain& d, const GridEmbedding& g) {
    if (c.size() != d.size()) throw InternalError("comparing chains of different lattices");
    const int r = static_cast<int>(c.size()) - 2;

    bool le = true, ge = true;
    int best_rank = 0; // truncations at rank 0 are trivially comparable
    for (int k = 1; k <= r; ++k) {
        if (g.less(d[k], c[k])) le = false;
        if (g.less(c[k], d[k])) ge = false;
        if (le || ge) best_rank = k;
    }
    if (le && ge) return {ChainRelation::Equal};
    if (le) return {ChainRelation::Less};
    if (ge) return {ChainRelation::Greater};

    ChainComparison cmp{ChainRelation::Incomparable};
    cmp.traverse_rank = best_rank;
    if (c[best_rank] != d[best_rank])
        throw InternalError("incomparable chains disagree at the traversing rank");
    cmp.traverse_element = c[best_rank];
    return cmp;
}

Chain chain_meet(const Chain& c, const Chain& d, const GridEmbedding& g) {
    Chain out(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) out[k] = g.min_element(c[k], d[k]);
    return out;
}

Chain chain_join(const Chain& c, const Chain& d, const GridEmbedding& g) {
    Chain out(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) out[k] = g.max_element(c[k], d[k]);
    return out;
}

std::optional<Poset> cell_poset(const GridEmbedding& g) {
    if (g.cells.empty()) return std::nullopt;
    // cells in row-major reading order, named p1..pd as in the skew diagram
    std::vector<std::pair<int, int>> rc = g.cell_rc;
    std::sort(rc.begin(), rc.end());
    std::vector<std::string> names;
    for (std::size_t i = 0; i < rc.size(); ++i) names.push_back("p" + std::to_string(i + 1));

    std::vector<std::pair<int, int>> covers;
    const int n = static_cast<int>(rc.size());
    auto leq = [&](int i, int j) {
        return rc[i].first <= rc[j].first && rc[i].second <= rc[j].second;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !leq(i, j)) continue;
            bool cover = true;
            for (int k = 0; k < n && cover; ++k)
                if (k != i && k != j && leq(i, k) && leq(k, j)) cover = false;
            if (cover) covers.emplace_back(i, j);
        }
    return Poset::from_covers(std::move(names), covers);
}

ChainLattice chain_lattice(const DistLattice& L, const GridEmbedding& g,
                           std::size_t max_chains) {
    ChainLattice cl;
    cl.chains = maximal_chains(L, max_chains);
    const auto m = cl.chains.size();

    cl.leq.assign(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) {
                cl.leq[i][j] = true;
                continue;
            }
            const auto rel = chain_compare(cl.chains[i], cl.chains[j], g).rel;
            cl.leq[i][j] = rel == ChainRelation::Less;
        }

    // covers and join-irreducibles of the chain lattice
    auto is_cover = [&](std::size_t i, std::size_t j) {
        if (i == j || !cl.leq[i][j]) return false;
        for (std::size_t k = 0; k < m; ++k)
            if (k != i && k != j && cl.leq[i][k] && cl.leq[k][j]) return false;
        return true;
    };
    std::vector<int> lower_count(m, 0);
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (is_cover(i, j)) {
                covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
                ++lower_count[j];
            }

    std::vector<int> jirr;
    for (std::size_t j = 0; j < m; ++j)
        if (lower_count[j] == 1) jirr.push_back(static_cast<int>(j));

    if (!jirr.empty()) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < jirr.size(); ++i) names.push_back("q" + std::to_string(i + 1));
        std::vector<std::pair<int, int>> jcovers;
        const int n = static_cast<int>(jirr.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j || !cl.leq[jirr[i]][jirr[j]]) continue;
                bool cover = true;
                for (int k = 0; k < n && cover; ++k)
                    if (k != i && k != j && cl.leq[jirr[i]][jirr[k]] && cl.leq[jirr[k]][jirr[j]])
                        cover = false;
                if (cover) jcovers.emplace_back(i, j);
            }
        cl.jirr_poset = Poset::from_covers(std::move(names), jcovers);

        // Birkhoff roundtrip: the chain lattice must be the ideal lattice of
        // its join-irreducibles, via C -> {irreducibles below C}
        const DistLattice JL = DistLattice::birkhoff(*cl.jirr_poset, max_chains);
        if (JL.size() != static_cast<int>(m))
            throw InternalError("chain lattice fails the Birkhoff roundtrip");
        for (std::size_t i = 0; i < m; ++i) {
            Mask down = 0;
            for (std::size_t t = 0; t < jirr.size(); ++t)
                if (cl.leq[jirr[t]][i]) down |= Mask{1} << t;
            if (JL.index_of(down) == -1)
                throw InternalError("chain lattice is not distributive");
        }
    } else if (m != 1) {
        throw InternalError("chain lattice without join-irreducibles must be a point");
    }

    cl.cell_poset = cell_poset(g);
    if (!cl.cell_poset) {
        if (m != 1) throw InternalError("cell-free lattice with several chains");
    } else if (!cl.jirr_poset || !cl.jirr_poset->isomorphic_to(*cl.cell_poset)) {
        throw InternalError("join-irreducible chains are not the cell poset");
    }
    return cl;
}

} // namespace chainlat
