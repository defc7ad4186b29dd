#include "chainlat/sorting.hpp"

#include "chainlat/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace chainlat {

SortContext SortContext::identity(int num_vars) {
    SortContext ctx;
    ctx.pos.resize(num_vars);
    std::iota(ctx.pos.begin(), ctx.pos.end(), 0);
    return ctx;
}

SortContext SortContext::grid(const GridEmbedding& g) {
    SortContext ctx;
    ctx.pos = g.order_pos;
    return ctx;
}

std::pair<Monomial, Monomial> sort_pair(const Monomial& u, const Monomial& v,
                                        const SortContext& ctx) {
    if (u.degree() != v.degree())
        throw InternalError("sort_pair needs monomials of equal degree");
    std::vector<int> word;
    word.reserve(u.word.size() + v.word.size());
    word.insert(word.end(), u.word.begin(), u.word.end());
    word.insert(word.end(), v.word.begin(), v.word.end());
    std::sort(word.begin(), word.end(), [&](int x, int y) { return ctx.less(x, y); });

    std::vector<int> odd, even;
    for (std::size_t k = 0; k < word.size(); ++k)
        (k % 2 == 0 ? odd : even).push_back(word[k]);
    return {Monomial(std::move(odd)), Monomial(std::move(even))};
}

bool is_sorted_pair(const Monomial& u, const Monomial& v, const SortContext& ctx) {
    return sort_pair(u, v, ctx) == std::make_pair(u, v);
}

SortabilityResult is_sortable_set(const std::vector<Monomial>& B, const SortContext& ctx) {
    std::set<Monomial> members(B.begin(), B.end());
    for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = i; j < B.size(); ++j) {
            auto [v1, v2] = sort_pair(B[i], B[j], ctx);
            if (members.count(v1) && members.count(v2)) continue;
            SortabilityResult res;
            res.sortable = false;
            res.witness = SortabilityWitness{static_cast<int>(i), static_cast<int>(j),
                                             std::move(v1), std::move(v2)};
            return res;
        }
    return {true, std::nullopt};
}

std::vector<SortingRelation> sorting_relations(const std::vector<Monomial>& B,
                                               const SortContext& ctx) {
    std::map<Monomial, int> index; // 1-based
    for (std::size_t i = 0; i < B.size(); ++i) index[B[i]] = static_cast<int>(i) + 1;

    std::vector<SortingRelation> out;
    for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = i + 1; j < B.size(); ++j) {
            auto [v1, v2] = sort_pair(B[i], B[j], ctx);
            if ((v1 == B[i] && v2 == B[j]) || (v1 == B[j] && v2 == B[i]))
                continue; // sorted as an unordered pair
            auto it1 = index.find(v1);
            auto it2 = index.find(v2);
            if (it1 == index.end() || it2 == index.end())
                throw NotSortableError("sorting leaves the generating set");
            out.push_back({{static_cast<int>(i) + 1, static_cast<int>(j) + 1},
                           {it1->second, it2->second}});
        }
    return out;
}

HibiSystem hibi_sort_monomials(const Poset& p, const DistLattice& L) {
    HibiSystem sys;
    const auto& chains = p.chain_decomposition();
    const int n = static_cast<int>(chains.size());

    std::vector<int> block_start(n);
    for (int i = 0; i < n; ++i) {
        block_start[i] = sys.num_vars;
        sys.block_sizes.push_back(static_cast<int>(chains[i].size()));
        for (int k = 0; k <= sys.block_sizes.back(); ++k)
            sys.var_names.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(k));
        sys.num_vars += sys.block_sizes.back() + 1;
    }
    sys.ctx = SortContext::identity(sys.num_vars);

    std::vector<Mask> chain_mask(n, 0);
    for (int i = 0; i < n; ++i)
        for (int x : chains[i]) chain_mask[i] |= Mask{1} << x;

    for (int e = 0; e < L.size(); ++e) {
        std::vector<int> word(n);
        for (int i = 0; i < n; ++i)
            word[i] = block_start[i] + popcount(L.ideal(e) & chain_mask[i]);
        sys.monomials.push_back(Monomial(std::move(word)));
    }
    for (int e = 0; e < L.size(); ++e)
        for (int f = e + 1; f < L.size(); ++f)
            if (sys.monomials[e] == sys.monomials[f])
                throw InternalError("chain-count encoding of ideals is not injective");
    return sys;
}

HibiVerification verify_hibi_sorting(const Poset& p, std::size_t max_ideals) {
    const DistLattice L = DistLattice::birkhoff(p, max_ideals);
    const HibiSystem sys = hibi_sort_monomials(p, L);

    auto fail = [](std::string why) { return HibiVerification{false, std::move(why)}; };

    for (int e = 0; e < L.size(); ++e)
        for (int f = e; f < L.size(); ++f) {
            auto [v1, v2] = sort_pair(sys.monomials[e], sys.monomials[f], sys.ctx);
            if (v1 != sys.monomials[L.meet(e, f)] || v2 != sys.monomials[L.join(e, f)])
                return fail("sort(m_I, m_J) differs from (m_meet, m_join) at (" +
                            L.label(e) + ", " + L.label(f) + ")");
        }

    if (!is_sortable_set(sys.monomials, sys.ctx).sortable)
        return fail("monomial set is not sortable");

    // relation sets as unordered-lhs -> unordered-rhs maps, 0-based
    std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> sorting, hibi;
    for (const auto& rel : sorting_relations(sys.monomials, sys.ctx)) {
        auto rhs = std::minmax(rel.rhs.first - 1, rel.rhs.second - 1);
        sorting.insert({{rel.lhs.first - 1, rel.lhs.second - 1}, {rhs.first, rhs.second}});
    }
    for (int e = 0; e < L.size(); ++e)
        for (int f = e + 1; f < L.size(); ++f) {
            if (L.leq(e, f) || L.leq(f, e)) continue;
            auto rhs = std::minmax(L.meet(e, f), L.join(e, f));
            hibi.insert({{e, f}, {rhs.first, rhs.second}});
        }
    if (sorting != hibi) return fail("sorting relations differ from the Hibi relations");
    return {};
}

} // namespace chainlat
