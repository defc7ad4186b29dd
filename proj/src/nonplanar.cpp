#include "chainlat/nonplanar.hpp"

#include "chainlat/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace chainlat {

namespace {

Chain greedy_chain_through(const DistLattice& L, int low, int high) {
    Chain down;
    for (int x = low; ; x = L.lower_covers(x).front()) {
        down.push_back(x);
        if (L.lower_covers(x).empty()) break;
    }
    std::reverse(down.begin(), down.end());
    down.push_back(high);
    for (int x = high; !L.upper_covers(x).empty();) {
        x = L.upper_covers(x).front();
        down.push_back(x);
    }
    return down;
}

void check_induced_cycle(const DistLattice& L, const std::vector<int>& low,
                         const std::vector<int>& high) {
    const int s = static_cast<int>(low.size());
    if (s < 3 || static_cast<int>(high.size()) != s)
        throw WidthError("induced cycle needs at least three elements per rank");

    const int a = L.rank(low.front());
    for (int x : low)
        if (L.rank(x) != a) throw InternalError("cycle low vertices of mixed rank");
    for (int x : high)
        if (L.rank(x) != a + 1) throw InternalError("cycle high vertices of mixed rank");
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            if (low[i] == low[j] || high[i] == high[j])
                throw InternalError("cycle vertices repeat");

    // exactly the 2s cycle edges; every listed vertex of degree two
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            const bool edge = subset(L.ideal(low[i]), L.ideal(high[j]));
            const bool wanted = j == i || (j + 1) % s == i;
            if (edge != wanted)
                throw InternalError(wanted ? "cycle edge missing" : "cycle has a chord");
        }
}

CycleWitness assemble_witness(const DistLattice& L, std::vector<int> low,
                              std::vector<int> high, std::size_t max_chains) {
    check_induced_cycle(L, low, high);
    const int s = static_cast<int>(low.size());

    CycleWitness w;
    w.rank_a = L.rank(low.front());
    w.base_ideal = L.ideal(low.front());
    for (int x : low) w.base_ideal &= L.ideal(x);
    w.low = std::move(low);
    w.high = std::move(high);

    const int a = w.rank_a;
    for (int i = 0; i < s; ++i)
        w.chains_main.push_back(greedy_chain_through(L, w.low[i], w.high[i]));
    for (int i = 0; i < s; ++i) {
        const Chain& ci = w.chains_main[i];
        const Chain& prev = w.chains_main[(i + s - 1) % s];
        Chain hat(ci.begin(), ci.begin() + a + 1);
        hat.insert(hat.end(), prev.begin() + a + 1, prev.end());
        w.chains_hat.push_back(std::move(hat));
    }

    const auto chains = maximal_chains(L, max_chains);
    std::map<Chain, int> index;
    for (std::size_t i = 0; i < chains.size(); ++i) index[chains[i]] = static_cast<int>(i);
    auto locate = [&](const Chain& c) {
        auto it = index.find(c);
        if (it == index.end()) throw InternalError("witness chain is not maximal");
        return it->second;
    };
    for (const auto& c : w.chains_main) w.binomial.plus.push_back(locate(c));
    for (const auto& c : w.chains_hat) w.binomial.minus.push_back(locate(c));
    std::sort(w.binomial.plus.begin(), w.binomial.plus.end());
    std::sort(w.binomial.minus.begin(), w.binomial.minus.end());
    if (w.binomial.plus == w.binomial.minus)
        throw InternalError("cycle witness degenerated to zero");
    return w;
}

} // namespace

std::vector<int> find_antichain(const Poset& p, int n) {
    if (n > p.width())
        throw WidthError("poset width " + std::to_string(p.width()) +
                         " is below the requested antichain size " + std::to_string(n));
    // first antichain in mask order; the width certificate guarantees one
    for (Mask m = 0; m <= p.all(); ++m) {
        if (popcount(m) != n || !p.is_antichain(m)) continue;
        std::vector<int> out;
        for (int x = 0; x < p.size(); ++x)
            if ((m >> x) & 1u) out.push_back(x);
        return out;
    }
    throw InternalError("antichain below the width must exist");
}

CycleWitness build_cycle_witness(const DistLattice& L, const std::vector<int>& antichain,
                                 std::size_t max_chains) {
    const int s = static_cast<int>(antichain.size());
    if (s < 3) throw WidthError("cycle witness needs an antichain of size at least 3");
    const Poset& P = L.source();

    Mask base = 0;
    for (int p : antichain) base |= P.strict_down(p);
    for (int p : antichain)
        if ((base >> p) & 1u) throw InternalError("antichain is not an antichain");

    std::vector<int> low, high;
    for (int i = 0; i < s; ++i) {
        const int t = L.index_of(base | (Mask{1} << antichain[i]));
        if (t == -1) throw InternalError("antichain ideal missing from the lattice");
        low.push_back(t);
    }
    for (int i = 0; i < s; ++i) {
        const Mask pair = (Mask{1} << antichain[i]) | (Mask{1} << antichain[(i + 1) % s]);
        const int t = L.index_of(base | pair);
        if (t == -1) throw InternalError("antichain pair ideal missing from the lattice");
        high.push_back(t);
    }

    CycleWitness w = assemble_witness(L, std::move(low), std::move(high), max_chains);
    w.antichain = antichain;
    return w;
}

CycleWitness witness_from_cycle(const DistLattice& L, const std::vector<int>& low,
                                const std::vector<int>& high, std::size_t max_chains) {
    return assemble_witness(L, low, high, max_chains);
}

WitnessVerification verify_witness(const DistLattice& L, const CycleWitness& w,
                                   std::size_t max_chains, std::uint64_t max_fiber_nodes) {
    const GeneratorMap g = chain_generators(L, max_chains);
    const int s = w.binomial.degree();

    WitnessVerification v;
    const auto img_plus = g.image(w.binomial.plus);
    v.in_kernel = img_plus == g.image(w.binomial.minus);
    if (!v.in_kernel) return v;

    std::vector<int> word;
    for (int var = 0; var < g.ambient_dim; ++var)
        for (int k = 0; k < img_plus[var]; ++k) word.push_back(var);
    const auto points = fiber(g, Monomial(std::move(word)), s, max_fiber_nodes);
    v.fiber_size = points.size();

    const auto chains = maximal_chains(L, max_chains);

    // each point must use one of the two perfect matchings on the cycle
    std::vector<std::pair<int, int>> m1, m2;
    for (int i = 0; i < s; ++i) {
        m1.emplace_back(w.low[i], w.high[i]);
        m2.emplace_back(w.low[i], w.high[(i + s - 1) % s]);
    }
    std::sort(m1.begin(), m1.end());
    std::sort(m2.begin(), m2.end());
    v.matchings_restricted = true;
    for (const auto& pt : points) {
        std::vector<std::pair<int, int>> used;
        for (int idx : pt)
            used.emplace_back(chains[idx][w.rank_a], chains[idx][w.rank_a + 1]);
        std::sort(used.begin(), used.end());
        if (used != m1 && used != m2) v.matchings_restricted = false;
    }

    auto find_point = [&](const TMono& t) {
        const auto it = std::lower_bound(points.begin(), points.end(), t);
        if (it == points.end() || *it != t)
            throw InternalError("witness monomial missing from its own fiber");
        return static_cast<int>(it - points.begin());
    };
    const int ip = find_point(w.binomial.plus);
    const int im = find_point(w.binomial.minus);

    const int n = static_cast<int>(points.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto disjoint = [](const TMono& a, const TMono& b) {
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return false;
            (a[i] < b[j] ? i : j)++;
        }
        return true;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!disjoint(points[i], points[j])) parent[find(i)] = find(j);
    v.minimal = find(ip) != find(im);
    return v;
}

std::pair<std::vector<Mask>, std::vector<Mask>> boolean5_long_cycle() {
    auto mask = [](std::initializer_list<int> atoms) {
        Mask m = 0;
        for (int a : atoms) m |= Mask{1} << (a - 1);
        return m;
    };
    std::vector<Mask> low = {mask({1, 2}), mask({1, 3}), mask({1, 4}),
                             mask({4, 5}), mask({3, 5}), mask({2, 5})};
    std::vector<Mask> high = {mask({1, 2, 3}), mask({1, 3, 4}), mask({1, 4, 5}),
                              mask({3, 4, 5}), mask({2, 3, 5}), mask({1, 2, 5})};
    return {low, high};
}

std::optional<std::pair<std::vector<int>, std::vector<int>>>
find_induced_cycle(const DistLattice& L, int rank_a, int s, std::uint64_t max_nodes) {
    if (s < 3) return std::nullopt;
    std::vector<int> lows, highs;
    for (int i = 0; i < L.size(); ++i) {
        if (L.rank(i) == rank_a) lows.push_back(i);
        if (L.rank(i) == rank_a + 1) highs.push_back(i);
    }
    auto adjacent = [&](int lo, int hi) { return subset(L.ideal(lo), L.ideal(hi)); };

    // path low0 h0 low1 h1 ... ; every (low, high) pair is constrained the
    // moment its later vertex enters, so a closed path is itself induced
    std::uint64_t nodes = 0;
    std::vector<int> low_path, high_path;

    auto high_ok = [&](int cand, bool closing) {
        if (std::find(high_path.begin(), high_path.end(), cand) != high_path.end())
            return false;
        for (std::size_t k = 0; k < low_path.size(); ++k) {
            const bool want = k + 1 == low_path.size() || (closing && k == 0);
            if (adjacent(low_path[k], cand) != want) return false;
        }
        return true;
    };
    auto low_ok = [&](int cand) {
        if (cand <= low_path.front()) return false; // low0 is the cycle minimum
        if (std::find(low_path.begin(), low_path.end(), cand) != low_path.end())
            return false;
        for (std::size_t k = 0; k < high_path.size(); ++k) {
            const bool want = k + 1 == high_path.size();
            if (adjacent(cand, high_path[k]) != want) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self) -> bool {
        if (++nodes > max_nodes)
            throw BudgetError("max_cycle_nodes", static_cast<long long>(max_nodes));
        const bool closing = static_cast<int>(low_path.size()) == s;
        for (int h : highs) {
            if (!high_ok(h, closing)) continue;
            if (closing) {
                if (high_path.front() > h) continue; // fix the orientation
                high_path.push_back(h);
                return true;
            }
            high_path.push_back(h);
            for (int lo : lows) {
                if (!low_ok(lo)) continue;
                low_path.push_back(lo);
                if (self(self)) return true;
                low_path.pop_back();
            }
            high_path.pop_back();
        }
        return false;
    };

    for (int start : lows) {
        low_path.assign(1, start);
        high_path.clear();
        if (rec(rec)) {
            check_induced_cycle(L, low_path, high_path);
            return std::make_pair(low_path, high_path);
        }
    }
    return std::nullopt;
}

} // namespace chainlat
