#include "chainlat/toric.hpp"

#include "chainlat/chains.hpp"
#include "chainlat/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <unordered_set>

namespace chainlat {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

bool multiset_disjoint(const TMono& a, const TMono& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        (a[i] < b[j] ? i : j)++;
    }
    return true;
}

} // namespace

GeneratorMap::GeneratorMap(int ambient, std::vector<Monomial> generators)
    : ambient_dim(ambient), gens(std::move(generators)) {
    for (const auto& u : gens) {
        if (u.degree() != degree())
            throw InternalError("generators must share a degree");
        for (int v : u.word)
            if (v < 0 || v >= ambient_dim) throw InternalError("variable out of range");
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (gens[i] == gens[j]) throw InternalError("generators must be distinct");
}

std::vector<int> GeneratorMap::image(const TMono& t) const {
    std::vector<int> e(ambient_dim, 0);
    for (int idx : t)
        for (int v : gens[idx].word) ++e[v];
    return e;
}

GeneratorMap chain_generators(const DistLattice& L, std::size_t max_chains) {
    std::vector<Monomial> gens;
    for (const auto& c : maximal_chains(L, max_chains)) {
        auto mono = chain_monomial(c);
        // shift interior labels t_1..t_s to variable ids 0..s-1
        for (int& v : mono.word) --v;
        gens.push_back(std::move(mono));
    }
    return GeneratorMap(L.interior_size(), std::move(gens));
}

std::size_t MarkovBasis::total() const {
    std::size_t n = 0;
    for (const auto& [d, bins] : by_degree) n += bins.size();
    return n;
}

int MarkovBasis::max_generator_degree() const {
    int best = 0;
    for (const auto& [d, bins] : by_degree)
        if (!bins.empty()) best = std::max(best, d);
    return best;
}

std::vector<TMono> fiber(const GeneratorMap& g, const Monomial& target, int d,
                         std::uint64_t max_fiber_nodes) {
    const int m = g.count();
    const int r = g.degree();
    if (target.degree() != d * r)
        throw InternalError("fiber target has the wrong degree");
    if (r == 0) return d >= 0 ? std::vector<TMono>{TMono{}} : std::vector<TMono>{};

    // generators in word order; the next factor of a word-sorted multiset
    // always starts at the lowest remaining variable
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return g.gens[x].word < g.gens[y].word; });
    std::vector<std::vector<int>> gexp;
    gexp.reserve(m);
    for (int k = 0; k < m; ++k) gexp.push_back(g.gens[order[k]].exponents(g.ambient_dim));

    std::vector<int> remaining = target.exponents(g.ambient_dim);
    std::vector<TMono> out;
    TMono picked;
    std::uint64_t nodes = 0;

    auto rec = [&](auto&& self, int from, int depth) -> void {
        if (++nodes > max_fiber_nodes)
            throw BudgetError("max_fiber_nodes", static_cast<long long>(max_fiber_nodes));
        if (depth == d) {
            TMono t = picked;
            std::sort(t.begin(), t.end());
            out.push_back(std::move(t));
            return;
        }
        int low = -1;
        for (int v = 0; v < g.ambient_dim; ++v)
            if (remaining[v] > 0) {
                low = v;
                break;
            }
        for (int k = from; k < m; ++k) {
            if (g.gens[order[k]].word.front() != low) continue;
            for (int v = 0; v < g.ambient_dim; ++v) remaining[v] -= gexp[k][v];
            bool valid = true;
            for (int v = 0; v < g.ambient_dim && valid; ++v)
                if (remaining[v] < 0) valid = false;
            if (valid) {
                picked.push_back(order[k]);
                self(self, k, depth + 1);
                picked.pop_back();
            }
            for (int v = 0; v < g.ambient_dim; ++v) remaining[v] += gexp[k][v];
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

int degrevlex_cmp(const std::vector<int>& a, const std::vector<int>& b) {
    const long long da = std::accumulate(a.begin(), a.end(), 0ll);
    const long long db = std::accumulate(b.begin(), b.end(), 0ll);
    if (da != db) return da < db ? -1 : 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1; // more of the last variable = smaller
    return 0;
}

Binomial oriented(const GeneratorMap& g, const TMono& x, const TMono& y) {
    if (g.image(x) != g.image(y))
        throw InternalError("binomial sides map to different monomials");
    std::vector<int> ex(g.count(), 0), ey(g.count(), 0);
    for (int i : x) ++ex[i];
    for (int i : y) ++ey[i];
    if (degrevlex_cmp(ex, ey) >= 0) return {x, y};
    return {y, x};
}

} // namespace

MarkovBasis minimal_generators(const GeneratorMap& g, int max_degree,
                               std::uint64_t max_fiber_nodes) {
    MarkovBasis basis;
    const int m = g.count();
    if (m == 0 || g.degree() == 0) return basis;

    std::uint64_t nodes = 0;
    for (int d = 2; d <= max_degree; ++d) {
        std::unordered_map<std::vector<int>, std::vector<TMono>, VecHash> fibers;
        std::vector<int> image(g.ambient_dim, 0);
        TMono picked;
        auto scan = [&](auto&& self, int from) -> void {
            if (++nodes > max_fiber_nodes)
                throw BudgetError("max_fiber_nodes",
                                  static_cast<long long>(max_fiber_nodes));
            if (static_cast<int>(picked.size()) == d) {
                fibers[image].push_back(picked);
                return;
            }
            for (int k = from; k < m; ++k) {
                for (int v : g.gens[k].word) ++image[v];
                picked.push_back(k);
                self(self, k);
                picked.pop_back();
                for (int v : g.gens[k].word) --image[v];
            }
        };
        scan(scan, 0);

        // deterministic fiber order
        std::vector<const std::vector<int>*> keys;
        for (const auto& [key, pts] : fibers)
            if (pts.size() > 1) keys.push_back(&key);
        std::sort(keys.begin(), keys.end(),
                  [](const auto* a, const auto* b) { return *a < *b; });

        std::vector<Binomial> found;
        for (const auto* key : keys) {
            auto& pts = fibers[*key];
            std::sort(pts.begin(), pts.end());
            const int n = static_cast<int>(pts.size());
            std::vector<int> parent(n);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (!multiset_disjoint(pts[i], pts[j])) parent[find(i)] = find(j);
            // one binomial joins each extra component to the first one
            std::vector<int> rep; // lex-least point of each component
            std::vector<char> seen(n, 0);
            for (int i = 0; i < n; ++i) {
                int root = find(i);
                if (!seen[root]) {
                    seen[root] = 1;
                    rep.push_back(i);
                }
            }
            for (std::size_t c = 1; c < rep.size(); ++c)
                found.push_back(oriented(g, pts[rep[c]], pts[rep[0]]));
        }
        if (!found.empty()) basis.by_degree[d] = std::move(found);
    }
    basis.truncated = true; // a bounded scan never proves completeness
    return basis;
}

bool is_quadratically_generated(const MarkovBasis& basis) {
    return basis.max_generator_degree() <= 2;
}

MarkovBasis chain_minimal_generators(const DistLattice& L, int max_degree,
                                     std::size_t max_chains,
                                     std::uint64_t max_fiber_nodes) {
    auto basis =
        minimal_generators(chain_generators(L, max_chains), max_degree, max_fiber_nodes);
    // quadratic generation is certain in the planar case, so the scan is
    // complete there; otherwise generators may hide above the bound
    basis.truncated = !(L.is_planar() && max_degree >= 2);
    return basis;
}

bool is_quadratically_generated(const DistLattice& L, int max_degree,
                                std::size_t max_chains,
                                std::uint64_t max_fiber_nodes) {
    const auto basis =
        minimal_generators(chain_generators(L, max_chains), max_degree, max_fiber_nodes);
    const bool quadratic = is_quadratically_generated(basis);
    if (max_degree >= std::max(3, L.source().width()) && quadratic != L.is_planar())
        throw InternalError("quadratic generation disagrees with planarity");
    return quadratic;
}

namespace {

using Dense = std::vector<int>;

struct DenseBinomial {
    Dense lead, tail;
};

Dense to_dense(const TMono& t, int m) {
    Dense e(m, 0);
    for (int i : t) ++e[i];
    return e;
}

TMono to_tmono(const Dense& e) {
    TMono t;
    for (int i = 0; i < static_cast<int>(e.size()); ++i)
        for (int k = 0; k < e[i]; ++k) t.push_back(i);
    return t;
}

bool divides(const Dense& a, const Dense& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool coprime(const Dense& a, const Dense& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

DenseBinomial orient_dense(Dense a, Dense b) {
    if (degrevlex_cmp(a, b) >= 0) return {std::move(a), std::move(b)};
    return {std::move(b), std::move(a)};
}

// top-reduces both monomials; empty return means the binomial vanished
std::optional<DenseBinomial> normal_form(Dense a, Dense b,
                                         const std::vector<DenseBinomial>& basis) {
    bool progress = true;
    while (progress) {
        if (a == b) return std::nullopt;
        progress = false;
        Dense* lead = degrevlex_cmp(a, b) >= 0 ? &a : &b;
        for (const auto& g : basis) {
            if (!divides(g.lead, *lead)) continue;
            for (std::size_t i = 0; i < lead->size(); ++i)
                (*lead)[i] += g.tail[i] - g.lead[i];
            progress = true;
            break;
        }
    }
    return orient_dense(std::move(a), std::move(b));
}

} // namespace

GroebnerResult buchberger(const std::vector<Binomial>& bins, int num_gens,
                          std::size_t max_basis) {
    GroebnerResult res;
    std::vector<DenseBinomial> basis;
    for (const auto& b : bins)
        basis.push_back(orient_dense(to_dense(b.plus, num_gens), to_dense(b.minus, num_gens)));

    const std::size_t input_count = basis.size();

    // certification of the input set
    res.input_was_groebner = true;
    for (std::size_t i = 0; i < input_count && res.input_was_groebner; ++i)
        for (std::size_t j = i + 1; j < input_count && res.input_was_groebner; ++j) {
            if (coprime(basis[i].lead, basis[j].lead)) continue;
            Dense lcm(num_gens);
            for (int v = 0; v < num_gens; ++v)
                lcm[v] = std::max(basis[i].lead[v], basis[j].lead[v]);
            Dense s1 = lcm, s2 = lcm;
            for (int v = 0; v < num_gens; ++v) {
                s1[v] += basis[i].tail[v] - basis[i].lead[v];
                s2[v] += basis[j].tail[v] - basis[j].lead[v];
            }
            if (normal_form(std::move(s1), std::move(s2), basis))
                res.input_was_groebner = false;
        }
    res.input_was_reduced = res.input_was_groebner;
    for (std::size_t i = 0; i < input_count && res.input_was_reduced; ++i)
        for (std::size_t j = 0; j < input_count && res.input_was_reduced; ++j) {
            if (i == j) continue;
            if (divides(basis[i].lead, basis[j].lead) ||
                divides(basis[i].lead, basis[j].tail))
                res.input_was_reduced = false;
        }

    // completion, fixed pair-queue order for determinism
    std::vector<std::pair<std::size_t, std::size_t>> queue;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) queue.emplace_back(i, j);
    for (std::size_t q = 0; q < queue.size(); ++q) {
        auto [i, j] = queue[q];
        if (coprime(basis[i].lead, basis[j].lead)) continue;
        Dense lcm(num_gens);
        for (int v = 0; v < num_gens; ++v)
            lcm[v] = std::max(basis[i].lead[v], basis[j].lead[v]);
        Dense s1 = lcm, s2 = lcm;
        for (int v = 0; v < num_gens; ++v) {
            s1[v] += basis[i].tail[v] - basis[i].lead[v];
            s2[v] += basis[j].tail[v] - basis[j].lead[v];
        }
        auto nf = normal_form(std::move(s1), std::move(s2), basis);
        if (!nf) continue;
        basis.push_back(std::move(*nf));
        if (basis.size() > max_basis)
            throw BudgetError("max_groebner_basis", static_cast<long long>(max_basis));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k)
            queue.emplace_back(k, basis.size() - 1);
    }

    for (const auto& g : basis)
        res.basis.push_back({to_tmono(g.lead), to_tmono(g.tail)});
    return res;
}

bool initial_ideal_squarefree(const std::vector<Binomial>& gb) {
    for (const auto& b : gb) {
        Monomial lead{b.plus}; // plus is the leading side by construction
        if (!lead.squarefree()) return false;
    }
    return true;
}

std::uint64_t hilbert_by_fibers(const GeneratorMap& g, int d,
                                std::uint64_t max_fiber_nodes) {
    if (d == 0) return 1;
    const int m = g.count();
    if (m == 0) return 0;
    if (g.degree() == 0) return 1;

    std::unordered_set<std::vector<int>, VecHash> images;
    std::vector<int> image(g.ambient_dim, 0);
    std::uint64_t nodes = 0;
    auto scan = [&](auto&& self, int from, int depth) -> void {
        if (++nodes > max_fiber_nodes)
            throw BudgetError("max_fiber_nodes", static_cast<long long>(max_fiber_nodes));
        if (depth == d) {
            images.insert(image);
            return;
        }
        for (int k = from; k < m; ++k) {
            for (int v : g.gens[k].word) ++image[v];
            self(self, k, depth + 1);
            for (int v : g.gens[k].word) --image[v];
        }
    };
    scan(scan, 0, 0);
    return images.size();
}

} // namespace chainlat
