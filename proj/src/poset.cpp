#include "chainlat/poset.hpp"

#include "chainlat/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace chainlat {

namespace {

constexpr int kMaxElements = 30;

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

Poset Poset::from_covers(std::vector<std::string> names,
                         const std::vector<std::pair<int, int>>& covers) {
    const int d = static_cast<int>(names.size());
    if (d == 0) throw ParseError("poset needs at least one element");
    if (d > kMaxElements) throw ParseError("too many elements (max 30)");

    Poset p;
    p.names_ = std::move(names);
    std::vector<Mask> succ(d, 0);
    for (auto [u, v] : covers) {
        if (u < 0 || u >= d || v < 0 || v >= d)
            throw ParseError("cover index out of range");
        if (u == v) throw CycleError("element covers itself: " + p.names_[u]);
        succ[u] |= Mask{1} << v;
    }

    // Kahn toposort; leftovers mean a directed cycle.
    std::vector<int> indeg(d, 0), topo;
    for (int u = 0; u < d; ++u)
        for (int v = 0; v < d; ++v)
            if ((succ[u] >> v) & 1u) ++indeg[v];
    for (int u = 0; u < d; ++u)
        if (indeg[u] == 0) topo.push_back(u);
    for (std::size_t i = 0; i < topo.size(); ++i)
        for (int v = 0; v < d; ++v)
            if ((succ[topo[i]] >> v) & 1u && --indeg[v] == 0) topo.push_back(v);
    if (static_cast<int>(topo.size()) != d)
        throw CycleError("declared covers create a directed cycle");

    p.up_.assign(d, 0);
    for (int i = d - 1; i >= 0; --i) {
        const int u = topo[i];
        p.up_[u] = Mask{1} << u;
        for (int v = 0; v < d; ++v)
            if ((succ[u] >> v) & 1u) p.up_[u] |= p.up_[v];
    }
    p.down_.assign(d, 0);
    for (int u = 0; u < d; ++u)
        for (int v = 0; v < d; ++v)
            if ((p.up_[u] >> v) & 1u) p.down_[v] |= Mask{1} << u;

    // canonical covers from the closure
    for (int u = 0; u < d; ++u)
        for (int v = 0; v < d; ++v) {
            if (u == v || !p.leq(u, v)) continue;
            const Mask between = p.up_[u] & p.down_[v] & ~(Mask{1} << u) & ~(Mask{1} << v);
            if (between == 0) p.covers_.emplace_back(u, v);
        }
    std::sort(p.covers_.begin(), p.covers_.end());
    p.ensure_matching(); // immutable afterwards, safe to share
    return p;
}

Poset Poset::parse(std::string_view text) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> cover_names;
    std::vector<int> cover_lines;

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line.erase(std::remove(line.begin(), line.end(), '\r'), line.end());
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "elements") {
            if (toks.size() < 2) throw ParseError("'elements' needs at least one name", lineno);
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (std::find(names.begin(), names.end(), toks[i]) != names.end())
                    throw ParseError("duplicate element name '" + toks[i] + "'", lineno);
                names.push_back(toks[i]);
            }
        } else if (toks[0] == "cover") {
            if (toks.size() != 3) throw ParseError("'cover' needs exactly two names", lineno);
            cover_names.emplace_back(toks[1], toks[2]);
            cover_lines.push_back(lineno);
        } else {
            throw ParseError("unknown directive '" + toks[0] + "'", lineno);
        }
    }
    if (names.empty()) throw ParseError("no 'elements' line");

    auto find = [&](const std::string& s, int ln) {
        auto it = std::find(names.begin(), names.end(), s);
        if (it == names.end()) throw ParseError("unknown element '" + s + "'", ln);
        return static_cast<int>(it - names.begin());
    };
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < cover_names.size(); ++i)
        covers.emplace_back(find(cover_names[i].first, cover_lines[i]),
                            find(cover_names[i].second, cover_lines[i]));
    return from_covers(std::move(names), covers);
}

Poset Poset::chain(int k) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < k; ++i) {
        names.push_back("c" + std::to_string(i));
        if (i > 0) covers.emplace_back(i - 1, i);
    }
    return from_covers(std::move(names), covers);
}

Poset Poset::antichain(int k) {
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i) names.push_back("a" + std::to_string(i));
    return from_covers(std::move(names), {});
}

int Poset::index_of(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

bool Poset::is_downset(Mask m) const {
    for (int u = 0; u < size(); ++u)
        if ((m >> u) & 1u && !subset(down_[u], m)) return false;
    return true;
}

bool Poset::is_antichain(Mask m) const {
    for (int u = 0; u < size(); ++u)
        if ((m >> u) & 1u && (m & (up_[u] | down_[u])) != (Mask{1} << u)) return false;
    return true;
}

void Poset::ensure_matching() const {
    if (matched_) return;
    const int d = size();

    // Kuhn's algorithm on the strict relation u < v.
    std::vector<int> match_left(d, -1), match_right(d, -1);
    std::vector<char> seen(d);
    auto try_augment = [&](auto&& self, int u) -> bool {
        for (int v = 0; v < d; ++v) {
            if (!less(u, v) || seen[v]) continue;
            seen[v] = 1;
            if (match_right[v] == -1 || self(self, match_right[v])) {
                match_left[u] = v;
                match_right[v] = u;
                return true;
            }
        }
        return false;
    };
    int msize = 0;
    for (int u = 0; u < d; ++u) {
        std::fill(seen.begin(), seen.end(), 0);
        if (try_augment(try_augment, u)) ++msize;
    }
    width_ = d - msize;

    // Koenig: alternating reachability from unmatched left vertices.
    std::vector<char> zl(d, 0), zr(d, 0);
    std::vector<int> stack;
    for (int u = 0; u < d; ++u)
        if (match_left[u] == -1) {
            zl[u] = 1;
            stack.push_back(u);
        }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < d; ++v) {
            if (!less(u, v) || match_left[u] == v || zr[v]) continue;
            zr[v] = 1;
            const int w = match_right[v];
            if (w != -1 && !zl[w]) {
                zl[w] = 1;
                stack.push_back(w);
            }
        }
    }
    // cover = (left not in Z) + (right in Z); antichain avoids both
    antichain_.clear();
    for (int u = 0; u < d; ++u)
        if (zl[u] && !zr[u]) antichain_.push_back(u);
    if (static_cast<int>(antichain_.size()) != width_)
        throw InternalError("Koenig antichain size mismatch");
    for (std::size_t i = 0; i < antichain_.size(); ++i)
        for (std::size_t j = i + 1; j < antichain_.size(); ++j)
            if (comparable(antichain_[i], antichain_[j]))
                throw InternalError("Koenig antichain not an antichain");

    chains_.clear();
    std::vector<char> used(d, 0);
    for (int u = 0; u < d; ++u) {
        if (match_right[u] != -1 || used[u]) continue; // chain starts where nothing points in
        std::vector<int> chain;
        for (int x = u; x != -1; x = match_left[x]) {
            chain.push_back(x);
            used[x] = 1;
        }
        chains_.push_back(std::move(chain));
    }
    if (static_cast<int>(chains_.size()) != width_)
        throw InternalError("chain cover count differs from width");
    matched_ = true;
}

int Poset::width() const {
    ensure_matching();
    return width_;
}

const std::vector<int>& Poset::max_antichain() const {
    ensure_matching();
    return antichain_;
}

const std::vector<std::vector<int>>& Poset::chain_decomposition() const {
    ensure_matching();
    return chains_;
}

std::vector<std::vector<int>> Poset::linear_extensions(std::size_t cap) const {
    const int d = size();
    std::vector<std::vector<int>> out;
    std::vector<int> seq;
    Mask placed = 0;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(seq.size()) == d) {
            if (out.size() >= cap) throw BudgetError("max_extensions", static_cast<long long>(cap));
            out.push_back(seq);
            return;
        }
        for (int u = 0; u < d; ++u) {
            if ((placed >> u) & 1u) continue;
            if (!subset(strict_down(u), placed)) continue;
            placed |= Mask{1} << u;
            seq.push_back(u);
            self(self);
            seq.pop_back();
            placed &= ~(Mask{1} << u);
        }
    };
    rec(rec);
    return out;
}

std::uint64_t Poset::linear_extension_count(std::uint64_t cap) const {
    const int d = size();
    std::uint64_t count = 0;
    Mask placed = 0;
    int depth = 0;
    auto rec = [&](auto&& self) -> void {
        if (depth == d) {
            if (++count > cap) throw BudgetError("max_extensions", static_cast<long long>(cap));
            return;
        }
        for (int u = 0; u < d; ++u) {
            if ((placed >> u) & 1u) continue;
            if (!subset(strict_down(u), placed)) continue;
            placed |= Mask{1} << u;
            ++depth;
            self(self);
            --depth;
            placed &= ~(Mask{1} << u);
        }
    };
    rec(rec);
    return count;
}

bool Poset::isomorphic_to(const Poset& other) const {
    const int d = size();
    if (d != other.size()) return false;
    if (covers_.size() != other.covers_.size()) return false;

    auto signature = [](const Poset& p, int u) {
        return std::array<int, 2>{popcount(p.down_[u]), popcount(p.up_[u])};
    };
    auto profile = [&](const Poset& p) {
        std::vector<std::array<int, 2>> sig;
        for (int u = 0; u < p.size(); ++u) sig.push_back(signature(p, u));
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    if (profile(*this) != profile(other)) return false;

    std::vector<int> map(d, -1);
    std::vector<char> used(d, 0);
    auto rec = [&](auto&& self, int u) -> bool {
        if (u == d) return true;
        for (int v = 0; v < d; ++v) {
            if (used[v] || signature(*this, u) != signature(other, v)) continue;
            bool ok = true;
            for (int w = 0; w < u && ok; ++w)
                ok = (leq(u, w) == other.leq(v, map[w])) && (leq(w, u) == other.leq(map[w], v));
            if (!ok) continue;
            map[u] = v;
            used[v] = 1;
            if (self(self, u + 1)) return true;
            used[v] = 0;
            map[u] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

std::string Poset::canonical_key() const {
    const int d = size();
    if (d > 8) throw InternalError("canonical_key supports at most 8 elements");
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string enc(static_cast<std::size_t>(d) * d, '0');
        for (int u = 0; u < d; ++u)
            for (int v = 0; v < d; ++v)
                if (leq(perm[u], perm[v])) enc[static_cast<std::size_t>(u) * d + v] = '1';
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(d) + ":" + best;
}

bool Poset::operator==(const Poset& other) const {
    return names_ == other.names_ && up_ == other.up_;
}

} // namespace chainlat
