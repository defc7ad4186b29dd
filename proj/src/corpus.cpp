#include "chainlat/corpus.hpp"

#include "chainlat/errors.hpp"

#include <algorithm>
#include <map>

namespace chainlat {

namespace {

std::vector<Poset> posets_of_size(int d) {
    if (d == 1) return {Poset::antichain(1)};

    // Naturally labelled strict relations live above the diagonal; every
    // isomorphism class has at least one such labelling.
    std::vector<std::vector<int>> bit(d, std::vector<int>(d, -1));
    int npairs = 0;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) bit[a][b] = npairs++;

    std::map<std::string, Poset> reps;
    for (std::uint32_t rel = 0; rel < (1u << npairs); ++rel) {
        auto has = [&](int u, int v) { return (rel >> bit[u][v]) & 1u; };
        bool transitive = true;
        for (int a = 0; a < d && transitive; ++a)
            for (int b = a + 1; b < d && transitive; ++b)
                for (int c = b + 1; c < d && transitive; ++c)
                    if (has(a, b) && has(b, c) && !has(a, c)) transitive = false;
        if (!transitive) continue;
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b)
                if (has(a, b)) pairs.emplace_back(a, b);
        std::vector<std::string> names;
        for (int i = 0; i < d; ++i) names.push_back("p" + std::to_string(i));
        Poset p = Poset::from_covers(std::move(names), pairs);
        reps.emplace(p.canonical_key(), std::move(p));
    }
    std::vector<Poset> out;
    for (auto& [key, p] : reps) out.push_back(std::move(p));
    return out;
}

} // namespace

std::vector<Poset> poset_corpus(int max_size) {
    if (max_size > 6) throw BudgetError("corpus_max_size", 6);
    std::vector<Poset> out;
    for (int d = 1; d <= max_size; ++d) {
        auto batch = posets_of_size(d);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

} // namespace chainlat
