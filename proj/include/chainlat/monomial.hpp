#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace chainlat {

/// Monomial in an ambient polynomial ring, stored as the sorted word of its
/// variable ids (with multiplicity).
struct Monomial {
    std::vector<int> word;

    Monomial() = default;
    explicit Monomial(std::vector<int> w) : word(std::move(w)) {
        std::sort(word.begin(), word.end());
    }

    int degree() const { return static_cast<int>(word.size()); }
    bool squarefree() const {
        return std::adjacent_find(word.begin(), word.end()) == word.end();
    }

    std::vector<int> exponents(int ambient_dim) const {
        std::vector<int> e(ambient_dim, 0);
        for (int v : word) ++e[v];
        return e;
    }

    friend Monomial operator*(const Monomial& x, const Monomial& y) {
        Monomial out;
        out.word.resize(x.word.size() + y.word.size());
        std::merge(x.word.begin(), x.word.end(), y.word.begin(), y.word.end(),
                   out.word.begin());
        return out;
    }

    bool operator==(const Monomial& o) const { return word == o.word; }
    bool operator<(const Monomial& o) const { return word < o.word; }
};

} // namespace chainlat
