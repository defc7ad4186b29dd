#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chainlat/corpus.hpp"
#include "chainlat/errors.hpp"
#include "chainlat/sorting.hpp"
#include "testutil.hpp"

#include <set>

using namespace chainlat;

namespace {
const std::size_t kIdeals = 1u << 16;
const std::size_t kChains = 1000000;

DistLattice lattice(const std::string& fixture) {
    return DistLattice::birkhoff(testutil::load(fixture), kIdeals);
}

Monomial from_labels(std::initializer_list<int> labels) {
    return Monomial(std::vector<int>(labels));
}
} // namespace

TEST_CASE("sorting the unsorted pair of the worked example, label order") {
    // under the t-index order the interleaving gives (t1t3t5, t2t3t6)
    const auto ctx = SortContext::identity(8);
    const auto [v1, v2] = sort_pair(from_labels({1, 3, 6}), from_labels({2, 3, 5}), ctx);
    CHECK(v1 == from_labels({1, 3, 5}));
    CHECK(v2 == from_labels({2, 3, 6}));
}

TEST_CASE("sorting under the grid order returns meet and join") {
    const DistLattice L = lattice("fig1.poset");
    const GridEmbedding g = grid_embedding(L);
    const auto ctx = SortContext::grid(g);
    // same unordered pair; the grid order lists t2 before t1 and t6 before t5
    const auto [v1, v2] = sort_pair(from_labels({1, 3, 6}), from_labels({2, 3, 5}), ctx);
    CHECK(v1 == from_labels({2, 3, 6}));
    CHECK(v2 == from_labels({1, 3, 5}));

    const auto chains = maximal_chains(L, kChains);
    for (const auto& c : chains)
        for (const auto& d : chains) {
            const auto got = sort_pair(chain_monomial(c), chain_monomial(d), ctx);
            CHECK(got.first == chain_monomial(chain_meet(c, d, g)));
            CHECK(got.second == chain_monomial(chain_join(c, d, g)));
        }
}

TEST_CASE("sorting is idempotent, symmetric, and product preserving") {
    for (const auto& p : poset_corpus(4)) {
        const DistLattice L = DistLattice::birkhoff(p, kIdeals);
        const auto monos = chain_monomials(maximal_chains(L, kChains));
        const auto ctx = SortContext::identity(L.size());
        for (const auto& u : monos)
            for (const auto& v : monos) {
                const auto [a, b] = sort_pair(u, v, ctx);
                CHECK(a * b == u * v);
                CHECK(sort_pair(a, b, ctx) == std::make_pair(a, b));
                CHECK(sort_pair(v, u, ctx) == std::make_pair(a, b));
                CHECK(sort_pair(u, u, ctx) == std::make_pair(u, u));
            }
    }
}

TEST_CASE("degree mismatch is rejected") {
    const auto ctx = SortContext::identity(4);
    CHECK_THROWS_AS(sort_pair(from_labels({1}), from_labels({1, 2}), ctx),
                    InternalError);
}

TEST_CASE("sortability of the named generator sets") {
    const DistLattice fig1 = lattice("fig1.poset");
    const auto monos = chain_monomials(maximal_chains(fig1, kChains));
    CHECK(is_sortable_set(monos, SortContext::grid(grid_embedding(fig1))).sortable);

    // squarefree quadrics in four variables
    const std::vector<Monomial> veronese = {
        Monomial({0, 1}), Monomial({0, 2}), Monomial({0, 3}),
        Monomial({1, 2}), Monomial({1, 3}), Monomial({2, 3})};
    CHECK(is_sortable_set(veronese, SortContext::identity(4)).sortable);

    // the boolean lattice on three atoms fails with a witness
    const DistLattice b3 = lattice("b3.poset");
    const auto b3_monos = chain_monomials(maximal_chains(b3, kChains));
    const auto res = is_sortable_set(b3_monos, SortContext::identity(b3.size()));
    CHECK(!res.sortable);
    REQUIRE(res.witness.has_value());
    const auto& w = *res.witness;
    // the witness sorting really leaves the set
    const auto members = std::set<Monomial>(b3_monos.begin(), b3_monos.end());
    CHECK((members.count(w.v1) == 0 || members.count(w.v2) == 0));
    CHECK(w.v1 * w.v2 == b3_monos[w.i] * b3_monos[w.j]);
}

TEST_CASE("every non-planar corpus lattice fails sortability under the label order") {
    for (const auto& p : poset_corpus(5)) {
        if (p.width() <= 2) continue;
        const DistLattice L = DistLattice::birkhoff(p, kIdeals);
        const auto monos = chain_monomials(maximal_chains(L, kChains));
        CHECK(!is_sortable_set(monos, SortContext::identity(L.size())).sortable);
    }
}

TEST_CASE("sorting relations of the worked example") {
    const DistLattice L = lattice("fig1.poset");
    const auto chains = maximal_chains(L, kChains);
    const auto monos = chain_monomials(chains);
    const auto rels = sorting_relations(monos, SortContext::grid(grid_embedding(L)));
    REQUIRE(rels.size() == 1);
    // one unsorted unordered pair {t1t3t6, t2t3t5}, sorting to (t2t3t6, t1t3t5)
    const auto& r = rels[0];
    CHECK(monos[r.lhs.first - 1] * monos[r.lhs.second - 1] ==
          monos[r.rhs.first - 1] * monos[r.rhs.second - 1]);
    const std::set<Monomial> lhs = {monos[r.lhs.first - 1], monos[r.lhs.second - 1]};
    CHECK(lhs == std::set<Monomial>{from_labels({1, 3, 6}), from_labels({2, 3, 5})});
    const std::set<Monomial> rhs = {monos[r.rhs.first - 1], monos[r.rhs.second - 1]};
    CHECK(rhs == std::set<Monomial>{from_labels({1, 3, 5}), from_labels({2, 3, 6})});
}

TEST_CASE("single chains have no relations") {
    const DistLattice L = DistLattice::birkhoff(Poset::chain(3), kIdeals);
    const auto monos = chain_monomials(maximal_chains(L, kChains));
    CHECK(sorting_relations(monos, SortContext::grid(grid_embedding(L))).empty());
}

TEST_CASE("the squarefree quadric relations") {
    const std::vector<Monomial> veronese = {
        Monomial({0, 1}), Monomial({0, 2}), Monomial({0, 3}),
        Monomial({1, 2}), Monomial({1, 3}), Monomial({2, 3})};
    const auto rels = sorting_relations(veronese, SortContext::identity(4));
    REQUIRE(rels.size() == 2);
    CHECK(rels[0].lhs == std::pair<int, int>{1, 6});
    CHECK(rels[0].rhs == std::pair<int, int>{2, 5});
    CHECK(rels[1].lhs == std::pair<int, int>{3, 4});
    CHECK(rels[1].rhs == std::pair<int, int>{2, 5});
}

TEST_CASE("relations require a sortable set") {
    const DistLattice b3 = lattice("b3.poset");
    const auto monos = chain_monomials(maximal_chains(b3, kChains));
    CHECK_THROWS_AS(sorting_relations(monos, SortContext::identity(b3.size())),
                    NotSortableError);
}

TEST_CASE("ideal encodings by chain counts") {
    SUBCASE("three atoms, three singleton blocks") {
        const Poset p = Poset::antichain(3);
        const DistLattice L = DistLattice::birkhoff(p, kIdeals);
        const auto sys = hibi_sort_monomials(p, L);
        CHECK(sys.block_sizes == std::vector<int>{1, 1, 1});
        CHECK(sys.num_vars == 6);
        // bottom and top of the cube
        CHECK(sys.monomials.front().word == std::vector<int>{0, 2, 4});
        CHECK(sys.monomials.back().word == std::vector<int>{1, 3, 5});
        for (const auto& m : sys.monomials) CHECK(m.degree() == 3);
    }
    SUBCASE("chains in one block") {
        const Poset p = Poset::chain(3);
        const DistLattice L = DistLattice::birkhoff(p, kIdeals);
        const auto sys = hibi_sort_monomials(p, L);
        CHECK(sys.block_sizes == std::vector<int>{3});
        for (int e = 0; e < L.size(); ++e)
            CHECK(sys.monomials[e].word == std::vector<int>{L.rank(e)});
    }
    SUBCASE("two blocks of three variables each") {
        const Poset p = testutil::load("fig1.poset");
        const DistLattice L = DistLattice::birkhoff(p, kIdeals);
        const auto sys = hibi_sort_monomials(p, L);
        CHECK(sys.block_sizes == std::vector<int>{2, 2});
        CHECK(sys.num_vars == 6);
        // t4 = {b, d} takes nothing from the chain a < c and both of b < d
        CHECK(sys.monomials[4].word == std::vector<int>{0, 5});
    }
}

TEST_CASE("the displayed cube relation holds") {
    const Poset p = Poset::antichain(3);
    const DistLattice L = DistLattice::birkhoff(p, kIdeals);
    const auto sys = hibi_sort_monomials(p, L);
    // {x} * {y,z} sorts to bottom * top
    const int xyz[] = {L.index_of(1), L.index_of(6)};
    const auto [v1, v2] = sort_pair(sys.monomials[xyz[0]], sys.monomials[xyz[1]], sys.ctx);
    CHECK(v1 == sys.monomials[0]);
    CHECK(v2 == sys.monomials[L.size() - 1]);
}

TEST_CASE("Hibi relations are sorting relations on every small poset") {
    for (const auto& p : poset_corpus(4)) CHECK(verify_hibi_sorting(p, kIdeals).ok);
    CHECK(verify_hibi_sorting(Poset::chain(3), kIdeals).ok);
}
