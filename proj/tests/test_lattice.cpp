#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chainlat/corpus.hpp"
#include "chainlat/errors.hpp"
#include "chainlat/lattice.hpp"
#include "testutil.hpp"

using namespace chainlat;

namespace {
const std::size_t kIdeals = 1u << 16;
}

TEST_CASE("ideal lattice of the crossing-chains poset carries the expected labels") {
    const Poset p = testutil::load("fig1.poset");
    const DistLattice L = DistLattice::birkhoff(p, kIdeals);
    REQUIRE(L.size() == 8);

    using V = std::vector<std::string>;
    CHECK(L.ideal_names(0) == V{});
    CHECK(L.ideal_names(1) == V{"a"});
    CHECK(L.ideal_names(2) == V{"b"});
    CHECK(L.ideal_names(3) == V{"a", "b"});
    CHECK(L.ideal_names(4) == V{"b", "d"});
    CHECK(L.ideal_names(5) == V{"a", "b", "c"});
    CHECK(L.ideal_names(6) == V{"a", "b", "d"});
    CHECK(L.ideal_names(7) == V{"a", "b", "c", "d"});
    CHECK(L.label(5) == "t5");
}

TEST_CASE("boolean and chain lattices") {
    CHECK(DistLattice::birkhoff(Poset::antichain(3), kIdeals).size() == 8);
    for (int k = 1; k <= 5; ++k)
        CHECK(DistLattice::birkhoff(Poset::chain(k), kIdeals).size() == k + 1);
}

TEST_CASE("ideal budget") {
    CHECK_THROWS_AS(DistLattice::birkhoff(Poset::antichain(5), 16), BudgetError);
}

TEST_CASE("meet and join on the worked example") {
    const DistLattice L = DistLattice::birkhoff(testutil::load("fig1.poset"), kIdeals);
    CHECK(L.meet(5, 6) == 3);
    CHECK(L.join(5, 6) == 7);
    for (int u = 0; u < L.size(); ++u) {
        CHECK(L.meet(u, u) == u);
        CHECK(L.meet(0, u) == 0);
        CHECK(L.join(u, L.size() - 1) == L.size() - 1);
    }
}

TEST_CASE("lattice laws hold on the whole small corpus") {
    for (const auto& p : poset_corpus(4)) {
        const DistLattice L = DistLattice::birkhoff(p, kIdeals);
        // purity via ranks of covers
        for (auto [u, v] : L.covers()) CHECK(L.rank(v) == L.rank(u) + 1);
        for (int u = 0; u < L.size(); ++u)
            for (int v = 0; v < L.size(); ++v) {
                CHECK(L.meet(u, v) == L.meet(v, u));
                CHECK(L.join(L.meet(u, v), u) == u); // absorption
                for (int w = 0; w < L.size(); ++w)
                    CHECK(L.meet(u, L.join(v, w)) ==
                          L.join(L.meet(u, v), L.meet(u, w)));
            }
    }
}

TEST_CASE("join irreducibles recover the source poset") {
    for (const auto& p : poset_corpus(4)) {
        const DistLattice L = DistLattice::birkhoff(p, kIdeals);
        const auto [jp, elems] = L.join_irreducibles();
        CHECK(jp.isomorphic_to(p));
        for (int e : elems) CHECK(L.lower_covers(e).size() == 1);
    }
}

TEST_CASE("join irreducibles on the named examples") {
    const auto b3 = DistLattice::birkhoff(Poset::antichain(3), kIdeals);
    CHECK(b3.join_irreducibles().first.isomorphic_to(Poset::antichain(3)));
    const auto c4 = DistLattice::birkhoff(Poset::chain(4), kIdeals);
    CHECK(c4.join_irreducibles().first.isomorphic_to(Poset::chain(4)));
}

TEST_CASE("planarity is two-chain coverability") {
    CHECK(DistLattice::birkhoff(testutil::load("fig1.poset"), kIdeals).is_planar());
    CHECK(DistLattice::birkhoff(Poset::chain(3), kIdeals).is_planar());
    CHECK(!DistLattice::birkhoff(Poset::antichain(3), kIdeals).is_planar());
}

TEST_CASE("grid embedding of the seven-element example") {
    const DistLattice L = DistLattice::birkhoff(testutil::load("fig2.poset"), kIdeals);
    REQUIRE(L.size() == 16);
    const GridEmbedding g = grid_embedding(L);
    CHECK(g.a == 4);
    CHECK(g.b == 3);
    CHECK(g.coord[0] == std::pair<int, int>{0, 0});
    CHECK(g.coord[L.size() - 1] == std::pair<int, int>{4, 3});
    CHECK(g.cells.size() == 8);

    // injective coordinates, rank = i + j, order iff componentwise
    for (int u = 0; u < L.size(); ++u) {
        CHECK(g.coord[u].first + g.coord[u].second == L.rank(u));
        for (int v = 0; v < L.size(); ++v) {
            if (u != v) CHECK(g.coord[u] != g.coord[v]);
            const bool compo = g.coord[u].first <= g.coord[v].first &&
                               g.coord[u].second <= g.coord[v].second;
            CHECK(L.leq(u, v) == compo);
        }
    }
}

TEST_CASE("grid total order breaks rank ties by the first coordinate") {
    const DistLattice L = DistLattice::birkhoff(testutil::load("fig2.poset"), kIdeals);
    const GridEmbedding g = grid_embedding(L);
    for (int u = 0; u < L.size(); ++u)
        for (int v = 0; v < L.size(); ++v) {
            if (u == v) continue;
            const bool expect =
                std::make_pair(L.rank(u), g.coord[u].first) <
                std::make_pair(L.rank(v), g.coord[v].first);
            CHECK(g.less(u, v) == expect);
        }
}

TEST_CASE("two free two-chains give the full square grid") {
    const DistLattice L = DistLattice::birkhoff(testutil::load("rect22.poset"), kIdeals);
    CHECK(L.size() == 9);
    const GridEmbedding g = grid_embedding(L);
    CHECK(g.a == 2);
    CHECK(g.b == 2);
    CHECK(g.cells.size() == 4);
}

TEST_CASE("chain posets embed as a line without cells") {
    const DistLattice L = DistLattice::birkhoff(Poset::chain(3), kIdeals);
    const GridEmbedding g = grid_embedding(L);
    CHECK(g.a == 3);
    CHECK(g.b == 0);
    CHECK(g.cells.empty());
}

TEST_CASE("grid embedding refuses non-planar lattices") {
    const DistLattice b3 = DistLattice::birkhoff(Poset::antichain(3), kIdeals);
    CHECK_THROWS_AS(grid_embedding(b3), NonPlanarError);
}

TEST_CASE("cells count |L| - |P| - 1 on every planar corpus lattice") {
    for (const auto& p : poset_corpus(5)) {
        if (p.width() > 2) continue;
        const DistLattice L = DistLattice::birkhoff(p, kIdeals);
        const GridEmbedding g = grid_embedding(L);
        CHECK(L.size() - p.size() == static_cast<int>(g.cells.size()) + 1);
        // cells are the elements with two lower covers
        for (int e : g.cells) CHECK(L.lower_covers(e).size() == 2);
    }
}

TEST_CASE("cells are exactly the fully occupied unit squares") {
    for (const auto& p : poset_corpus(5)) {
        if (p.width() > 2) continue;
        const DistLattice L = DistLattice::birkhoff(p, kIdeals);
        const GridEmbedding g = grid_embedding(L);
        std::set<std::pair<int, int>> occupied(g.coord.begin(), g.coord.end());
        std::set<std::pair<int, int>> corners;
        for (int e : g.cells) corners.insert(g.coord[e]);
        for (int i = 1; i <= g.a; ++i)
            for (int j = 1; j <= g.b; ++j) {
                const bool square = occupied.count({i - 1, j - 1}) &&
                                    occupied.count({i - 1, j}) &&
                                    occupied.count({i, j - 1}) && occupied.count({i, j});
                CHECK(square == (corners.count({i, j}) > 0));
            }
    }
}
