#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chainlat/corpus.hpp"
#include "chainlat/errors.hpp"
#include "chainlat/poset.hpp"
#include "testutil.hpp"

using namespace chainlat;

TEST_CASE("parsing the crossing-chains poset") {
    const Poset p = testutil::load("fig1.poset");
    CHECK(p.size() == 4);
    CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}, {1, 3}});
    CHECK(p.leq(0, 2));
    CHECK(p.leq(1, 3));
    CHECK(!p.comparable(0, 1));
    CHECK(!p.leq(0, 3));
}

TEST_CASE("parsing a singleton") {
    const Poset p = Poset::parse("elements a\n");
    CHECK(p.size() == 1);
    CHECK(p.leq(0, 0));
    CHECK(p.covers().empty());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(Poset::parse("elements a b\ncover a b\ncover b a\n"), CycleError);
    CHECK_THROWS_AS(Poset::parse("elements a a\n"), ParseError);
    CHECK_THROWS_AS(Poset::parse("elements a b\ncover a\n"), ParseError);
    CHECK_THROWS_AS(Poset::parse("elements a b\ncover a z\n"), ParseError);
    CHECK_THROWS_AS(Poset::parse("covers a b\n"), ParseError);
    CHECK_THROWS_AS(Poset::parse(""), ParseError);
    CHECK_THROWS_AS(Poset::parse("elements a\ncover a a\n"), CycleError);
}

TEST_CASE("redundant covers reduce away") {
    const Poset p = Poset::parse("elements a b c\ncover a b\ncover b c\ncover a c\n");
    CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("width on the named examples") {
    const Poset fig1 = testutil::load("fig1.poset");
    CHECK(fig1.width() == 2);
    CHECK(fig1.max_antichain().size() == 2);

    CHECK(Poset::antichain(5).width() == 5);
    CHECK(Poset::chain(4).width() == 1);
}

TEST_CASE("width matches the exhaustive oracle on every small poset") {
    for (const auto& p : poset_corpus(5)) {
        CHECK(p.width() == testutil::width_by_enumeration(p));
        Mask m = 0;
        for (int x : p.max_antichain()) m |= Mask{1} << x;
        CHECK(p.is_antichain(m));
    }
}

TEST_CASE("chain decomposition is a partition into width chains") {
    for (const auto& p : poset_corpus(5)) {
        const auto& chains = p.chain_decomposition();
        CHECK(static_cast<int>(chains.size()) == p.width());
        Mask seen = 0;
        for (const auto& c : chains) {
            for (std::size_t k = 0; k + 1 < c.size(); ++k) CHECK(p.less(c[k], c[k + 1]));
            for (int x : c) {
                CHECK(((seen >> x) & 1u) == 0);
                seen |= Mask{1} << x;
            }
        }
        CHECK(seen == p.all());
    }
}

TEST_CASE("chain decomposition of the examples") {
    const Poset fig1 = testutil::load("fig1.poset");
    const auto& chains = fig1.chain_decomposition();
    REQUIRE(chains.size() == 2);
    CHECK(chains[0] == std::vector<int>{0, 2}); // a < c
    CHECK(chains[1] == std::vector<int>{1, 3}); // b < d

    CHECK(Poset::chain(3).chain_decomposition() ==
          std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(Poset::antichain(3).chain_decomposition() ==
          std::vector<std::vector<int>>{{0}, {1}, {2}});
}

TEST_CASE("linear extensions") {
    CHECK(Poset::antichain(3).linear_extensions(100).size() == 6);
    CHECK(Poset::chain(3).linear_extensions(100).size() == 1);

    const Poset fig1 = testutil::load("fig1.poset");
    const auto exts = fig1.linear_extensions(100);
    CHECK(exts.size() == 5);
    CHECK(exts.size() == testutil::extensions_by_permutations(fig1));
    CHECK(std::is_sorted(exts.begin(), exts.end())); // lexicographic stream
    CHECK(fig1.linear_extension_count(100) == 5);

    CHECK_THROWS_AS(Poset::antichain(5).linear_extensions(10), BudgetError);
}

TEST_CASE("extension counts of two free chains are binomial") {
    for (int j = 1; j <= 5; ++j)
        for (int k = 1; k <= 5; ++k) {
            std::vector<std::string> names;
            std::vector<std::pair<int, int>> covers;
            for (int i = 0; i < j + k; ++i) names.push_back("e" + std::to_string(i));
            for (int i = 1; i < j; ++i) covers.emplace_back(i - 1, i);
            for (int i = j + 1; i < j + k; ++i) covers.emplace_back(i - 1, i);
            const Poset p = Poset::from_covers(std::move(names), covers);
            std::uint64_t expect = 1; // binomial(j+k, j)
            for (int i = 1; i <= j; ++i) expect = expect * (k + i) / i;
            CHECK(p.linear_extension_count(1u << 20) == expect);
        }
}

TEST_CASE("isomorphism testing") {
    const Poset fig1 = testutil::load("fig1.poset");
    const Poset relabeled =
        Poset::parse("elements q r s t\ncover t q\ncover s q\ncover s r\n");
    CHECK(fig1.isomorphic_to(relabeled));
    CHECK(!fig1.isomorphic_to(Poset::chain(4)));
    CHECK(!fig1.isomorphic_to(Poset::antichain(4)));
    CHECK(fig1.canonical_key() == relabeled.canonical_key());
}

TEST_CASE("corpus sizes match the catalogue of small posets") {
    CHECK(poset_corpus(1).size() == 1);
    CHECK(poset_corpus(2).size() == 3);   // 1 + 2
    CHECK(poset_corpus(3).size() == 8);   // + 5
    CHECK(poset_corpus(4).size() == 24);  // + 16
    CHECK(poset_corpus(5).size() == 87);  // + 63
}
