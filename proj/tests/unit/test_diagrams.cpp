#include <refloor/canonical.hpp>
#include <refloor/enumerate.hpp>
#include <refloor/lemmas.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace refloor;

namespace {

HTransverseData data(std::vector<std::pair<long, long>> v) { return h_transverse_data(parse_polygon(v)); }

std::vector<std::vector<std::pair<long, long>>> small_corpus() {
    return {
        {{0, 0}, {3, 0}, {0, 3}},
        {{0, 0}, {1, 0}, {3, 1}, {3, 2}, {2, 3}, {1, 3}, {0, 2}},
        {{0, 0}, {4, 0}, {0, 4}},
        {{0, 0}, {3, 0}, {3, 3}, {0, 3}},
        {{0, 0}, {4, 0}, {2, 2}, {0, 2}},
        {{0, 0}, {2, 0}, {4, 2}, {0, 2}},
        {{0, 0}, {6, 0}, {0, 3}},
        {{0, 0}, {1, 0}, {1, 1}, {0, 1}},
    };
}

FloorDiagram chain3() {
    FloorDiagram D;
    D.floors = {{0, 1, 2, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}};
    D.edges = {{0, 1, 1}, {1, 2, 1}};
    return D;
}

} // namespace

TEST(FloorDiagram, ValidationOfDelta1Chain) {
    auto d = data({{0, 0}, {3, 0}, {0, 3}});
    FloorDiagram D;
    D.floors = {{0, 1, 3, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}};
    D.edges = {{0, 1, 2}, {1, 2, 1}};
    EXPECT_TRUE(is_valid(D, d)) << validation_error(D, d);
    EXPECT_EQ(D.degree(), 1);
    EXPECT_EQ(codegree(D, d.interior), 0);
    EXPECT_TRUE(precedes(D, 0, 2));
    EXPECT_FALSE(precedes(D, 2, 0));
    EXPECT_EQ(maximal_floors(D), (std::vector<int>{2}));
    EXPECT_EQ(minimal_floors(D), (std::vector<int>{0}));

    FloorDiagram bad = D;
    bad.edges[0].weight = 1;
    EXPECT_FALSE(is_valid(bad, d));
    FloorDiagram cyc = D;
    cyc.edges.push_back({2, 0, 1});
    EXPECT_FALSE(is_tree(cyc));
    FloorDiagram heavy = D;
    heavy.edges[0].weight = 4;
    heavy.floors[0].sources = 5;
    EXPECT_THROW(codegree(heavy, d.interior), Error);
}

TEST(Enumeration, Delta1Classes) {
    auto d = data({{0, 0}, {3, 0}, {0, 3}});
    auto classes = enumerate_diagrams(d);
    ASSERT_EQ(classes.size(), 3u);
    std::vector<long> codeg;
    for (const auto& c : classes) {
        codeg.push_back(c.codegree);
        EXPECT_TRUE(is_valid(c.diagram, d));
        EXPECT_EQ(c.aut, oracle::brute_aut(c.diagram));
    }
    EXPECT_EQ(codeg, (std::vector<long>{0, 1, 1}));
}

TEST(Enumeration, BoundedMatchesExhaustive) {
    for (const auto& v : small_corpus()) {
        auto d = data(v);
        auto fast = enumerate_diagrams(d);
        auto slow = enumerate_diagrams_exhaustive(d);
        ASSERT_EQ(fast.size(), slow.size());
        for (std::size_t k = 0; k < fast.size(); ++k) {
            EXPECT_EQ(fast[k].form, slow[k].form);
            EXPECT_EQ(fast[k].codegree, slow[k].codegree);
            EXPECT_TRUE(oracle::brute_isomorphic(fast[k].diagram, slow[k].diagram));
        }
        for (long j = 0; j <= 2; ++j) {
            auto cut = enumerate_diagrams(d, {j});
            long expect = 0;
            for (const auto& c : fast) expect += c.codegree <= j;
            EXPECT_EQ(static_cast<long>(cut.size()), expect);
        }
    }
}

TEST(Enumeration, ClassesArePairwiseNonIsomorphic) {
    for (const auto& v : small_corpus()) {
        auto classes = enumerate_diagrams(data(v));
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (std::size_t j = i + 1; j < classes.size(); ++j)
                EXPECT_FALSE(oracle::brute_isomorphic(classes[i].diagram, classes[j].diagram));
    }
}

TEST(Enumeration, BudgetExceeded) {
    auto d = data({{0, 0}, {7, 0}, {7, 7}, {0, 7}});
    try {
        enumerate_diagrams(d, {std::nullopt, 50});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SearchBudgetExceeded);
    }
}

TEST(Enumeration, RectangleLowCodegree) {
    auto d = data({{0, 0}, {5, 0}, {5, 5}, {0, 5}});
    auto classes = enumerate_diagrams(d, {0});
    ASSERT_EQ(classes.size(), 1u);
    EXPECT_EQ(classes[0].codegree, 0);
}

TEST(Canonical, InvariantUnderRelabeling) {
    std::mt19937 rng(17);
    for (const auto& v : small_corpus()) {
        for (const auto& c : enumerate_diagrams(data(v))) {
            const FloorDiagram& D = c.diagram;
            auto base = canonicalize(D);
            EXPECT_EQ(base.aut, oracle::brute_aut(D));
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<int> perm(D.floors.size());
                std::iota(perm.begin(), perm.end(), 0);
                std::shuffle(perm.begin(), perm.end(), rng);
                FloorDiagram P;
                P.floors.resize(D.floors.size());
                for (std::size_t i = 0; i < perm.size(); ++i) P.floors[perm[i]] = D.floors[i];
                for (const auto& e : D.edges) P.edges.push_back({perm[e.tail], perm[e.head], e.weight});
                std::shuffle(P.edges.begin(), P.edges.end(), rng);
                auto other = canonicalize(P);
                EXPECT_EQ(other.form, base.form);
                EXPECT_EQ(other.aut, base.aut);
            }
        }
    }
}

TEST(Canonical, SymmetricStar) {
    // One floor feeding three identical floors.
    FloorDiagram D;
    D.floors = {{0, 0, 3, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}};
    D.edges = {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}};
    auto c = canonicalize(D);
    EXPECT_EQ(c.tree_aut, 6);
    EXPECT_EQ(c.aut, 36);
    EXPECT_EQ(c.aut, oracle::brute_aut(D));
    EXPECT_EQ(canonicalize(chain3()).tree_aut, 1);
}

TEST(Operations, Examples) {
    // A+ with a sink: the sink moves up and the edge gains weight 1.
    FloorDiagram D;
    D.floors = {{0, 0, 1, 1}, {0, 0, 0, 0}};
    D.edges = {{0, 1, 1}};
    auto up = op_A_plus(D, 0, EdgeRef::sink(0));
    EXPECT_EQ(up.floors[0].sinks, 0);
    EXPECT_EQ(up.floors[1].sinks, 1);
    EXPECT_EQ(up.edges[0].weight, 2);

    FloorDiagram E;
    E.floors = {{0, 0, 0, 0}, {0, 0, 1, 0}};
    E.edges = {{0, 1, 1}};
    auto down = op_A_minus(E, 0, EdgeRef::source(1));
    EXPECT_EQ(down.floors[0].sources, 1);
    EXPECT_EQ(down.edges[0].weight, 2);

    FloorDiagram F;
    F.floors = {{-1, 0, 1, 0}, {0, 0, 0, 0}};
    F.edges = {{0, 1, 1}};
    auto bl = op_B_ell(F, 0);
    EXPECT_EQ(bl.floors[0].ell, 0);
    EXPECT_EQ(bl.floors[1].ell, -1);
    EXPECT_EQ(bl.edges[0].weight, 2);

    FloorDiagram G;
    G.floors = {{0, 1, 2, 0}, {0, 0, 0, 1}};
    G.edges = {{0, 1, 1}};
    auto br = op_B_r(G, 0);
    EXPECT_EQ(br.floors[0].r, 0);
    EXPECT_EQ(br.floors[1].r, 1);
    EXPECT_EQ(br.edges[0].weight, 2);
    for (int v = 0; v < 2; ++v) EXPECT_EQ(br.divergence(v), br.floors[v].r - br.floors[v].ell);

    try {
        op_B_r(br, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ConfigurationMismatch);
    }
    EXPECT_THROW(op_A_plus(D, 0, EdgeRef::source(0)), Error);
    EXPECT_THROW(op_A_minus(E, 3, EdgeRef::source(1)), Error);
}

TEST(Operations, CodegreeDrops) {
    auto r = lemma_operation_drops(200, 20240611);
    EXPECT_TRUE(r.passed) << r.detail;
}
