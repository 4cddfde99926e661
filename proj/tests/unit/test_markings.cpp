#include <refloor/markings.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace refloor;

namespace {

struct Case {
    std::vector<std::pair<long, long>> vertices;
    std::vector<std::vector<std::pair<long, long>>> pairings;
};

std::vector<Case> corpus() {
    return {
        {{{0, 0}, {3, 0}, {0, 3}}, {{}, {{1, 2}}, {{5, 6}}, {{2, 3}, {6, 7}}}},
        {{{0, 0}, {1, 0}, {3, 1}, {3, 2}, {2, 3}, {1, 3}, {0, 2}}, {{}, {{1, 2}}, {{3, 4}, {5, 6}}}},
        {{{0, 0}, {3, 0}, {3, 3}, {0, 3}}, {{}, {{4, 5}}}},
        {{{0, 0}, {4, 0}, {2, 2}, {0, 2}}, {{}, {{1, 2}, {3, 4}}}},
        {{{0, 0}, {2, 0}, {4, 2}, {0, 2}}, {{}, {{2, 3}}}},
    };
}

} // namespace

TEST(Pairing, Validation) {
    EXPECT_EQ(Pairing::standard(2).pairs(), (std::vector<std::pair<long, long>>{{1, 2}, {3, 4}}));
    for (auto bad : std::vector<std::vector<std::pair<long, long>>>{{{1, 3}}, {{0, 1}}, {{1, 2}, {2, 3}}}) {
        try {
            Pairing p(bad);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidPairing);
        }
    }
    EXPECT_THROW(Pairing({{7, 8}}).check_fits(7), Error);
    EXPECT_NO_THROW(Pairing({{7, 8}}).check_fits(8));
}

TEST(Markings, DynamicProgramMatchesBacktracking) {
    for (const auto& c : corpus()) {
        auto d = h_transverse_data(parse_polygon(c.vertices));
        for (const auto& cls : enumerate_diagrams(d)) {
            EXPECT_EQ(marking_size(cls.diagram), d.y - 1);
            for (const auto& pairs : c.pairings) {
                long count = 0;
                SymLaurent labeled = oracle::labeled_extension_sum(cls.diagram, pairs, &count);
                EXPECT_EQ(sum_multiplicities(cls, Pairing(pairs)), labeled.divided_by(cls.aut)) << cls.form;
                if (pairs.empty()) {
                    EXPECT_EQ(count_markings(cls) * cls.aut, count);
                }
            }
        }
    }
}

TEST(Markings, AlgebrasAgree) {
    for (const auto& c : corpus()) {
        auto d = h_transverse_data(parse_polygon(c.vertices));
        for (const auto& cls : enumerate_diagrams(d))
            for (const auto& pairs : c.pairings) {
                Pairing S(pairs);
                SymLaurent full = sum_multiplicities(cls, S);
                if (full.is_zero()) continue;
                EXPECT_TRUE(full.is_palindromic());
                EXPECT_EQ(full.max_u(), 2 * cls.degree);
                long order = 2 * cls.degree;
                EXPECT_EQ(marking_sum(TildeAlgebra{order}, cls, S), tilde(full));
                EXPECT_EQ(marking_sum(TildeAlgebra{1}, cls, S), tilde(full).truncated(1));
            }
    }
}

TEST(Markings, Delta1Counts) {
    auto d = h_transverse_data(parse_polygon(std::vector<Point>{{0, 0}, {3, 0}, {0, 3}}));
    auto classes = enumerate_diagrams(d);
    ASSERT_EQ(classes.size(), 3u);
    std::vector<BigInt> nu, aut;
    for (const auto& c : classes) {
        nu.push_back(count_markings(c));
        aut.push_back(c.aut);
    }
    std::sort(nu.begin(), nu.end());
    std::sort(aut.begin(), aut.end());
    EXPECT_EQ(nu, (std::vector<BigInt>{1, 3, 5}));
    EXPECT_EQ(aut, (std::vector<BigInt>{2, 6, 12}));
}

TEST(Markings, PairingOutsideRange) {
    auto d = h_transverse_data(parse_polygon(std::vector<Point>{{0, 0}, {3, 0}, {0, 3}}));
    auto cls = enumerate_diagrams(d).front();
    try {
        sum_multiplicities(cls, Pairing({{8, 9}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidPairing);
    }
}
