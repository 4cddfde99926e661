#include <refloor/combinat.hpp>
#include <refloor/series.hpp>

#include <gtest/gtest.h>

using namespace refloor;

namespace {

// Partitions of n with parts at most k, by the textbook two-index recurrence.
BigInt partitions_slow(long n, long k) {
    if (n == 0) return 1;
    if (n < 0 || k == 0) return 0;
    return partitions_slow(n - k, k) + partitions_slow(n, k - 1);
}

} // namespace

TEST(Partitions, MatchSlowRecurrence) {
    for (long n = 0; n <= 30; ++n) EXPECT_EQ(partitions(n), partitions_slow(n, n)) << n;
    EXPECT_EQ(partitions(10), 42);
    EXPECT_EQ(partitions(100), BigInt("190569292"));
    EXPECT_EQ(partitions(-1), 0);
}

TEST(CodegreeVectors, EnumerationSizes) {
    for (long i = 0; i <= 12; ++i) {
        auto B = enumerate_B(i);
        EXPECT_EQ(BigInt(static_cast<long>(B.size())), partitions(i));
        for (const auto& u : B) EXPECT_EQ(codeg(u), i);
    }
    BigInt running = 0;
    for (long i = 0; i <= 8; ++i) {
        running += partitions(i);
        EXPECT_EQ(BigInt(static_cast<long>(enumerate_C(i).size())), running);
    }
    auto B3 = enumerate_B(3);
    ASSERT_EQ(B3.size(), 3u);
    EXPECT_EQ(B3[0], (CodegVector{0, 0, 0, 1}));
    EXPECT_EQ(B3[2], (CodegVector{0, 3, 0, 0}));
    EXPECT_EQ(sum_from(CodegVector{0, 2, 1, 1}, 2), 2);
    EXPECT_EQ(sum_from(CodegVector{0, 2, 1, 1}, 0), 4);
}

TEST(Phi, BinomialAndCompositions) {
    EXPECT_EQ(phi(0, 0), 1);
    EXPECT_EQ(phi(3, 0), 0);
    EXPECT_EQ(phi(0, 5), 1);
    EXPECT_EQ(phi(2, 2), 10);
    for (long k = 1; k <= 6; ++k)
        for (long l = 0; l <= 6; ++l) EXPECT_EQ(phi(l, k), brute_F(k, k + l)) << k << "," << l;
    auto a1 = base_series(BaseSeries::A1, 8);
    for (long k = 0; k <= 4; ++k) {
        auto p = a1.pow(2 * k);
        for (long l = 0; l <= 8; ++l) EXPECT_EQ(p[l], Rational(phi(l, k)));
    }
}

TEST(Multinomial, Values) {
    EXPECT_EQ(multinomial(4, {2, 1, 1}), 12);
    EXPECT_EQ(multinomial(0, {}), 1);
    EXPECT_EQ(multinomial(3, {0, 3}), 1);
    try {
        multinomial(4, {2, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SumMismatch);
    }
}

TEST(Decompositions, MultinomialTheorem) {
    for (long s = 0; s <= 4; ++s)
        for (long order = 0; order <= 3; ++order) {
            auto all = enumerate_decompositions(s, order);
            BigInt total = 0;
            for (const auto& S : all) total += multinomial(s, S);
            // s objects into s + order + 1 labeled boxes.
            BigInt expect = 1;
            for (long j = 0; j < s; ++j) expect *= s + order + 1;
            EXPECT_EQ(total, expect);
            EXPECT_EQ(BigInt(static_cast<long>(all.size())), binomial(BigInt(s + order + 1 + s - 1), s));
        }
}

TEST(NSeries, GeneratingFunction) {
    const long order = 6;
    for (long a = 0; a <= 5; ++a)
        for (long p = 0; p <= 4; ++p)
            for (long s = 0; s <= 3; ++s) {
                std::vector<BigInt> lhs(order + 1, BigInt(0));
                for (const auto& S : enumerate_decompositions(s, order)) {
                    auto n = N_series(a, p, S, order);
                    for (long j = 0; j <= order; ++j) lhs[static_cast<std::size_t>(j)] += multinomial(s, S) * n[static_cast<std::size_t>(j)];
                }
                auto rhs = numeric_G(a + 2 + 2 * s, p, s, order);
                for (long j = 0; j <= order; ++j) EXPECT_EQ(Rational(lhs[static_cast<std::size_t>(j)]), rhs[j]);
            }
}

TEST(NSeries, SZeroIsBinomialSum) {
    // With s = 0 and u = (u_1), nu is C(a + p, u_1).
    auto n = N_series(4, 2, {0}, 1);
    EXPECT_EQ(n[0], 1);
    EXPECT_EQ(n[1], 6);
}
