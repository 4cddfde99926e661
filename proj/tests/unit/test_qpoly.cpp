#include <refloor/qpoly.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace refloor;

namespace {

SymLaurent laurent(std::initializer_list<std::pair<long, long>> terms) {
    SymLaurent p;
    for (auto [e, c] : terms) p += SymLaurent::monomial(e, c);
    return p;
}

TPoly tpoly(std::initializer_list<long> c) {
    std::vector<BigInt> v;
    for (long x : c) v.emplace_back(x);
    return TPoly(v);
}

} // namespace

TEST(QuantumInteger, SmallValues) {
    EXPECT_EQ(quantum_integer(3), laurent({{2, 1}, {0, 1}, {-2, 1}}));
    EXPECT_EQ(quantum_integer(1), SymLaurent(BigInt(1)));
    EXPECT_TRUE(quantum_integer(0).is_zero());
    EXPECT_EQ(quantum_integer(2), laurent({{1, 1}, {-1, 1}}));
}

TEST(QuantumInteger, SquaresAndDoubling) {
    EXPECT_EQ(qint_sq(2), laurent({{2, 1}, {0, 2}, {-2, 1}}));
    EXPECT_EQ(qint_q2(1), SymLaurent(BigInt(1)));
    EXPECT_EQ(qint_q2(2), laurent({{2, 1}, {-2, 1}}));
}

TEST(QuantumInteger, Specializations) {
    for (long n = 1; n <= 20; ++n) {
        EXPECT_EQ(quantum_integer(n).eval_at_one(), n);
        EXPECT_EQ(qint_sq(n).eval_at_minus_one(), n % 2 == 0 ? 0 : 1) << n;
    }
}

TEST(QuantumInteger, HalfExponentGuard) {
    try {
        quantum_integer(2).eval_at_minus_one();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::HalfIntegerExponent);
    }
}

TEST(QuantumInteger, EvenOverTwoIsDoubled) {
    for (long k = 1; k <= 10; ++k) EXPECT_EQ(quantum_integer(2 * k).divided_by(quantum_integer(2)), qint_q2(k)) << k;
}

TEST(PairFactor, Values) {
    EXPECT_EQ(pair_factor(1, 1), SymLaurent(BigInt(1)));
    EXPECT_EQ(pair_factor(2, 1), quantum_integer(3));
    SymLaurent p22 = pair_factor(2, 2);
    EXPECT_EQ(p22, quantum_integer(2) * quantum_integer(4));
    EXPECT_TRUE(p22.is_palindromic());
    for (long w = 1; w <= 8; ++w)
        for (long w2 = 1; w2 <= 8; ++w2)
            EXPECT_EQ(pair_factor(w, w2) * quantum_integer(2), quantum_integer(w) * quantum_integer(w2) * quantum_integer(w + w2));
}

TEST(PairFactor, InexactDivisionIsReported) {
    try {
        quantum_integer(3).divided_by(quantum_integer(2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InexactDivision);
    }
}

TEST(Codegree, Coefficients) {
    EXPECT_EQ(codeg_coeff(qint_sq(4), 0), 1);
    EXPECT_EQ(codeg_coeff(qint_sq(2), 1), 2);
    for (long a = 3; a <= 6; ++a)
        for (long b = 3; b <= 6; ++b) EXPECT_EQ(codeg_coeff(qint_sq(a) * qint_sq(b), 2), 10);
    EXPECT_THROW(codeg_coeff(SymLaurent(), 0), Error);
}

TEST(Tilde, Examples) {
    EXPECT_EQ(tilde(qint_sq(2)), tpoly({1, 2, 1}));
    EXPECT_EQ(tilde(SymLaurent(BigInt(1))), tpoly({1}));
    for (long n = 1; n <= 6; ++n) {
        std::vector<BigInt> c(static_cast<std::size_t>(2 * n - 1), BigInt(0));
        for (long k = 0; k < n; ++k) c[static_cast<std::size_t>(2 * k)] = 1;
        EXPECT_EQ(tilde(qint_q2(n)), TPoly(c));
    }
    EXPECT_THROW(tilde(SymLaurent()), Error);
}

TEST(Tilde, Multiplicative) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> pick(1, 6), kind(0, 2);
    auto random_factor = [&]() {
        long w = pick(rng);
        switch (kind(rng)) {
        case 0: return qint_sq(w);
        case 1: return qint_q2(w);
        default: return pair_factor(w, pick(rng));
        }
    };
    for (int trial = 0; trial < 100; ++trial) {
        SymLaurent p = random_factor() * random_factor(), r = random_factor();
        EXPECT_EQ(tilde(p * r), tilde(p) * tilde(r));
        EXPECT_TRUE((p * r).is_palindromic());
    }
}

TEST(StarFactor, Kinds) {
    EXPECT_EQ(star_factor(StarKind::E0Infinite), tpoly({1, -1}));
    EXPECT_EQ(star_factor(StarKind::E1Infinite), tpoly({1, 1}));
    EXPECT_EQ(star_factor(StarKind::E0Bounded, 2), tpoly({1, 0, -2, 0, 1}));
    EXPECT_EQ(star_factor(StarKind::E2InfiniteInfinite), tpoly({1, 0, -1}));
    EXPECT_EQ(star_factor(StarKind::E1Bounded, 2), tpoly({1, 0, 0, 0, -1}));
    EXPECT_EQ(star_factor(StarKind::E2BoundedInfinite, 1), tpoly({1, -1}) * tpoly({1, 0, -1}));
    EXPECT_EQ(star_kind_from_string("E2-bounded-bounded"), StarKind::E2BoundedBounded);
    try {
        star_kind_from_string("E3");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BadKind);
    }
}

TEST(Pretty, Laurent) {
    EXPECT_EQ((qint_sq(2) + SymLaurent(BigInt(8))).pretty(), "q + 10 + q^-1");
    EXPECT_EQ(quantum_integer(2).pretty(), "q^(1/2) + q^(-1/2)");
}
