#pragma once

#include "bigint.hpp"
#include "errors.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <vector>

namespace refloor {

/// Number of partitions of n (Euler's pentagonal recurrence).
inline BigInt partitions(long n) {
    if (n < 0) return 0;
    static std::mutex mu;
    static std::vector<BigInt> table{1};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(table.size()) <= n) {
        long m = static_cast<long>(table.size());
        BigInt v = 0;
        for (long k = 1;; ++k) {
            long g1 = k * (3 * k - 1) / 2;
            if (g1 > m) break;
            long g2 = k * (3 * k + 1) / 2;
            BigInt t = table[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) t += table[static_cast<std::size_t>(m - g2)];
            if (k % 2 == 1) v += t; else v -= t;
        }
        table.push_back(v);
    }
    return table[static_cast<std::size_t>(n)];
}

/// A codegree vector u = (u_1, u_2, ...). Entry 0 of the storage is unused and always 0.
using CodegVector = std::vector<long>;

inline long codeg(const CodegVector& u) {
    long c = 0;
    for (std::size_t j = 1; j < u.size(); ++j) c += static_cast<long>(j) * u[j];
    return c;
}

inline long sum_from(const CodegVector& u, std::size_t k) {
    long c = 0;
    for (std::size_t j = std::max<std::size_t>(k, 1); j < u.size(); ++j) c += u[j];
    return c;
}

/// All u with codeg(u) = i, stored with length i + 1, in lexicographic order of (u_1, u_2, ...).
inline std::vector<CodegVector> enumerate_B(long i) {
    std::vector<CodegVector> out;
    CodegVector u(static_cast<std::size_t>(i) + 1, 0);
    std::function<void(long, long)> rec = [&](long j, long left) {
        if (j > i) {
            if (left == 0) out.push_back(u);
            return;
        }
        for (long c = 0; c * j <= left; ++c) {
            u[static_cast<std::size_t>(j)] = c;
            rec(j + 1, left - c * j);
        }
        u[static_cast<std::size_t>(j)] = 0;
    };
    rec(1, i);
    return out;
}

/// All u with codeg(u) <= i, grouped by codegree, each stored with length i + 1.
inline std::vector<CodegVector> enumerate_C(long i) {
    std::vector<CodegVector> out;
    for (long c = 0; c <= i; ++c)
        for (auto u : enumerate_B(c)) {
            u.resize(static_cast<std::size_t>(i) + 1, 0);
            out.push_back(std::move(u));
        }
    return out;
}

inline BigInt phi(long ell, long k) {
    if (ell == 0 && k == 0) return 1;
    return binomial(2 * k + ell - 1, ell);
}

inline BigInt brute_F(long k, long ell) {
    if (k == 0) return ell == 0 ? BigInt(1) : BigInt(0);
    BigInt total = 0;
    for (long first = 1; first <= ell - (k - 1); ++first) total += first * brute_F(k - 1, ell - first);
    return total;
}

/// A decomposition S = (S_0, S_1, ...) of s.
using Decomposition = std::vector<long>;

inline BigInt multinomial(long s, const Decomposition& S) {
    long total = 0;
    for (long v : S) {
        if (v < 0) fail(ErrorCode::SumMismatch, "negative part");
        total += v;
    }
    if (total != s) fail(ErrorCode::SumMismatch, "parts sum to " + std::to_string(total) + ", expected " + std::to_string(s));
    BigInt r = factorial(static_cast<unsigned long>(s));
    for (long v : S) r /= factorial(static_cast<unsigned long>(v));
    return r;
}

/// d(s) restricted to indices 0..s+order.
inline std::vector<Decomposition> enumerate_decompositions(long s, long order) {
    std::vector<Decomposition> out;
    const std::size_t len = static_cast<std::size_t>(s + order) + 1;
    Decomposition S(len, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t j, long left) {
        if (j + 1 == len) {
            S[j] = left;
            out.push_back(S);
            S[j] = 0;
            return;
        }
        for (long c = left; c >= 0; --c) {
            S[j] = c;
            rec(j + 1, left - c);
        }
        S[j] = 0;
    };
    rec(0, s);
    return out;
}

inline BigInt nu_n(long a, long p, const CodegVector& u, const Decomposition& S, std::size_t n) {
    auto at = [](const std::vector<long>& v, std::size_t j) { return j < v.size() ? v[j] : 0L; };
    const std::size_t top = std::max(u.size(), S.size());
    long tail = 0;
    for (std::size_t j = n + 1; j < top; ++j) tail += at(u, j) - 2 * at(S, j);
    return binomial(BigInt(a + static_cast<long>(n) * p - tail), at(u, n) - 2 * at(S, n));
}

inline BigInt nu_product(long a, long p, const CodegVector& u, const Decomposition& S) {
    BigInt r = 1;
    const std::size_t top = std::max(u.size(), S.size());
    for (std::size_t n = 1; n < top && r != 0; ++n) r *= nu_n(a, p, u, S, n);
    return r;
}

/// Coefficients of x^0..x^order of the series N(a, p, S).
inline std::vector<BigInt> N_series(long a, long p, const Decomposition& S, long order) {
    std::vector<BigInt> out(static_cast<std::size_t>(order) + 1, BigInt(0));
    for (const auto& u : enumerate_C(order)) out[static_cast<std::size_t>(codeg(u))] += nu_product(a, p, u, S);
    return out;
}

} // namespace refloor
