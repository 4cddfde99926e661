#pragma once

#include "bigint.hpp"
#include "errors.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace refloor {

/// Laurent polynomial in u = q^{1/2}. Exponents are stored in u units.
class SymLaurent {
public:
    SymLaurent() = default;
    explicit SymLaurent(const BigInt& c) {
        if (c != 0) terms_[0] = c;
    }
    static SymLaurent monomial(long u_exp, const BigInt& c = 1) {
        SymLaurent r;
        if (c != 0) r.terms_[u_exp] = c;
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, BigInt>& terms() const { return terms_; }

    BigInt coeff(long u_exp) const {
        auto it = terms_.find(u_exp);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    long max_u() const {
        if (is_zero()) fail(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
        return terms_.rbegin()->first;
    }
    long min_u() const {
        if (is_zero()) fail(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
        return terms_.begin()->first;
    }

    bool is_palindromic() const {
        for (const auto& [e, c] : terms_)
            if (coeff(-e) != c) return false;
        return true;
    }

    SymLaurent& operator+=(const SymLaurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SymLaurent& operator-=(const SymLaurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend SymLaurent operator+(SymLaurent a, const SymLaurent& b) { return a += b; }
    friend SymLaurent operator-(SymLaurent a, const SymLaurent& b) { return a -= b; }

    friend SymLaurent operator*(const SymLaurent& a, const SymLaurent& b) {
        SymLaurent r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    SymLaurent& operator*=(const SymLaurent& o) { return *this = *this * o; }

    friend SymLaurent operator*(const BigInt& k, const SymLaurent& a) {
        SymLaurent r;
        if (k == 0) return r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = k * c;
        return r;
    }

    friend bool operator==(const SymLaurent& a, const SymLaurent& b) { return a.terms_ == b.terms_; }

    /// Divide every coefficient by an integer; throws if some coefficient is not divisible.
    SymLaurent divided_by(const BigInt& k) const {
        SymLaurent r;
        for (const auto& [e, c] : terms_) {
            if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t()))
                fail(ErrorCode::InexactDivision, "coefficient " + to_decimal(c) + " not divisible by " + to_decimal(k));
            r.terms_[e] = c / k;
        }
        return r;
    }

    /// Exact polynomial division; throws InexactDivision on a nonzero remainder.
    SymLaurent divided_by(const SymLaurent& d) const {
        if (d.is_zero()) fail(ErrorCode::ZeroPolynomial, "division by zero polynomial");
        SymLaurent rem = *this, quo;
        if (rem.is_zero()) return quo;
        const long dtop = d.max_u();
        const long qlow = min_u() - d.min_u();
        const BigInt& lead = d.terms_.rbegin()->second;
        while (!rem.is_zero() && rem.max_u() - dtop >= qlow) {
            const BigInt& c = rem.terms_.rbegin()->second;
            if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) break;
            SymLaurent step = monomial(rem.max_u() - dtop, c / lead);
            quo += step;
            rem -= step * d;
        }
        if (!rem.is_zero()) fail(ErrorCode::InexactDivision, "nonzero remainder");
        return quo;
    }

    /// Substitute q -> q^k (exponents scale by k).
    SymLaurent scaled(long k) const {
        SymLaurent r;
        for (const auto& [e, c] : terms_) r.terms_[e * k] = c;
        return r;
    }

    BigInt eval_at_one() const {
        BigInt s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    BigInt eval_at_minus_one() const {
        BigInt s = 0;
        for (const auto& [e, c] : terms_) {
            if (e % 2 != 0) fail(ErrorCode::HalfIntegerExponent, "q-exponent " + std::to_string(e) + "/2");
            long qe = e / 2;
            if (qe % 2 == 0) s += c; else s -= c;
        }
        return s;
    }

    /// Human-readable form, q-powers descending, e.g. "q + 10 + q^-1".
    std::string pretty() const {
        if (is_zero()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            BigInt c = it->second;
            long e = it->first;
            bool neg = c < 0;
            if (neg) c = -c;
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            std::string mono;
            if (e != 0) {
                mono = "q";
                if (e != 2) mono += "^" + (e % 2 == 0 ? std::to_string(e / 2) : "(" + std::to_string(e) + "/2)");
            }
            if (mono.empty()) out += to_decimal(c);
            else if (c == 1) out += mono;
            else out += to_decimal(c) + "*" + mono;
        }
        return out;
    }

private:
    void add_term(long e, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<long, BigInt> terms_;
};

/// Dense polynomial in t, index = power of t.
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(std::vector<BigInt> c) : c_(std::move(c)) { trim(); }
    explicit TPoly(const BigInt& k) : c_{k} { trim(); }

    static TPoly monomial(std::size_t power, const BigInt& k = 1) {
        std::vector<BigInt> c(power + 1, BigInt(0));
        c[power] = k;
        return TPoly(std::move(c));
    }
    /// t_n = 1 - t^n.
    static TPoly t_n(std::size_t n) {
        if (n == 0) return TPoly();
        std::vector<BigInt> c(n + 1, BigInt(0));
        c[0] = 1;
        c[n] -= 1;
        return TPoly(std::move(c));
    }

    const std::vector<BigInt>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

    TPoly& operator+=(const TPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    TPoly& operator-=(const TPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }

    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        if (a.is_zero() || b.is_zero()) return TPoly();
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return TPoly(std::move(c));
    }
    TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

    friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }

    /// Keep only powers t^0 .. t^order.
    TPoly truncated(std::size_t order) const {
        if (c_.size() <= order + 1) return *this;
        return TPoly(std::vector<BigInt>(c_.begin(), c_.begin() + static_cast<long>(order) + 1));
    }

    std::string pretty() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            BigInt c = c_[i];
            if (c == 0) continue;
            bool neg = c < 0;
            if (neg) c = -c;
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
            if (mono.empty()) out += to_decimal(c);
            else if (c == 1) out += mono;
            else out += to_decimal(c) + "*" + mono;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

inline SymLaurent quantum_integer(long n) {
    SymLaurent r;
    for (long k = 0; k < n; ++k) r += SymLaurent::monomial(n - 1 - 2 * k);
    return r;
}

inline SymLaurent qint_sq(long n) {
    SymLaurent b = quantum_integer(n);
    return b * b;
}

inline SymLaurent qint_q2(long n) { return quantum_integer(n).scaled(2); }

inline SymLaurent pair_factor(long w, long w2) {
    return (quantum_integer(w) * quantum_integer(w2) * quantum_integer(w + w2)).divided_by(quantum_integer(2));
}

inline BigInt codeg_coeff(const SymLaurent& p, long i) { return p.coeff(p.max_u() - 2 * i); }

inline TPoly tilde(const SymLaurent& p) {
    const long top = p.max_u();
    const long span = (top - p.min_u()) / 2;
    std::vector<BigInt> c(static_cast<std::size_t>(span) + 1, BigInt(0));
    for (long i = 0; i <= span; ++i) c[static_cast<std::size_t>(i)] = p.coeff(top - 2 * i);
    return TPoly(std::move(c));
}

enum class StarKind {
    E0Bounded,
    E0Infinite,
    E1Bounded,
    E1Infinite,
    E2BoundedBounded,
    E2BoundedInfinite,
    E2InfiniteInfinite,
};

inline TPoly star_factor(StarKind kind, long w = 1, long w2 = 1) {
    auto t = [](long n) { return TPoly::t_n(static_cast<std::size_t>(n)); };
    switch (kind) {
    case StarKind::E0Bounded: return t(w) * t(w);
    case StarKind::E0Infinite: return t(1);
    case StarKind::E1Bounded: return t(2 * w);
    case StarKind::E1Infinite: return TPoly(std::vector<BigInt>{1, 1});
    case StarKind::E2BoundedBounded: return t(w) * t(w2) * t(w + w2);
    case StarKind::E2BoundedInfinite: return t(w) * t(w + 1);
    case StarKind::E2InfiniteInfinite: return t(2);
    }
    fail(ErrorCode::BadKind, "unknown star factor kind");
}

inline StarKind star_kind_from_string(const std::string& s) {
    static const std::pair<const char*, StarKind> table[] = {
        {"E0-bounded", StarKind::E0Bounded},
        {"E0-infinite", StarKind::E0Infinite},
        {"E1-bounded", StarKind::E1Bounded},
        {"E1-infinite", StarKind::E1Infinite},
        {"E2-bounded-bounded", StarKind::E2BoundedBounded},
        {"E2-bounded-infinite", StarKind::E2BoundedInfinite},
        {"E2-infinite-infinite", StarKind::E2InfiniteInfinite},
    };
    for (const auto& [name, k] : table)
        if (s == name) return k;
    fail(ErrorCode::BadKind, s);
}

} // namespace refloor
