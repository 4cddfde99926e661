#pragma once

#include "bigint.hpp"
#include "combinat.hpp"
#include "errors.hpp"
#include "multipoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace refloor {

/// Power series in x truncated after x^order. Coeff is Rational or MultiPoly.
template <class Coeff>
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(long order) : c_(static_cast<std::size_t>(order) + 1, Coeff(0)) {}
    TruncatedSeries(long order, std::vector<Coeff> c) : c_(std::move(c)) {
        c_.resize(static_cast<std::size_t>(order) + 1, Coeff(0));
    }

    static TruncatedSeries one(long order) {
        TruncatedSeries r(order);
        r.c_[0] = Coeff(1);
        return r;
    }

    long order() const { return static_cast<long>(c_.size()) - 1; }
    const Coeff& operator[](long i) const { return c_[static_cast<std::size_t>(i)]; }
    Coeff& operator[](long i) { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<Coeff>& coeffs() const { return c_; }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_order(b);
        TruncatedSeries r(a.order());
        const std::size_t n = a.c_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (is_zero_coeff(a.c_[i])) continue;
            for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    /// Multiply every coefficient by a coefficient-ring element.
    TruncatedSeries scaled(const Coeff& k) const {
        TruncatedSeries r(order());
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = k * c_[i];
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

    /// x -> x^k
    TruncatedSeries substitute_power(long k) const {
        TruncatedSeries r(order());
        for (long i = 0; i * k <= order(); ++i) r[i * k] = (*this)[i];
        return r;
    }

    TruncatedSeries inverse() const {
        const Coeff& c0 = c_[0];
        if (!(c0 == Coeff(1) || c0 == Coeff(-1))) fail(ErrorCode::ConstantTermNotOne, "inverse needs constant term +-1");
        TruncatedSeries r(order());
        r.c_[0] = c0;
        for (std::size_t n = 1; n < c_.size(); ++n) {
            Coeff acc(0);
            for (std::size_t k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
            r.c_[n] = Coeff(-1) * c0 * acc;
        }
        return r;
    }

    TruncatedSeries pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        TruncatedSeries result = one(order()), base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    TruncatedSeries log() const {
        if (!(c_[0] == Coeff(1))) fail(ErrorCode::ConstantTermNotOne, "log needs constant term 1");
        TruncatedSeries g(order());
        for (std::size_t n = 1; n < c_.size(); ++n) {
            Coeff acc = Coeff(Rational(static_cast<long>(n))) * c_[n];
            for (std::size_t k = 1; k < n; ++k) acc -= Coeff(Rational(static_cast<long>(k))) * g.c_[k] * c_[n - k];
            g.c_[n] = Coeff(Rational(1, static_cast<long>(n))) * acc;
        }
        return g;
    }

    TruncatedSeries exp() const {
        if (!is_zero_coeff(c_[0])) fail(ErrorCode::ConstantTermNotOne, "exp needs constant term 0");
        TruncatedSeries e = one(order());
        for (std::size_t n = 1; n < c_.size(); ++n) {
            Coeff acc(0);
            for (std::size_t k = 1; k <= n; ++k)
                if (!is_zero_coeff(c_[k])) acc += Coeff(Rational(static_cast<long>(k))) * c_[k] * e.c_[n - k];
            e.c_[n] = Coeff(Rational(1, static_cast<long>(n))) * acc;
        }
        return e;
    }

private:
    static bool is_zero_coeff(const Coeff& c) { return c == Coeff(0); }
    void check_order(const TruncatedSeries& o) const {
        if (o.c_.size() != c_.size()) fail(ErrorCode::InvalidArgument, "series orders differ");
    }
    std::vector<Coeff> c_;
};

using RationalSeries = TruncatedSeries<Rational>;
using PolySeries = TruncatedSeries<MultiPoly>;

enum class BaseSeries { A0, A1, A2 };

/// A0 = 1/(1-x^2), A1 = 1/(1-x), A2 = sum p(n) x^n; with k > 1, A2 evaluated at x^k.
inline RationalSeries base_series(BaseSeries which, long order, long k = 1) {
    RationalSeries r(order);
    for (long i = 0; i <= order; ++i) {
        switch (which) {
        case BaseSeries::A0: r[i] = (i % 2 == 0) ? 1 : 0; break;
        case BaseSeries::A1: r[i] = 1; break;
        case BaseSeries::A2: r[i] = Rational(partitions(i)); break;
        }
    }
    return k == 1 ? r : r.substitute_power(k);
}

inline PolySeries lift(const RationalSeries& s) {
    PolySeries r(s.order());
    for (long i = 0; i <= s.order(); ++i) r[i] = MultiPoly(s[i]);
    return r;
}

inline PolySeries pow_symbolic(const RationalSeries& base, const MultiPoly& exponent) {
    if (base[0] != 1) fail(ErrorCode::ConstantTermNotOne, "symbolic power needs constant term 1");
    return lift(base.log()).scaled(exponent).exp();
}

namespace detail {

inline MultiPoly var(const std::string& n) { return MultiPoly::variable(n); }

inline void check_integer_scaled(const std::vector<MultiPoly>& polys) {
    for (std::size_t i = 0; i < polys.size(); ++i) {
        MultiPoly scaled = Rational(factorial(static_cast<unsigned long>(i))) * polys[i];
        if (scaled.denominator_lcm() != 1)
            fail(ErrorCode::NonIntegerResult, "i! * coefficient " + std::to_string(i) + " is not integral");
    }
}

} // namespace detail

/// Coefficients P_0..P_i of A0^s A1^(y-2-2s) A2^chi in the variables y, chi, s.
inline std::vector<MultiPoly> universal_P(long i) {
    using detail::var;
    PolySeries log_sum = lift(base_series(BaseSeries::A0, i).log()).scaled(var("s"));
    log_sum += lift(base_series(BaseSeries::A1, i).log()).scaled(var("y") - MultiPoly(2) - MultiPoly(2) * var("s"));
    log_sum += lift(base_series(BaseSeries::A2, i).log()).scaled(var("chi"));
    auto g = log_sum.exp();
    std::vector<MultiPoly> out(g.coeffs().begin(), g.coeffs().end());
    detail::check_integer_scaled(out);
    return out;
}

/// Coefficients Q_0..Q_i of A0^s A1^(y-2-2s) prod_k A2(x^k)^(n_k) in y, s, n_1..n_i.
inline std::vector<MultiPoly> universal_Q(long i) {
    using detail::var;
    PolySeries log_sum = lift(base_series(BaseSeries::A0, i).log()).scaled(var("s"));
    log_sum += lift(base_series(BaseSeries::A1, i).log()).scaled(var("y") - MultiPoly(2) - MultiPoly(2) * var("s"));
    const auto logA2 = base_series(BaseSeries::A2, i).log();
    for (long k = 1; k <= i; ++k) log_sum += lift(logA2.substitute_power(k)).scaled(var("n_" + std::to_string(k)));
    auto h = log_sum.exp();
    std::vector<MultiPoly> out(h.coeffs().begin(), h.coeffs().end());
    detail::check_integer_scaled(out);
    return out;
}

inline BigInt eval_universal(const MultiPoly& p, const std::map<std::string, BigInt>& at) {
    Rational v = p.evaluate(at);
    if (v.get_den() != 1) fail(ErrorCode::NonIntegerResult, to_decimal(v));
    return v.get_num();
}

/// Numeric path: A0^s A1^(y-2-2s) A2^chi using integer powers and truncated inverses.
inline RationalSeries numeric_G(long y, long chi, long s, long order) {
    return base_series(BaseSeries::A0, order).pow(s) * base_series(BaseSeries::A1, order).pow(y - 2 - 2 * s) *
           base_series(BaseSeries::A2, order).pow(chi);
}

inline RationalSeries numeric_H(long y, long s, const std::map<long, long>& n_k, long order) {
    RationalSeries r = base_series(BaseSeries::A0, order).pow(s) * base_series(BaseSeries::A1, order).pow(y - 2 - 2 * s);
    for (const auto& [k, n] : n_k)
        if (k >= 1) r *= base_series(BaseSeries::A2, order, k).pow(n);
    return r;
}

} // namespace refloor
