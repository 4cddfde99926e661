#pragma once

#include "bigint.hpp"
#include "errors.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace refloor {

/// Exponent vector keyed by variable name; zero exponents are never stored.
using Monomial = std::map<std::string, long>;

namespace detail {

inline std::tuple<int, long, std::string> variable_rank(const std::string& v) {
    if (v == "y") return {0, 0, v};
    if (v == "chi") return {1, 0, v};
    if (v == "d") return {2, 0, v};
    if (v == "s") return {3, 0, v};
    if (v.size() > 2 && v.rfind("n_", 0) == 0) {
        try {
            return {4, std::stol(v.substr(2)), v};
        } catch (...) {
        }
    }
    return {5, 0, v};
}

inline bool variable_less(const std::string& a, const std::string& b) { return variable_rank(a) < variable_rank(b); }

inline long total_degree(const Monomial& m) {
    long d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

/// True if a should be printed before b: higher total degree first, then lexicographically
/// larger exponent vector in the fixed variable order.
inline bool print_before(const Monomial& a, const Monomial& b) {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    std::vector<std::string> vars;
    for (const auto& [v, e] : a) vars.push_back(v);
    for (const auto& [v, e] : b) vars.push_back(v);
    std::sort(vars.begin(), vars.end(), variable_less);
    for (const auto& v : vars) {
        auto ia = a.find(v), ib = b.find(v);
        long ea = ia == a.end() ? 0 : ia->second;
        long eb = ib == b.end() ? 0 : ib->second;
        if (ea != eb) return ea > eb;
    }
    return false;
}

} // namespace detail

class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(const Rational& c) {
        if (c != 0) terms_[Monomial{}] = c;
    }
    MultiPoly(long c) : MultiPoly(Rational(c)) {}

    static MultiPoly variable(const std::string& name, long power = 1) {
        MultiPoly p;
        if (power == 0) p.terms_[Monomial{}] = 1;
        else p.terms_[Monomial{{name, power}}] = 1;
        return p;
    }
    static MultiPoly term(Monomial m, const Rational& c) {
        MultiPoly p;
        for (auto it = m.begin(); it != m.end();)
            it = it->second == 0 ? m.erase(it) : std::next(it);
        if (c != 0) p.terms_[std::move(m)] = c;
        return p;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    std::vector<std::string> variables() const {
        std::vector<std::string> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m)
                if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        std::sort(out.begin(), out.end(), detail::variable_less);
        return out;
    }

    long degree_in(const std::string& var) const {
        long d = 0;
        for (const auto& [m, c] : terms_) {
            auto it = m.find(var);
            if (it != m.end()) d = std::max(d, it->second);
        }
        return d;
    }
    long total_degree() const {
        long d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, detail::total_degree(m));
        return d;
    }

    /// Least common multiple of the coefficient denominators.
    BigInt denominator_lcm() const {
        BigInt l = 1;
        for (const auto& [m, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        return l;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    MultiPoly operator-() const { return MultiPoly() - *this; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (const auto& [v, e] : mb) m[v] += e;
                r.add_term(m, ca * cb);
            }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend MultiPoly operator*(const Rational& k, const MultiPoly& a) {
        MultiPoly r;
        if (k == 0) return r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = k * c;
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const Rational& k) { return k * a; }
    friend MultiPoly operator/(const MultiPoly& a, const Rational& k) { return (1 / k) * a; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    /// Substitute some variables by polynomials; variables absent from the map are kept.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& sub) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            MultiPoly t(c);
            Monomial keep;
            for (const auto& [v, e] : m) {
                auto it = sub.find(v);
                if (it == sub.end()) {
                    keep[v] = e;
                    continue;
                }
                for (long k = 0; k < e; ++k) t *= it->second;
            }
            r += t * term(keep, 1);
        }
        return r;
    }

    Rational evaluate(const std::map<std::string, BigInt>& at) const {
        Rational total = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (const auto& [v, e] : m) {
                auto it = at.find(v);
                if (it == at.end()) fail(ErrorCode::MissingVariable, v);
                BigInt pw;
                mpz_pow_ui(pw.get_mpz_t(), it->second.get_mpz_t(), static_cast<unsigned long>(e));
                t *= Rational(pw);
            }
            total += t;
        }
        total.canonicalize();
        return total;
    }

    /// Terms in print order.
    std::vector<std::pair<Monomial, Rational>> ordered_terms() const {
        std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
        std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return detail::print_before(a.first, b.first); });
        return out;
    }

    /// e.g. "y + chi - 2*s - 2" or "1/2*y^2 + ...".
    std::string pretty() const {
        if (is_zero()) return "0";
        std::string out;
        for (const auto& [m, c0] : ordered_terms()) {
            Rational c = c0;
            bool neg = c < 0;
            if (neg) c = -c;
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            std::vector<std::string> vars;
            for (const auto& [v, e] : m) vars.push_back(v);
            std::sort(vars.begin(), vars.end(), detail::variable_less);
            std::string mono;
            for (const auto& v : vars) {
                if (!mono.empty()) mono += "*";
                mono += v;
                if (m.at(v) != 1) mono += "^" + std::to_string(m.at(v));
            }
            if (mono.empty()) out += to_decimal(c);
            else if (c == 1) out += mono;
            else out += to_decimal(c) + "*" + mono;
        }
        return out;
    }

    /// Pulls out the common denominator: "1/2*(y^2 + ...)".
    std::string pretty_factored() const {
        BigInt den = denominator_lcm();
        if (den == 1) return pretty();
        return "1/" + to_decimal(den) + "*(" + (Rational(den) * *this).pretty() + ")";
    }

private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Monomial, Rational> terms_;
};

} // namespace refloor
