#pragma once

#include "enumerate.hpp"
#include "markings.hpp"
#include "polygon.hpp"
#include "qpoly.hpp"
#include "series.hpp"

#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace refloor {

struct EngineOptions {
    std::uint64_t budget = default_budget;
    unsigned threads = 1;
};

namespace detail {

/// Evaluates f on every index in [0, n) with up to `threads` workers; results keep index order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, unsigned threads, F f) {
    std::vector<std::optional<T>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < n;) {
            try {
                slots[i] = f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    std::vector<T> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

inline Pairing resolve_pairing(const HTransverseData& d, long s, const std::optional<Pairing>& pairing) {
    if (s < 0 || s > d.s_max) fail(ErrorCode::InvalidPairing, "s must lie in 0.." + std::to_string(d.s_max));
    Pairing S = pairing ? *pairing : Pairing::standard(s);
    if (S.order() != s) fail(ErrorCode::InvalidPairing, "pairing order differs from s");
    S.check_fits(d.y - 1);
    return S;
}

} // namespace detail

/// G_Delta(s) by full enumeration.
inline SymLaurent refined_invariant(const HTransverseData& d, long s, const std::optional<Pairing>& pairing = std::nullopt,
                                    const EngineOptions& opt = {}) {
    Pairing S = detail::resolve_pairing(d, s, pairing);
    auto classes = enumerate_diagrams(d, {std::nullopt, opt.budget});
    auto parts = detail::parallel_map<SymLaurent>(classes.size(), opt.threads,
                                                  [&](std::size_t i) { return sum_multiplicities(classes[i], S); });
    SymLaurent G;
    for (const auto& p : parts) G += p;
    if (!G.is_zero() && G.max_u() != 2 * d.interior)
        fail(ErrorCode::ConfigurationMismatch, "degree of G differs from the interior point count");
    return G;
}

/// <G_Delta(s)>_i from the diagrams of codegree at most i.
inline BigInt invariant_coeff(const HTransverseData& d, long s, long i, const std::optional<Pairing>& pairing = std::nullopt,
                              const EngineOptions& opt = {}) {
    Pairing S = detail::resolve_pairing(d, s, pairing);
    if (i < 0 || i > 2 * d.interior) return 0;
    auto classes = enumerate_diagrams(d, {i, opt.budget});
    auto parts = detail::parallel_map<BigInt>(classes.size(), opt.threads, [&](std::size_t k) {
        const auto& c = classes[k];
        long rest = i - c.codegree;
        TildeAlgebra alg{rest};
        return marking_sum(alg, c, S).coeff(static_cast<std::size_t>(rest));
    });
    BigInt total = 0;
    for (const auto& p : parts) total += p;
    return total;
}

/// Coefficients <G>_0 .. <G>_i read from a full invariant.
inline std::vector<BigInt> coefficients_by_codegree(const SymLaurent& G) {
    std::vector<BigInt> out;
    if (G.is_zero()) return out;
    for (long i = 0; 2 * i <= G.max_u() - G.min_u(); ++i) out.push_back(codeg_coeff(G, i));
    return out;
}

/// G*_Delta(S) = sum over marked diagrams of t^codeg times the star factors.
inline TPoly star_invariant(const HTransverseData& d, long s, const std::optional<Pairing>& pairing = std::nullopt,
                            const EngineOptions& opt = {}) {
    Pairing S = detail::resolve_pairing(d, s, pairing);
    auto classes = enumerate_diagrams(d, {std::nullopt, opt.budget});
    auto parts = detail::parallel_map<TPoly>(classes.size(), opt.threads, [&](std::size_t k) {
        const auto& c = classes[k];
        return TPoly::monomial(static_cast<std::size_t>(c.codegree)) * marking_sum(StarAlgebra{}, c, S);
    });
    TPoly total;
    for (const auto& p : parts) total += p;
    return total;
}

/// Right-hand side of the tilde identity: A0^s A1^(y-2-2s) G*, truncated after t^order.
inline TPoly tilde_identity_rhs(const HTransverseData& d, long s, const TPoly& star, long order) {
    RationalSeries factor = base_series(BaseSeries::A0, order).pow(s) * base_series(BaseSeries::A1, order).pow(d.y - 2 - 2 * s);
    std::vector<BigInt> c(static_cast<std::size_t>(order) + 1, BigInt(0));
    for (long i = 0; i <= order; ++i)
        for (long j = 0; j <= i; ++j) {
            const Rational& f = factor[i - j];
            if (f.get_den() != 1) fail(ErrorCode::NonIntegerResult, "series coefficient is not integral");
            c[static_cast<std::size_t>(i)] += f.get_num() * star.coeff(static_cast<std::size_t>(j));
        }
    return TPoly(std::move(c));
}

struct VerificationReport {
    long s = 0;
    long i = 0;
    std::string polynomial;   // "P" or "Q"
    std::string formula;      // printed form of P_i or Q_i
    BigInt enumerated = 0;    // <G_Delta(s)>_i
    BigInt universal = 0;     // P_i(y, chi, s) or Q_i(y, s, n_1, ...)
    bool equal = false;
    HypothesisReport hypotheses;

    bool hypotheses_hold() const { return hypotheses.satisfied(); }
    bool hard_failure() const { return hypotheses_hold() && !equal; }
};

/// Theorem whose hypotheses apply to the polygon's shape.
inline Theorem applicable_theorem(const LatticePolygon& p, const HTransverseData& d) {
    if (!d.nonsingular()) return Theorem::SingularTwoVertical;
    if (d.e_top > 0 && d.e_bot > 0) return Theorem::NonsingularTwoVertical;
    if (is_cp2_triangle(p)) return Theorem::CP2;
    return Theorem::NonsingularOneVertical;
}

inline VerificationReport verify_universal(const LatticePolygon& p, const HTransverseData& d, long s, long i,
                                           const EngineOptions& opt = {}) {
    VerificationReport rep;
    rep.s = s;
    rep.i = i;
    rep.hypotheses = check_hypotheses(p, d, i, s, applicable_theorem(p, d));
    rep.enumerated = invariant_coeff(d, s, i, std::nullopt, opt);
    std::map<std::string, BigInt> at{{"y", d.y}, {"chi", d.chi}, {"s", s}};
    if (d.nonsingular()) {
        rep.polynomial = "P";
        MultiPoly P = universal_P(i).back();
        rep.formula = P.pretty_factored();
        rep.universal = eval_universal(P, at);
    } else {
        rep.polynomial = "Q";
        MultiPoly Q = universal_Q(i).back();
        for (long k = 1; k <= std::max<long>(i, 1); ++k) at["n_" + std::to_string(k)] = d.n(k);
        rep.formula = Q.pretty_factored();
        rep.universal = eval_universal(Q, at);
    }
    rep.equal = rep.enumerated == rep.universal;
    return rep;
}

} // namespace refloor
