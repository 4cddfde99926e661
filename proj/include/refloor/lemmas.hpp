#pragma once

#include "combinat.hpp"
#include "enumerate.hpp"
#include "floor_diagram.hpp"
#include "qpoly.hpp"
#include "series.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace refloor {

struct LemmaResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct LemmaBounds {
    long partitions_max = 12;
    long phi_max = 6;
    long qint_k_max = 4;
    long qint_i_max = 4;
    long n_series_ap_max = 6;
    long n_series_s_max = 3;
    long n_series_order = 6;
    long phi_series_k_max = 4;
    long phi_series_order = 8;
    long operation_trials = 200;
    unsigned seed = 20240611;

    /// Scale every bound down to at most `cap` (the trial count is kept).
    static LemmaBounds capped(long cap) {
        LemmaBounds b;
        b.partitions_max = cap;
        for (long* v : {&b.phi_max, &b.qint_k_max, &b.qint_i_max, &b.n_series_ap_max, &b.n_series_s_max, &b.n_series_order,
                        &b.phi_series_k_max, &b.phi_series_order})
            *v = std::min(*v, cap);
        return b;
    }
};

inline LemmaResult lemma_partition_count(long max) {
    LemmaResult r{"|B_i| = p(i) for i <= " + std::to_string(max), true, ""};
    for (long i = 0; i <= max; ++i) {
        auto n = static_cast<long>(enumerate_B(i).size());
        if (BigInt(n) != partitions(i)) {
            r.passed = false;
            r.detail = "i = " + std::to_string(i) + ": " + std::to_string(n) + " vs " + to_decimal(partitions(i));
            return r;
        }
    }
    return r;
}

inline LemmaResult lemma_phi_binomial(long max) {
    LemmaResult r{"Phi_l(k) = C(2k+l-1, l) = F(k, k+l) for k, l <= " + std::to_string(max), true, ""};
    for (long k = 0; k <= max; ++k)
        for (long l = 0; l <= max; ++l)
            if (phi(l, k) != brute_F(k, k + l)) {
                r.passed = false;
                r.detail = "k = " + std::to_string(k) + ", l = " + std::to_string(l);
                return r;
            }
    return r;
}

inline LemmaResult lemma_qint_product(long k_max, long i_max) {
    LemmaResult r{"<prod [a_j]^2>_i = Phi_i(k) for k <= " + std::to_string(k_max) + ", i <= " + std::to_string(i_max), true, ""};
    long checked = 0;
    for (long k = 0; k <= k_max; ++k)
        for (long i = 0; i <= i_max; ++i) {
            std::vector<long> a(static_cast<std::size_t>(k), i + 1);
            while (true) {
                SymLaurent prod(BigInt(1));
                for (long x : a) prod *= qint_sq(x);
                ++checked;
                if (codeg_coeff(prod, i) != phi(i, k)) {
                    r.passed = false;
                    r.detail = "k = " + std::to_string(k) + ", i = " + std::to_string(i);
                    return r;
                }
                std::size_t pos = 0;
                while (pos < a.size() && a[pos] == i + 3) a[pos++] = i + 1;
                if (pos == a.size()) break;
                ++a[pos];
            }
        }
    r.detail = std::to_string(checked) + " products";
    return r;
}

inline LemmaResult lemma_n_series(long ap_max, long s_max, long order) {
    LemmaResult r{"sum_S C(s,S) N(a,p,S) = A0^s A1^a A2^p to order " + std::to_string(order), true, ""};
    for (long a = 0; a <= ap_max; ++a)
        for (long p = 0; p <= ap_max; ++p)
            for (long s = 0; s <= s_max; ++s) {
                std::vector<BigInt> lhs(static_cast<std::size_t>(order) + 1, BigInt(0));
                for (const auto& S : enumerate_decompositions(s, order)) {
                    BigInt mult = multinomial(s, S);
                    auto n = N_series(a, p, S, order);
                    for (long j = 0; j <= order; ++j) lhs[static_cast<std::size_t>(j)] += mult * n[static_cast<std::size_t>(j)];
                }
                auto rhs = base_series(BaseSeries::A0, order).pow(s) * base_series(BaseSeries::A1, order).pow(a) *
                           base_series(BaseSeries::A2, order).pow(p);
                for (long j = 0; j <= order; ++j)
                    if (Rational(lhs[static_cast<std::size_t>(j)]) != rhs[j]) {
                        r.passed = false;
                        r.detail = "a = " + std::to_string(a) + ", p = " + std::to_string(p) + ", s = " + std::to_string(s) +
                                   ", x^" + std::to_string(j);
                        return r;
                    }
            }
    return r;
}

inline LemmaResult lemma_phi_series(long k_max, long order) {
    LemmaResult r{"sum_l Phi_l(k) x^l = A1^(2k) for k <= " + std::to_string(k_max), true, ""};
    for (long k = 0; k <= k_max; ++k) {
        auto rhs = base_series(BaseSeries::A1, order).pow(2 * k);
        for (long l = 0; l <= order; ++l)
            if (Rational(phi(l, k)) != rhs[l]) {
                r.passed = false;
                r.detail = "k = " + std::to_string(k) + ", l = " + std::to_string(l);
                return r;
            }
    }
    return r;
}

/// One application of A+, A-, B^l or B^r together with the codegree drop the lemma predicts.
struct Operation {
    std::string kind;
    std::function<FloorDiagram(const FloorDiagram&)> apply;
    long expected_drop = 0;
};

inline std::vector<Operation> applicable_operations(const FloorDiagram& D) {
    std::vector<Operation> ops;
    const int m = static_cast<int>(D.edges.size());
    for (int e1 = 0; e1 < m; ++e1) {
        const auto& a = D.edges[e1];
        if (D.floors[a.tail].sinks > 0)
            ops.push_back({"A+", [=](const FloorDiagram& x) { return op_A_plus(x, e1, EdgeRef::sink(a.tail)); }, 1});
        if (D.floors[a.head].sources > 0)
            ops.push_back({"A-", [=](const FloorDiagram& x) { return op_A_minus(x, e1, EdgeRef::source(a.head)); }, 1});
        for (int e2 = 0; e2 < m; ++e2) {
            if (e2 == e1) continue;
            const auto& b = D.edges[e2];
            if (b.tail == a.tail && b.head != a.head)
                ops.push_back({"A+", [=](const FloorDiagram& x) { return op_A_plus(x, e1, EdgeRef::bounded(e2)); }, b.weight});
            if (b.head == a.head && b.tail != a.tail)
                ops.push_back({"A-", [=](const FloorDiagram& x) { return op_A_minus(x, e1, EdgeRef::bounded(e2)); }, b.weight});
        }
        long l1 = D.floors[a.tail].ell, l2 = D.floors[a.head].ell;
        if (l1 < l2) ops.push_back({"B^l", [=](const FloorDiagram& x) { return op_B_ell(x, e1); }, l2 - l1});
        long r1 = D.floors[a.tail].r, r2 = D.floors[a.head].r;
        if (r1 > r2) ops.push_back({"B^r", [=](const FloorDiagram& x) { return op_B_r(x, e1); }, r1 - r2});
    }
    return ops;
}

inline std::vector<LatticePolygon> operation_corpus() {
    std::vector<std::vector<std::pair<long, long>>> raw = {
        {{0, 0}, {3, 0}, {0, 3}},
        {{0, 0}, {1, 0}, {3, 1}, {3, 2}, {2, 3}, {1, 3}, {0, 2}},
        {{0, 0}, {4, 0}, {0, 4}},
        {{0, 0}, {3, 0}, {3, 3}, {0, 3}},
        {{0, 0}, {4, 0}, {2, 2}, {0, 2}},
        {{0, 0}, {5, 0}, {3, 2}, {0, 2}},
        {{0, 0}, {2, 0}, {4, 2}, {0, 2}},
    };
    std::vector<LatticePolygon> out;
    for (const auto& r : raw) out.push_back(parse_polygon(r));
    return out;
}

inline LemmaResult lemma_operation_drops(long trials, unsigned seed) {
    LemmaResult r{"codegree drops under A+/A-/B^l/B^r (" + std::to_string(trials) + " random applications)", true, ""};
    std::mt19937 rng(seed);
    struct Pool {
        HTransverseData d;
        std::vector<DiagramClass> classes;
    };
    std::vector<Pool> pools;
    for (const auto& p : operation_corpus()) {
        auto d = h_transverse_data(p);
        pools.push_back({d, enumerate_diagrams(d)});
    }
    std::map<std::string, long> by_kind;
    long done = 0, attempts = 0;
    while (done < trials) {
        if (++attempts > 100 * trials) {
            r.passed = false;
            r.detail = "could not find enough applicable operations";
            return r;
        }
        const Pool& pool = pools[std::uniform_int_distribution<std::size_t>(0, pools.size() - 1)(rng)];
        const auto& c = pool.classes[std::uniform_int_distribution<std::size_t>(0, pool.classes.size() - 1)(rng)];
        auto ops = applicable_operations(c.diagram);
        if (ops.empty()) continue;
        const auto& op = ops[std::uniform_int_distribution<std::size_t>(0, ops.size() - 1)(rng)];
        FloorDiagram after = op.apply(c.diagram);
        std::string why = validation_error(after, pool.d);
        long drop = codegree(c.diagram, pool.d.interior) - (pool.d.interior - after.degree());
        if (!why.empty() || drop != op.expected_drop) {
            r.passed = false;
            r.detail = op.kind + " on " + c.form + ": " + (why.empty() ? "drop " + std::to_string(drop) : why);
            return r;
        }
        ++by_kind[op.kind];
        ++done;
    }
    std::ostringstream os;
    for (const auto& [k, n] : by_kind) os << k << ":" << n << " ";
    r.detail = os.str();
    return r;
}

inline std::vector<LemmaResult> run_lemma_suite(const LemmaBounds& b = {}) {
    return {
        lemma_partition_count(b.partitions_max),
        lemma_phi_binomial(b.phi_max),
        lemma_qint_product(b.qint_k_max, b.qint_i_max),
        lemma_n_series(b.n_series_ap_max, b.n_series_s_max, b.n_series_order),
        lemma_phi_series(b.phi_series_k_max, b.phi_series_order),
        lemma_operation_drops(b.operation_trials, b.seed),
    };
}

} // namespace refloor
