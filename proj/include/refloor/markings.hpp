#pragma once

#include "bigint.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "floor_diagram.hpp"
#include "qpoly.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace refloor {

/// A set of disjoint pairs {i, i+1} of marking positions (1-based).
class Pairing {
public:
    Pairing() = default;
    explicit Pairing(std::vector<std::pair<long, long>> pairs) : pairs_(std::move(pairs)) {
        std::sort(pairs_.begin(), pairs_.end());
        std::set<long> used;
        for (auto& [i, j] : pairs_) {
            if (j != i + 1) fail(ErrorCode::InvalidPairing, "pair {" + std::to_string(i) + "," + std::to_string(j) + "} is not consecutive");
            if (i < 1) fail(ErrorCode::InvalidPairing, "positions start at 1");
            if (!used.insert(i).second || !used.insert(j).second) fail(ErrorCode::InvalidPairing, "pairs overlap");
        }
    }

    /// {{1,2}, ..., {2s-1, 2s}}
    static Pairing standard(long s) {
        std::vector<std::pair<long, long>> p;
        for (long j = 1; j <= s; ++j) p.emplace_back(2 * j - 1, 2 * j);
        return Pairing(std::move(p));
    }

    long order() const { return static_cast<long>(pairs_.size()); }
    const std::vector<std::pair<long, long>>& pairs() const { return pairs_; }
    long max_position() const { return pairs_.empty() ? 0 : pairs_.back().second; }

    void check_fits(long n) const {
        if (max_position() > n)
            fail(ErrorCode::InvalidPairing, "pair position " + std::to_string(max_position()) + " exceeds n(D) = " + std::to_string(n));
    }

private:
    std::vector<std::pair<long, long>> pairs_;
};

/// Element of the marking poset: a floor, a bounded edge, or an infinite edge at a floor.
struct PosetElement {
    enum class Kind : unsigned char { None, Floor, Edge, Source, Sink } kind = Kind::None;
    int index = 0;
};

namespace detail {

struct EdgeInfo {
    long weight;
    bool infinite;
    int tail; // -1 for a source
    int head; // -1 for a sink
};

inline EdgeInfo edge_info(const FloorDiagram& D, PosetElement e) {
    switch (e.kind) {
    case PosetElement::Kind::Edge: {
        const auto& b = D.edges[e.index];
        return {b.weight, false, b.tail, b.head};
    }
    case PosetElement::Kind::Source: return {1, true, -1, e.index};
    case PosetElement::Kind::Sink: return {1, true, e.index, -1};
    default: return {0, false, -1, -1};
    }
}

inline bool is_edge(PosetElement e) { return e.kind != PosetElement::Kind::Floor && e.kind != PosetElement::Kind::None; }

} // namespace detail

/// Multiplicity factors over some value ring; the marking sums are generic over this.
template <class Algebra>
typename Algebra::Value pair_value(const Algebra& alg, const FloorDiagram& D, PosetElement x, PosetElement y) {
    using K = PosetElement::Kind;
    if (x.kind == K::Floor && y.kind == K::Floor) return alg.zero();
    if (x.kind == K::Floor || y.kind == K::Floor) {
        PosetElement f = x.kind == K::Floor ? x : y;
        PosetElement e = x.kind == K::Floor ? y : x;
        auto info = detail::edge_info(D, e);
        if (info.tail == f.index || info.head == f.index) return alg.edge_vertex(info.weight, info.infinite);
        return alg.zero();
    }
    auto a = detail::edge_info(D, x), b = detail::edge_info(D, y);
    bool same_head = a.head >= 0 && a.head == b.head;
    bool same_tail = a.tail >= 0 && a.tail == b.tail;
    if (same_head || same_tail) return alg.edge_edge(a.weight, a.infinite, b.weight, b.infinite);
    return alg.zero();
}

template <class Algebra>
typename Algebra::Value single_value(const Algebra& alg, const FloorDiagram& D, PosetElement x) {
    if (x.kind == PosetElement::Kind::Floor) return alg.one();
    auto info = detail::edge_info(D, x);
    return alg.unpaired_edge(info.weight, info.infinite);
}

/// Refined multiplicities as Laurent polynomials in q^{1/2}.
struct LaurentAlgebra {
    using Value = SymLaurent;
    Value zero() const { return SymLaurent(); }
    Value one() const { return SymLaurent(BigInt(1)); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value unpaired_edge(long w, bool) const { return qint_sq(w); }
    Value edge_vertex(long w, bool) const { return qint_q2(w); }
    Value edge_edge(long w, bool, long w2, bool) const { return pair_factor(w, w2); }
    Value divide(const Value& a, const BigInt& k) const { return a.divided_by(k); }
};

/// Plain counting: every factor is 1.
struct CountingAlgebra {
    using Value = BigInt;
    Value zero() const { return 0; }
    Value one() const { return 1; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value unpaired_edge(long, bool) const { return 1; }
    Value edge_vertex(long, bool) const { return 1; }
    Value edge_edge(long, bool, long, bool) const { return 1; }
    Value divide(const Value& a, const BigInt& k) const {
        if (!mpz_divisible_p(a.get_mpz_t(), k.get_mpz_t())) fail(ErrorCode::InexactDivision, to_decimal(a) + " / " + to_decimal(k));
        return a / k;
    }
};

namespace detail {

inline TPoly tpoly_div_int(const TPoly& a, const BigInt& k) {
    std::vector<BigInt> c = a.coeffs();
    for (auto& x : c) {
        if (!mpz_divisible_p(x.get_mpz_t(), k.get_mpz_t())) fail(ErrorCode::InexactDivision, to_decimal(x) + " / " + to_decimal(k));
        x /= k;
    }
    return TPoly(std::move(c));
}

} // namespace detail

/// Tilde images of the refined factors, truncated after t^order. Valid because every nonzero
/// multiplicity of a diagram has the same degree.
struct TildeAlgebra {
    using Value = TPoly;
    long order;
    Value zero() const { return TPoly(); }
    Value one() const { return TPoly(BigInt(1)); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value mul(const Value& a, const Value& b) const { return (a * b).truncated(static_cast<std::size_t>(order)); }
    Value unpaired_edge(long w, bool) const { return tilde(qint_sq(w)).truncated(static_cast<std::size_t>(order)); }
    Value edge_vertex(long w, bool) const { return tilde(qint_q2(w)).truncated(static_cast<std::size_t>(order)); }
    Value edge_edge(long w, bool, long w2, bool) const { return tilde(pair_factor(w, w2)).truncated(static_cast<std::size_t>(order)); }
    Value divide(const Value& a, const BigInt& k) const { return detail::tpoly_div_int(a, k); }
};

/// Factors of the star multiplicity, which distinguish bounded and infinite edges.
struct StarAlgebra {
    using Value = TPoly;
    Value zero() const { return TPoly(); }
    Value one() const { return TPoly(BigInt(1)); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value unpaired_edge(long w, bool inf) const { return inf ? star_factor(StarKind::E0Infinite) : star_factor(StarKind::E0Bounded, w); }
    Value edge_vertex(long w, bool inf) const { return inf ? star_factor(StarKind::E1Infinite) : star_factor(StarKind::E1Bounded, w); }
    Value edge_edge(long w, bool inf, long w2, bool inf2) const {
        if (inf && inf2) return star_factor(StarKind::E2InfiniteInfinite);
        if (inf) return star_factor(StarKind::E2BoundedInfinite, w2);
        if (inf2) return star_factor(StarKind::E2BoundedInfinite, w);
        return star_factor(StarKind::E2BoundedBounded, w, w2);
    }
    Value divide(const Value& a, const BigInt& k) const { return detail::tpoly_div_int(a, k); }
};

/// n(D): floors, bounded edges and infinite edges.
inline long marking_size(const FloorDiagram& D) {
    return D.floor_count() + static_cast<long>(D.edges.size()) + D.total_sources() + D.total_sinks();
}

/// Sum over linear extensions of the marking poset (parallel infinite edges at a floor taken as
/// indistinguishable) of the product of pair and single factors.
template <class Algebra>
typename Algebra::Value grouped_extension_sum(const Algebra& alg, const FloorDiagram& D, const Pairing& S) {
    using Value = typename Algebra::Value;
    using K = PosetElement::Kind;
    const int a = D.floor_count();
    const int m = static_cast<int>(D.edges.size());
    const long n = marking_size(D);
    S.check_fits(n);
    if (a > 250) fail(ErrorCode::InvalidArgument, "too many floors");
    for (const auto& f : D.floors)
        if (f.sources > 255 || f.sinks > 255) fail(ErrorCode::InvalidArgument, "too many infinite edges at a floor");

    std::vector<char> first(static_cast<std::size_t>(n) + 2, 0), second(static_cast<std::size_t>(n) + 2, 0);
    for (const auto& [i, j] : S.pairs()) {
        first[i] = 1;
        second[j] = 1;
    }
    std::vector<std::vector<int>> in_edges(static_cast<std::size_t>(a));
    for (int e = 0; e < m; ++e) in_edges[D.edges[e].head].push_back(e);

    // State layout: floor flags | edge flags | sources placed | sinks placed | pending kind | pending index.
    const std::size_t off_edge = static_cast<std::size_t>(a);
    const std::size_t off_src = off_edge + static_cast<std::size_t>(m);
    const std::size_t off_snk = off_src + static_cast<std::size_t>(a);
    const std::size_t off_pend = off_snk + static_cast<std::size_t>(a);
    const std::size_t len = off_pend + 2;

    std::unordered_map<std::string, Value> cur, next;
    cur.emplace(std::string(len, '\0'), alg.one());
    for (long pos = 1; pos <= n; ++pos) {
        next.clear();
        for (const auto& [st, val] : cur) {
            auto u = [&](std::size_t i) { return static_cast<unsigned char>(st[i]); };
            PosetElement pending{static_cast<K>(u(off_pend)), static_cast<int>(u(off_pend + 1))};
            auto push = [&](PosetElement el, std::size_t slot) {
                std::string ns = st;
                ns[slot] = static_cast<char>(u(slot) + 1);
                Value v;
                if (first[pos]) {
                    ns[off_pend] = static_cast<char>(el.kind);
                    ns[off_pend + 1] = static_cast<char>(el.index);
                    v = val;
                } else if (second[pos]) {
                    ns[off_pend] = 0;
                    ns[off_pend + 1] = 0;
                    Value f = pair_value(alg, D, pending, el);
                    if (f == alg.zero()) return;
                    v = alg.mul(val, f);
                } else {
                    v = alg.mul(val, single_value(alg, D, el));
                }
                auto [it, inserted] = next.try_emplace(std::move(ns), v);
                if (!inserted) it->second = alg.add(it->second, v);
            };
            for (int f = 0; f < a; ++f) {
                if (u(off_src + f) < D.floors[f].sources) push({K::Source, f}, off_src + f);
                if (u(f)) {
                    if (u(off_snk + f) < D.floors[f].sinks) push({K::Sink, f}, off_snk + f);
                    continue;
                }
                if (u(off_src + f) != D.floors[f].sources) continue;
                bool ready = true;
                for (int e : in_edges[f])
                    if (!u(off_edge + e)) ready = false;
                if (ready) push({K::Floor, f}, static_cast<std::size_t>(f));
            }
            for (int e = 0; e < m; ++e)
                if (!u(off_edge + e) && u(D.edges[e].tail)) push({K::Edge, e}, off_edge + e);
        }
        std::swap(cur, next);
    }
    Value total = alg.zero();
    for (const auto& [st, val] : cur) total = alg.add(total, val);
    return total;
}

/// Sum over isomorphism classes of markings: the grouped extension sum divided by the tree automorphisms.
template <class Algebra>
typename Algebra::Value marking_sum(const Algebra& alg, const DiagramClass& c, const Pairing& S) {
    return alg.divide(grouped_extension_sum(alg, c.diagram, S), c.tree_aut);
}

inline BigInt count_markings(const DiagramClass& c) { return marking_sum(CountingAlgebra{}, c, Pairing()); }

inline SymLaurent sum_multiplicities(const DiagramClass& c, const Pairing& S) { return marking_sum(LaurentAlgebra{}, c, S); }

} // namespace refloor
