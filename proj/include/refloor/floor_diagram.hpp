#pragma once

#include "errors.hpp"
#include "polygon.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace refloor {

struct Floor {
    long ell = 0;
    long r = 0;
    long sources = 0;
    long sinks = 0;
    friend bool operator==(const Floor&, const Floor&) = default;
};

struct BoundedEdge {
    int tail = 0;
    int head = 0;
    long weight = 1;
    friend bool operator==(const BoundedEdge&, const BoundedEdge&) = default;
};

struct FloorDiagram {
    std::vector<Floor> floors;
    std::vector<BoundedEdge> edges;

    int floor_count() const { return static_cast<int>(floors.size()); }

    /// Total weight entering v minus total weight leaving v, infinite edges included.
    long divergence(int v) const {
        long d = floors[v].sources - floors[v].sinks;
        for (const auto& e : edges) {
            if (e.head == v) d += e.weight;
            if (e.tail == v) d -= e.weight;
        }
        return d;
    }

    long degree() const {
        long d = 0;
        for (const auto& e : edges) d += e.weight - 1;
        return d;
    }

    long total_sources() const {
        long t = 0;
        for (const auto& f : floors) t += f.sources;
        return t;
    }
    long total_sinks() const {
        long t = 0;
        for (const auto& f : floors) t += f.sinks;
        return t;
    }

    friend bool operator==(const FloorDiagram&, const FloorDiagram&) = default;
};

inline long codegree(const FloorDiagram& D, long interior) {
    long c = interior - D.degree();
    if (c < 0) fail(ErrorCode::NegativeCodegree, "degree exceeds the interior point count");
    return c;
}

inline bool is_tree(const FloorDiagram& D) {
    const int n = D.floor_count();
    if (n == 0 || static_cast<int>(D.edges.size()) != n - 1) return false;
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : D.edges) {
        if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) return false;
        int a = find(e.tail), b = find(e.head);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

/// Returns an empty string when D is a floor diagram with Newton polygon data d, else the reason.
inline std::string validation_error(const FloorDiagram& D, const HTransverseData& d) {
    if (D.floor_count() != d.a) return "floor count differs from a";
    if (!is_tree(D)) return "bounded edges do not form a tree";
    for (const auto& e : D.edges)
        if (e.weight < 1) return "non-positive edge weight";
    std::vector<long> L, R;
    for (int v = 0; v < D.floor_count(); ++v) {
        const Floor& f = D.floors[v];
        if (f.sources < 0 || f.sinks < 0) return "negative infinite edge count";
        if (D.divergence(v) != f.r - f.ell) return "divergence law fails at floor " + std::to_string(v);
        L.push_back(f.ell);
        R.push_back(f.r);
    }
    std::sort(L.begin(), L.end());
    std::sort(R.begin(), R.end());
    if (L != d.L) return "ell values differ from L";
    if (R != d.R) return "r values differ from R";
    if (D.total_sources() != d.e_bot) return "source count differs from the bottom edge length";
    if (D.total_sinks() != d.e_top) return "sink count differs from the top edge length";
    if (D.degree() > d.interior) return "degree exceeds the interior point count";
    return {};
}

inline bool is_valid(const FloorDiagram& D, const HTransverseData& d) { return validation_error(D, d).empty(); }

/// True if there is a directed path from u to v (u != v).
inline bool precedes(const FloorDiagram& D, int u, int v) {
    std::vector<int> stack{u};
    std::vector<char> seen(D.floors.size(), 0);
    seen[u] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& e : D.edges)
            if (e.tail == x && !seen[e.head]) {
                if (e.head == v) return true;
                seen[e.head] = 1;
                stack.push_back(e.head);
            }
    }
    return false;
}

inline std::vector<int> maximal_floors(const FloorDiagram& D) {
    std::vector<int> out;
    for (int v = 0; v < D.floor_count(); ++v)
        if (std::none_of(D.edges.begin(), D.edges.end(), [&](const BoundedEdge& e) { return e.tail == v; })) out.push_back(v);
    return out;
}

inline std::vector<int> minimal_floors(const FloorDiagram& D) {
    std::vector<int> out;
    for (int v = 0; v < D.floor_count(); ++v)
        if (std::none_of(D.edges.begin(), D.edges.end(), [&](const BoundedEdge& e) { return e.head == v; })) out.push_back(v);
    return out;
}

/// A bounded edge, or one of the infinite edges attached to a floor.
struct EdgeRef {
    enum class Kind { Bounded, Source, Sink } kind = Kind::Bounded;
    int index = 0; // edge index for Bounded, floor index otherwise

    static EdgeRef bounded(int i) { return {Kind::Bounded, i}; }
    static EdgeRef source(int v) { return {Kind::Source, v}; }
    static EdgeRef sink(int v) { return {Kind::Sink, v}; }
};

namespace detail {

inline const BoundedEdge& checked_edge(const FloorDiagram& D, int e) {
    if (e < 0 || e >= static_cast<int>(D.edges.size())) fail(ErrorCode::ConfigurationMismatch, "no such edge");
    return D.edges[e];
}

} // namespace detail

/// e1 = v1 -> v2; e2 leaves v1 without entering v2 and is moved to leave v2.
inline FloorDiagram op_A_plus(const FloorDiagram& D, int e1, EdgeRef e2) {
    const BoundedEdge& a = detail::checked_edge(D, e1);
    FloorDiagram out = D;
    long w2 = 1;
    if (e2.kind == EdgeRef::Kind::Sink) {
        if (e2.index != a.tail || D.floors[a.tail].sinks < 1) fail(ErrorCode::ConfigurationMismatch, "no sink at the lower floor");
        --out.floors[a.tail].sinks;
        ++out.floors[a.head].sinks;
    } else if (e2.kind == EdgeRef::Kind::Bounded) {
        if (e2.index == e1) fail(ErrorCode::ConfigurationMismatch, "e2 must differ from e1");
        const BoundedEdge& b = detail::checked_edge(D, e2.index);
        if (b.tail != a.tail || b.head == a.head) fail(ErrorCode::ConfigurationMismatch, "e2 must leave v1 and not enter v2");
        w2 = b.weight;
        out.edges[e2.index].tail = a.head;
    } else {
        fail(ErrorCode::ConfigurationMismatch, "a source never leaves a floor");
    }
    out.edges[e1].weight += w2;
    return out;
}

/// e1 = v1 -> v2; e2 enters v2 without leaving v1 and is moved to enter v1.
inline FloorDiagram op_A_minus(const FloorDiagram& D, int e1, EdgeRef e2) {
    const BoundedEdge& a = detail::checked_edge(D, e1);
    FloorDiagram out = D;
    long w2 = 1;
    if (e2.kind == EdgeRef::Kind::Source) {
        if (e2.index != a.head || D.floors[a.head].sources < 1) fail(ErrorCode::ConfigurationMismatch, "no source at the upper floor");
        --out.floors[a.head].sources;
        ++out.floors[a.tail].sources;
    } else if (e2.kind == EdgeRef::Kind::Bounded) {
        if (e2.index == e1) fail(ErrorCode::ConfigurationMismatch, "e2 must differ from e1");
        const BoundedEdge& b = detail::checked_edge(D, e2.index);
        if (b.head != a.head || b.tail == a.tail) fail(ErrorCode::ConfigurationMismatch, "e2 must enter v2 and not leave v1");
        w2 = b.weight;
        out.edges[e2.index].head = a.tail;
    } else {
        fail(ErrorCode::ConfigurationMismatch, "a sink never enters a floor");
    }
    out.edges[e1].weight += w2;
    return out;
}

inline FloorDiagram op_B_ell(const FloorDiagram& D, int e) {
    const BoundedEdge& a = detail::checked_edge(D, e);
    long l1 = D.floors[a.tail].ell, l2 = D.floors[a.head].ell;
    if (!(l1 < l2)) fail(ErrorCode::ConfigurationMismatch, "needs ell(v1) < ell(v2)");
    FloorDiagram out = D;
    std::swap(out.floors[a.tail].ell, out.floors[a.head].ell);
    out.edges[e].weight += l2 - l1;
    return out;
}

inline FloorDiagram op_B_r(const FloorDiagram& D, int e) {
    const BoundedEdge& a = detail::checked_edge(D, e);
    long r1 = D.floors[a.tail].r, r2 = D.floors[a.head].r;
    if (!(r1 > r2)) fail(ErrorCode::ConfigurationMismatch, "needs r(v1) > r(v2)");
    FloorDiagram out = D;
    std::swap(out.floors[a.tail].r, out.floors[a.head].r);
    out.edges[e].weight += r1 - r2;
    return out;
}

} // namespace refloor
