#pragma once

#include "errors.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace refloor {

struct Point {
    long x = 0;
    long y = 0;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

inline long cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

class LatticePolygon {
public:
    LatticePolygon() = default;

    const std::vector<Point>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }

    /// Twice the (positive) area.
    long twice_area() const {
        long s = 0;
        for (std::size_t i = 0; i < v_.size(); ++i) {
            const Point& p = v_[i];
            const Point& q = v_[(i + 1) % v_.size()];
            s += p.x * q.y - q.x * p.y;
        }
        return s;
    }

    friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

private:
    friend LatticePolygon parse_polygon(const std::vector<Point>& pts);
    std::vector<Point> v_;
};

/// Accepts the input as a point set; every point must lie on the boundary of its convex hull.
inline LatticePolygon parse_polygon(const std::vector<Point>& pts) {
    if (pts.size() < 3) fail(ErrorCode::Degenerate, "need at least 3 points");
    std::vector<Point> s = pts;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) fail(ErrorCode::Degenerate, "repeated vertex");

    // Andrew's monotone chain, collinear points dropped.
    std::vector<Point> h(2 * s.size());
    std::size_t k = 0;
    for (const auto& p : s) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = s.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], s[i]) <= 0) --k;
        h[k++] = s[i];
    }
    h.resize(k - 1);
    if (h.size() < 3) fail(ErrorCode::Degenerate, "zero area");

    for (const auto& p : s) {
        bool on_boundary = false;
        for (std::size_t i = 0; i < h.size() && !on_boundary; ++i) {
            const Point& a = h[i];
            const Point& b = h[(i + 1) % h.size()];
            if (cross(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
                std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y))
                on_boundary = true;
        }
        if (!on_boundary)
            fail(ErrorCode::NotConvex, "point (" + std::to_string(p.x) + "," + std::to_string(p.y) + ") is not on the hull boundary");
    }

    LatticePolygon out;
    out.v_ = std::move(h); // already counterclockwise starting from the lexicographic minimum
    return out;
}

inline LatticePolygon parse_polygon(const std::vector<std::pair<long, long>>& pts) {
    std::vector<Point> p;
    p.reserve(pts.size());
    for (const auto& [x, y] : pts) p.push_back({x, y});
    return parse_polygon(p);
}

struct Edge {
    Point from, to;
    long dx = 0, dy = 0;   // full difference vector
    long length = 0;       // lattice length
    long px = 0, py = 0;   // primitive direction
};

inline std::vector<Edge> edges_of(const LatticePolygon& p) {
    std::vector<Edge> out;
    const auto& v = p.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        Edge e;
        e.from = v[i];
        e.to = v[(i + 1) % v.size()];
        e.dx = e.to.x - e.from.x;
        e.dy = e.to.y - e.from.y;
        e.length = std::gcd(std::labs(e.dx), std::labs(e.dy));
        e.px = e.dx / e.length;
        e.py = e.dy / e.length;
        out.push_back(e);
    }
    return out;
}

struct HTransverseData {
    long a = 0;
    long e_top = 0;
    long e_bot = 0;
    std::vector<long> L; // sorted ascending
    std::vector<long> R; // sorted ascending
    long y = 0;
    long chi = 0;
    long interior = 0;
    std::map<long, long> n_k;
    long d_F = 0;
    long s_max = 0;
    long min_edge_length = 0;
    long twice_area = 0;

    long n(long k) const {
        auto it = n_k.find(k);
        return it == n_k.end() ? 0 : it->second;
    }
    bool nonsingular() const {
        for (const auto& [k, c] : n_k)
            if (k != 1 && c != 0) return false;
        return true;
    }
};

inline long divergence_bound(const std::vector<long>& L, const std::vector<long>& R) {
    if (L.empty() || R.empty()) return 0;
    auto [minL, maxL] = std::minmax_element(L.begin(), L.end());
    auto [minR, maxR] = std::minmax_element(R.begin(), R.end());
    return std::max(std::labs(*maxR - *minL), std::labs(*minR - *maxL));
}

inline long divergence_bound(const HTransverseData& d) { return divergence_bound(d.L, d.R); }

inline HTransverseData h_transverse_data(const LatticePolygon& p) {
    HTransverseData d;
    auto es = edges_of(p);
    long ymin = p.vertices().front().y, ymax = ymin;
    for (const auto& v : p.vertices()) {
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    d.a = ymax - ymin;
    long boundary = 0;
    d.min_edge_length = es.front().length;
    for (const auto& e : es) {
        boundary += e.length;
        d.min_edge_length = std::min(d.min_edge_length, e.length);
        if (e.py == 0) {
            if (std::labs(e.px) != 1) fail(ErrorCode::NotHTransverse, "bad horizontal direction");
            if (e.px > 0) d.e_bot = e.length;
            else d.e_top = e.length;
            continue;
        }
        if (std::labs(e.py) != 1)
            fail(ErrorCode::NotHTransverse, "edge direction (" + std::to_string(e.px) + "," + std::to_string(e.py) + ")");
        if (e.py > 0) d.R.insert(d.R.end(), static_cast<std::size_t>(e.length), -e.px);
        else d.L.insert(d.L.end(), static_cast<std::size_t>(e.length), e.px);
    }
    std::sort(d.L.begin(), d.L.end());
    std::sort(d.R.begin(), d.R.end());
    d.y = boundary;
    d.chi = static_cast<long>(p.size());
    d.twice_area = p.twice_area();
    d.interior = (d.twice_area - d.y + 2) / 2;
    for (std::size_t i = 0; i < es.size(); ++i) {
        const Edge& in = es[(i + es.size() - 1) % es.size()];
        const Edge& out = es[i];
        long idx = std::labs(in.px * out.py - in.py * out.px);
        ++d.n_k[idx];
    }
    d.d_F = divergence_bound(d.L, d.R);
    d.s_max = (d.y - 1) / 2;
    return d;
}

inline bool is_h_transverse(const LatticePolygon& p) {
    for (const auto& e : edges_of(p))
        if (!(e.py == 0 || std::labs(e.py) == 1)) return false;
    return true;
}

enum class Theorem {
    NonsingularTwoVertical,
    NonsingularOneVertical,
    SingularTwoVertical,
    CP2,
    Star,
};

inline std::string to_string(Theorem t) {
    switch (t) {
    case Theorem::NonsingularTwoVertical: return "nonsingular-two-vertical";
    case Theorem::NonsingularOneVertical: return "nonsingular-one-vertical";
    case Theorem::SingularTwoVertical: return "singular-two-vertical";
    case Theorem::CP2: return "cp2";
    case Theorem::Star: return "star";
    }
    return "unknown";
}

struct HypothesisCheck {
    std::string name;
    bool holds = false;
};

struct HypothesisReport {
    Theorem theorem{};
    long i = 0;
    long s = 0;
    std::vector<HypothesisCheck> checks;

    bool satisfied() const {
        return std::all_of(checks.begin(), checks.end(), [](const HypothesisCheck& c) { return c.holds; });
    }
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (!c.holds) out.push_back(c.name);
        return out;
    }
};

/// Translate of the triangle (0,0), (d,0), (0,d).
inline bool is_cp2_triangle(const LatticePolygon& p) {
    const auto& v = p.vertices();
    if (v.size() != 3) return false;
    long dd = v[1].x - v[0].x;
    return dd > 0 && v[1].y == v[0].y && v[2].x == v[0].x && v[2].y == v[0].y + dd;
}

inline HypothesisReport check_hypotheses(const LatticePolygon& p, const HTransverseData& d, long i, long s, Theorem which) {
    HypothesisReport rep;
    rep.theorem = which;
    rep.i = i;
    rep.s = s;
    auto add = [&](std::string name, bool holds) { rep.checks.push_back({std::move(name), holds}); };
    auto edges_gt = [&](long c) { add("Δ > " + std::to_string(c), d.min_edge_length > c); };
    auto gt = [&](const char* lhs, long value, long c) { add(std::string(lhs) + " > " + std::to_string(c), value > c); };
    const long fan_term = i + (d.a - d.a / 2 + 1) * d.d_F;

    add("0 <= s <= s_max", s >= 0 && s <= d.s_max);
    switch (which) {
    case Theorem::NonsingularTwoVertical:
        add("two horizontal edges", d.e_top > 0 && d.e_bot > 0);
        add("nonsingular", d.nonsingular());
        edges_gt(2 * (i + 2));
        gt("e_top", d.e_top, fan_term);
        gt("e_bot", d.e_bot, std::max(i + 2 * s, fan_term));
        break;
    case Theorem::NonsingularOneVertical: {
        add("exactly one horizontal edge", (d.e_top > 0) != (d.e_bot > 0));
        add("nonsingular", d.nonsingular());
        edges_gt(2 * (i + 2));
        gt("a", d.a, std::max(i + 2 * s, 5 * (i + 1) + 6));
        long e = d.e_top > 0 ? d.e_top : d.e_bot;
        gt(d.e_top > 0 ? "e_top" : "e_bot", e, std::max({i + 2 * s, 5 * (i + 1) + 6, fan_term}));
        break;
    }
    case Theorem::SingularTwoVertical:
        add("two horizontal edges", d.e_top > 0 && d.e_bot > 0);
        edges_gt(2 * (i + 2));
        gt("e_bot", d.e_bot, std::max(fan_term, i + 2 * s));
        gt("e_top", d.e_top, fan_term);
        break;
    case Theorem::CP2:
        add("projective plane triangle", is_cp2_triangle(p));
        edges_gt(5 * (i + 1) + 6);
        edges_gt(i + 2 * s);
        break;
    case Theorem::Star:
        edges_gt(2 * (i + 2));
        gt("e_bot", d.e_bot, i + 2 * s);
        gt("e_bot", d.e_bot, fan_term);
        break;
    }
    return rep;
}

using Matrix2 = std::array<std::array<long, 2>, 2>;

inline LatticePolygon apply_unimodular(const LatticePolygon& p, const Matrix2& m, Point t = {}) {
    long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (std::labs(det) != 1) fail(ErrorCode::NotUnimodular, "determinant " + std::to_string(det));
    std::vector<Point> img;
    for (const auto& v : p.vertices())
        img.push_back({m[0][0] * v.x + m[0][1] * v.y + t.x, m[1][0] * v.x + m[1][1] * v.y + t.y});
    return parse_polygon(img);
}

inline LatticePolygon translate(const LatticePolygon& p, Point t) { return apply_unimodular(p, {{{1, 0}, {0, 1}}}, t); }

/// Cuts the corner at the right end of the bottom edge: the bottom edge loses b*m and a new
/// edge of lattice length b is inserted, creating a vertex of index m.
inline LatticePolygon blow_up_corner(const LatticePolygon& p, long b, long m = 1) {
    if (b < 0 || m < 1) fail(ErrorCode::InvalidArgument, "need b >= 0 and m >= 1");
    auto es = edges_of(p);
    std::size_t bottom = es.size();
    for (std::size_t i = 0; i < es.size(); ++i)
        if (es[i].py == 0 && es[i].px > 0) bottom = i;
    if (bottom == es.size()) fail(ErrorCode::CornerMismatch, "no bottom horizontal edge");
    const Edge& right = es[(bottom + 1) % es.size()];
    if (right.py != 1) fail(ErrorCode::CornerMismatch, "edge after the bottom corner is not of direction (n,-1)");
    if (b == 0) return p;
    if (b * m > es[bottom].length) fail(ErrorCode::CutTooLarge, "b*m exceeds the bottom edge length");
    if (b > right.length) fail(ErrorCode::CutTooLarge, "b exceeds the right edge length");

    const Point c = es[bottom].to;
    std::vector<Point> pts;
    for (const auto& v : p.vertices())
        if (!(v == c)) pts.push_back(v);
    Point c1{c.x - b * m, c.y};
    Point c2{c.x + b * right.px, c.y + b};
    for (const Point& q : {c1, c2})
        if (std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(q);
    return parse_polygon(pts);
}

} // namespace refloor
