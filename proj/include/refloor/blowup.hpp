#pragma once

#include "combinat.hpp"
#include "enumerate.hpp"
#include "polygon.hpp"

#include <string>
#include <vector>

namespace refloor {

struct BlowupReport {
    long b = 0;
    long m = 1;
    long i = 0;
    LatticePolygon blown_up;
    BigInt left = 0;                // |C_i(blown-up polygon)|
    BigInt right = 0;               // sum over m | k of p(k/m) |C_{i-k}(original)|
    std::vector<long> original_counts; // |C_j(original)| for j = 0..i
    bool equal = false;
    HypothesisReport original_star;
    HypothesisReport blown_star;

    bool in_hypothesis() const { return original_star.satisfied() && blown_star.satisfied(); }
};

inline long count_up_to(const std::vector<DiagramClass>& classes, long j) {
    long c = 0;
    for (const auto& x : classes)
        if (x.codegree <= j) ++c;
    return c;
}

inline BlowupReport blowup_cardinality_check(const LatticePolygon& p, long b, long m, long i, std::uint64_t budget = default_budget) {
    BlowupReport rep;
    rep.b = b;
    rep.m = m;
    rep.i = i;
    rep.blown_up = blow_up_corner(p, b, m);
    const auto d = h_transverse_data(p);
    const auto dt = h_transverse_data(rep.blown_up);
    rep.original_star = check_hypotheses(p, d, i, 0, Theorem::Star);
    rep.blown_star = check_hypotheses(rep.blown_up, dt, i, 0, Theorem::Star);

    auto base = enumerate_diagrams(d, {i, budget});
    auto cut = enumerate_diagrams(dt, {i, budget});
    for (long j = 0; j <= i; ++j) rep.original_counts.push_back(count_up_to(base, j));
    rep.left = count_up_to(cut, i);
    for (long k = 0; k <= i; k += m) rep.right += partitions(k / m) * rep.original_counts[static_cast<std::size_t>(i - k)];
    rep.equal = rep.left == rep.right;
    return rep;
}

} // namespace refloor
