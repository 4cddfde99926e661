#pragma once

#include "canonical.hpp"
#include "errors.hpp"
#include "floor_diagram.hpp"
#include "polygon.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace refloor {

struct DiagramClass {
    FloorDiagram diagram; // canonically relabeled
    std::string form;
    long degree = 0;
    long codegree = 0;
    BigInt tree_aut = 1;
    BigInt aut = 1;
};

constexpr std::uint64_t default_budget = 100'000'000;

class Budget {
public:
    explicit Budget(std::uint64_t limit = default_budget) : limit_(limit) {}
    void tick() {
        if (++used_ > limit_) fail(ErrorCode::SearchBudgetExceeded, "node budget of " + std::to_string(limit_) + " exhausted");
    }
    std::uint64_t used() const { return used_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

struct EnumerationOptions {
    std::optional<long> max_codegree;
    std::uint64_t budget = default_budget;
};

namespace detail {

/// b(v) = sources - sinks - r + ell: net outflow of v through bounded edges.
inline long balance(const Floor& f) { return f.sources - f.sinks - f.r + f.ell; }

/// Orient and weight an undirected tree by the flow across each edge. Returns false if some
/// edge would carry no flow.
inline bool forced_edges(const std::vector<Floor>& floors, const std::vector<std::pair<int, int>>& tree, std::vector<BoundedEdge>& out) {
    const int n = static_cast<int>(floors.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : tree) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> parent(static_cast<std::size_t>(n), -1), order;
    std::vector<long> sub(static_cast<std::size_t>(n));
    order.reserve(static_cast<std::size_t>(n));
    std::vector<int> stack{0};
    parent[0] = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        order.push_back(x);
        for (int y : adj[x])
            if (parent[y] == -1) {
                parent[y] = x;
                stack.push_back(y);
            }
    }
    if (static_cast<int>(order.size()) != n) return false;
    for (int v = 0; v < n; ++v) sub[v] = balance(floors[v]);
    out.clear();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int c = *it;
        if (c == 0) continue;
        int p = parent[c];
        if (sub[c] == 0) return false;
        if (sub[c] > 0) out.push_back({c, p, sub[c]});
        else out.push_back({p, c, -sub[c]});
        sub[p] += sub[c];
    }
    return true;
}

template <class T>
void for_each_multiset_permutation(std::vector<T> items, const std::function<void(const std::vector<T>&)>& f) {
    std::sort(items.begin(), items.end());
    do {
        f(items);
    } while (std::next_permutation(items.begin(), items.end()));
}

inline void for_each_composition(long total, int parts, const std::function<void(const std::vector<long>&)>& f) {
    std::vector<long> c(static_cast<std::size_t>(parts), 0);
    std::function<void(int, long)> rec = [&](int i, long left) {
        if (i == parts - 1) {
            c[i] = left;
            f(c);
            return;
        }
        for (long x = 0; x <= left; ++x) {
            c[i] = x;
            rec(i + 1, left - x);
        }
    };
    if (parts == 0) {
        if (total == 0) f(c);
        return;
    }
    rec(0, total);
}

/// Every labeled tree on n vertices, via Prüfer sequences.
inline void for_each_labeled_tree(int n, const std::function<void(const std::vector<std::pair<int, int>>&)>& f) {
    std::vector<std::pair<int, int>> edges;
    if (n == 1) {
        f(edges);
        return;
    }
    if (n == 2) {
        edges.emplace_back(0, 1);
        f(edges);
        return;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    while (true) {
        std::vector<int> deg(static_cast<std::size_t>(n), 1);
        for (int x : seq) ++deg[x];
        edges.clear();
        for (int x : seq) {
            int leaf = 0;
            while (deg[leaf] != 1) ++leaf;
            edges.emplace_back(leaf, x);
            --deg[leaf];
            --deg[x];
        }
        int u = -1, v = -1;
        for (int i = 0; i < n; ++i)
            if (deg[i] == 1) (u < 0 ? u : v) = i;
        edges.emplace_back(u, v);
        f(edges);
        int pos = n - 3;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
}

class ClassCollector {
public:
    ClassCollector(const HTransverseData& d, std::optional<long> bound) : d_(d), bound_(bound) {}

    void offer(const FloorDiagram& D) {
        long deg = D.degree();
        long cd = codegree(D, d_.interior);
        if (bound_ && cd > *bound_) return;
        auto canon = canonicalize(D);
        if (found_.count(canon.form)) return;
        DiagramClass c;
        c.diagram = std::move(canon.relabeled);
        c.form = canon.form;
        c.degree = deg;
        c.codegree = cd;
        c.tree_aut = canon.tree_aut;
        c.aut = canon.aut;
        found_.emplace(c.form, std::move(c));
    }

    std::vector<DiagramClass> take() {
        std::vector<DiagramClass> out;
        for (auto& [k, c] : found_) out.push_back(std::move(c));
        std::stable_sort(out.begin(), out.end(), [](const DiagramClass& a, const DiagramClass& b) {
            return a.codegree != b.codegree ? a.codegree < b.codegree : a.form < b.form;
        });
        return out;
    }

private:
    const HTransverseData& d_;
    std::optional<long> bound_;
    std::map<std::string, DiagramClass> found_;
};

} // namespace detail

/// Brute force over decorations, infinite-edge distributions and labeled trees.
inline std::vector<DiagramClass> enumerate_diagrams_exhaustive(const HTransverseData& d, const EnumerationOptions& opt = {}) {
    const int a = static_cast<int>(d.a);
    Budget budget(opt.budget);
    detail::ClassCollector collect(d, opt.max_codegree);
    std::vector<Floor> floors(static_cast<std::size_t>(a));
    std::vector<BoundedEdge> edges;
    detail::for_each_multiset_permutation<long>(d.L, [&](const std::vector<long>& L) {
        detail::for_each_multiset_permutation<long>(d.R, [&](const std::vector<long>& R) {
            detail::for_each_composition(d.e_bot, a, [&](const std::vector<long>& src) {
                detail::for_each_composition(d.e_top, a, [&](const std::vector<long>& snk) {
                    for (int v = 0; v < a; ++v) floors[v] = {L[v], R[v], src[v], snk[v]};
                    detail::for_each_labeled_tree(a, [&](const std::vector<std::pair<int, int>>& tree) {
                        budget.tick();
                        if (!detail::forced_edges(floors, tree, edges)) return;
                        FloorDiagram D{floors, edges};
                        if (D.degree() > d.interior) fail(ErrorCode::NegativeCodegree, "forced diagram exceeds the interior count");
                        collect.offer(D);
                    });
                });
            });
        });
    });
    return collect.take();
}

namespace detail {

/// Builds floors bottom-up along a linear extension, pruning with a lower bound on the codegree.
class LayeredSearch {
public:
    LayeredSearch(const HTransverseData& d, long bound, Budget& budget, ClassCollector& collect)
        : d_(d), a_(static_cast<int>(d.a)), bound_(bound), budget_(budget), collect_(collect) {
        for (long v : d.L) ++ell_left_[v];
        for (long v : d.R) ++r_left_[v];
        src_left_ = d.e_bot;
        snk_left_ = d.e_top;
    }

    void run() { place(0, 0, 0); }

private:
    struct Stub {
        int tail;
        int count;
    };

    // k floors placed, B = crossing weight above floor k, sumB = B_1 + ... + B_k.
    void place(int k, long B, long sumB) {
        budget_.tick();
        if (k == a_) {
            finish();
            return;
        }
        std::vector<long> ells, rs;
        for (const auto& [v, c] : ell_left_)
            if (c > 0) ells.push_back(v);
        for (const auto& [v, c] : r_left_)
            if (c > 0) rs.push_back(v);
        const long src_max = src_left_, snk_max = snk_left_;
        for (long ell : ells)
            for (long r : rs)
                for (long src = 0; src <= src_max; ++src)
                    for (long snk = 0; snk <= snk_max; ++snk) {
                        if (k == a_ - 1 && (src != src_max || snk != snk_max)) continue;
                        Floor f{ell, r, src, snk};
                        long nb = B + balance(f);
                        if (k + 1 < a_ && nb < 1) continue;
                        if (k + 1 == a_ && nb != 0) continue;
                        --ell_left_[ell];
                        --r_left_[r];
                        src_left_ -= src;
                        snk_left_ -= snk;
                        floors_.push_back(f);
                        choose_incoming(k, nb, sumB + (k + 1 < a_ ? nb : 0));
                        floors_.pop_back();
                        src_left_ += src;
                        snk_left_ += snk;
                        ++ell_left_[ell];
                        ++r_left_[r];
                    }
    }

    void choose_incoming(int k, long nb, long sumB) {
        // Components of the floors below v_k that still have open stubs.
        std::vector<int> comps;
        for (int v = 0; v < k; ++v)
            if (open_[v] > 0 && std::find(comps.begin(), comps.end(), comp_[v]) == comps.end()) comps.push_back(comp_[v]);
        std::vector<int> picked;
        std::function<void(std::size_t)> rec = [&](std::size_t ci) {
            if (ci == comps.size()) {
                attach(k, nb, sumB, picked);
                return;
            }
            rec(ci + 1);
            for (int v = 0; v < k; ++v)
                if (comp_[v] == comps[ci] && open_[v] > 0) {
                    picked.push_back(v);
                    rec(ci + 1);
                    picked.pop_back();
                }
        };
        rec(0);
    }

    void attach(int k, long nb, long sumB, const std::vector<int>& tails) {
        std::vector<int> saved_comp = comp_;
        for (int t : tails) {
            --open_[t];
            edges_.push_back({t, k, 0});
        }
        comp_.push_back(k);
        for (int t : tails) {
            int old = saved_comp[t];
            for (int v = 0; v < k; ++v)
                if (comp_[v] == old) comp_[v] = k;
        }
        open_.push_back(0);

        long open_total = 0;
        for (int v = 0; v < k; ++v) open_total += open_[v];
        if (k + 1 == a_) {
            if (open_total == 0 && single_component()) place(k + 1, 0, sumB);
        } else {
            for (long out = 0; open_total + out <= nb; ++out) {
                if (open_total + out < 1) continue;
                open_[k] = static_cast<int>(out);
                if (components_have_stubs(k) && lower_bound(k + 1, nb, sumB) <= bound_) place(k + 1, nb, sumB);
            }
            open_[k] = 0;
        }

        open_.pop_back();
        comp_ = saved_comp;
        for (std::size_t j = 0; j < tails.size(); ++j) edges_.pop_back();
        for (int t : tails) ++open_[t];
    }

    bool single_component() const {
        for (int v = 0; v < static_cast<int>(comp_.size()); ++v)
            if (comp_[v] != comp_[0]) return false;
        return true;
    }

    bool components_have_stubs(int k) const {
        for (int v = 0; v <= k; ++v) {
            bool ok = false;
            for (int u = 0; u <= k && !ok; ++u)
                if (comp_[u] == comp_[v] && open_[u] > 0) ok = true;
            if (!ok) return false;
        }
        return true;
    }

    // placed = number of floors placed; B = crossing weight above the last one.
    long lower_bound(int placed, long B, long sumB) const {
        long spans = 0;
        for (const auto& e : edges_) spans += e.head - e.tail - 1;
        for (int v = 0; v < placed; ++v) spans += static_cast<long>(open_[v]) * (placed - 1 - v);

        const long rest_levels = a_ - 1 - placed;
        long ub = rest_levels > 0 ? rest_levels * B : 0;
        if (rest_levels > 0) {
            ub += rest_levels * src_left_;
            std::vector<long> ells, rs;
            for (const auto& [v, c] : ell_left_)
                for (int j = 0; j < c; ++j) ells.push_back(v);
            for (const auto& [v, c] : r_left_)
                for (int j = 0; j < c; ++j) rs.push_back(v);
            std::sort(ells.rbegin(), ells.rend());
            std::sort(rs.begin(), rs.end());
            for (std::size_t j = 0; j < ells.size(); ++j) {
                long weight = a_ - (placed + 1 + static_cast<long>(j));
                ub += weight * (ells[j] - rs[j]);
            }
        }
        return d_.interior + a_ - 1 - (sumB + ub) + spans;
    }

    void finish() {
        std::vector<std::pair<int, int>> tree;
        for (const auto& e : edges_) tree.emplace_back(e.tail, e.head);
        std::vector<BoundedEdge> weighted;
        if (!forced_edges(floors_, tree, weighted)) return;
        for (const auto& e : weighted)
            if (e.tail > e.head) return;
        FloorDiagram D{floors_, weighted};
        if (D.degree() > d_.interior) fail(ErrorCode::NegativeCodegree, "layered search produced degree above the interior count");
        collect_.offer(D);
    }

    const HTransverseData& d_;
    const int a_;
    const long bound_;
    Budget& budget_;
    ClassCollector& collect_;

    std::map<long, int> ell_left_, r_left_;
    long src_left_ = 0, snk_left_ = 0;
    std::vector<Floor> floors_;
    std::vector<BoundedEdge> edges_; // weights filled in at the end
    std::vector<int> open_;
    std::vector<int> comp_;
};

} // namespace detail

/// Isomorphism classes of floor diagrams, optionally restricted to codegree <= max_codegree,
/// sorted by codegree and canonical form.
inline std::vector<DiagramClass> enumerate_diagrams(const HTransverseData& d, const EnumerationOptions& opt = {}) {
    Budget budget(opt.budget);
    detail::ClassCollector collect(d, opt.max_codegree);
    long bound = opt.max_codegree ? std::min(*opt.max_codegree, d.interior) : d.interior;
    if (bound < 0) return {};
    detail::LayeredSearch search(d, bound, budget, collect);
    search.run();
    return collect.take();
}

} // namespace refloor
