#pragma once

#include "bigint.hpp"
#include "floor_diagram.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace refloor {

struct CanonicalResult {
    std::string form;          // equal for isomorphic diagrams only
    FloorDiagram relabeled;    // floors in canonical order, root first
    BigInt tree_aut = 1;       // automorphisms of the decorated bounded-edge tree
    BigInt aut = 1;            // tree_aut times the permutations of parallel infinite edges
};

namespace detail {

struct Adjacent {
    int other;
    long weight;
    bool outgoing; // edge leaves this floor
};

class TreeCanonizer {
public:
    explicit TreeCanonizer(const FloorDiagram& D) : D_(D), adj_(D.floors.size()) {
        for (const auto& e : D.edges) {
            adj_[e.tail].push_back({e.head, e.weight, true});
            adj_[e.head].push_back({e.tail, e.weight, false});
        }
    }

    std::vector<int> centers() const {
        const int n = D_.floor_count();
        if (n <= 2) {
            std::vector<int> all(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) all[i] = i;
            return all;
        }
        std::vector<int> deg(static_cast<std::size_t>(n));
        std::vector<int> leaves;
        for (int v = 0; v < n; ++v) {
            deg[v] = static_cast<int>(adj_[v].size());
            if (deg[v] <= 1) leaves.push_back(v);
        }
        int remaining = n;
        while (remaining > 2) {
            remaining -= static_cast<int>(leaves.size());
            std::vector<int> next;
            for (int v : leaves) {
                deg[v] = 0;
                for (const auto& a : adj_[v])
                    if (--deg[a.other] == 1) next.push_back(a.other);
            }
            leaves = std::move(next);
        }
        std::sort(leaves.begin(), leaves.end());
        return leaves;
    }

    /// Encoding of the subtree at v (parent excluded) and its rooted automorphism count.
    std::pair<std::string, BigInt> encode(int v, int parent, std::vector<int>* order = nullptr) const {
        const Floor& f = D_.floors[v];
        std::string head = "(" + std::to_string(f.ell) + "," + std::to_string(f.r) + "," + std::to_string(f.sources) + "," +
                           std::to_string(f.sinks);
        std::vector<std::pair<std::string, int>> kids;
        BigInt aut = 1;
        for (const auto& a : adj_[v]) {
            if (a.other == parent) continue;
            auto [code, sub] = encode(a.other, v);
            aut *= sub;
            kids.emplace_back((a.outgoing ? "^" : "v") + std::to_string(a.weight) + code, a.other);
        }
        std::sort(kids.begin(), kids.end());
        for (std::size_t i = 0; i < kids.size();) {
            std::size_t j = i;
            while (j < kids.size() && kids[j].first == kids[i].first) ++j;
            aut *= factorial(static_cast<unsigned long>(j - i));
            i = j;
        }
        if (order) {
            order->push_back(v);
            for (const auto& k : kids) encode_order(k.second, v, *order);
        }
        std::string out = head;
        out += "[";
        for (const auto& k : kids) out += k.first;
        out += "])";
        return {out, aut};
    }

private:
    void encode_order(int v, int parent, std::vector<int>& order) const { encode(v, parent, &order); }

    const FloorDiagram& D_;
    std::vector<std::vector<Adjacent>> adj_;
};

} // namespace detail

inline CanonicalResult canonicalize(const FloorDiagram& D) {
    detail::TreeCanonizer tc(D);
    auto cs = tc.centers();
    CanonicalResult best;
    bool have = false;
    std::vector<std::string> forms;
    for (int c : cs) {
        auto [form, aut] = tc.encode(c, -1);
        forms.push_back(form);
        if (!have || form < best.form) {
            best.form = form;
            best.tree_aut = aut;
            have = true;
        }
    }
    // Two centers joined by an edge: an extra symmetry would have to reverse that edge.
    if (forms.size() == 2 && forms[0] == forms[1]) best.tree_aut *= 2;

    int root = cs.front();
    for (std::size_t k = 0; k < cs.size(); ++k)
        if (forms[k] == best.form) {
            root = cs[k];
            break;
        }
    std::vector<int> order;
    tc.encode(root, -1, &order);
    std::vector<int> pos(D.floors.size());
    for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k);
    best.relabeled.floors.resize(D.floors.size());
    for (std::size_t v = 0; v < D.floors.size(); ++v) best.relabeled.floors[pos[v]] = D.floors[v];
    for (const auto& e : D.edges) best.relabeled.edges.push_back({pos[e.tail], pos[e.head], e.weight});
    std::sort(best.relabeled.edges.begin(), best.relabeled.edges.end(), [](const BoundedEdge& a, const BoundedEdge& b) {
        return std::tie(a.tail, a.head, a.weight) < std::tie(b.tail, b.head, b.weight);
    });

    best.aut = best.tree_aut;
    for (const auto& f : D.floors)
        best.aut *= factorial(static_cast<unsigned long>(f.sources)) * factorial(static_cast<unsigned long>(f.sinks));
    return best;
}

} // namespace refloor
