#include "groom/matching.hpp"

#include <algorithm>
#include <queue>

namespace groom {

namespace {

// Classic O(V^3) augmenting-path search with blossom contraction tracked
// through base[].
struct Blossom {
    const Graph& g;
    int n;
    std::vector<int> match, parent, base;
    std::vector<bool> used, blossom;

    explicit Blossom(const Graph& gg)
        : g(gg),
          n(gg.vertex_count()),
          match(static_cast<size_t>(n), -1),
          parent(static_cast<size_t>(n), -1),
          base(static_cast<size_t>(n), 0),
          used(static_cast<size_t>(n), false),
          blossom(static_cast<size_t>(n), false) {}

    int lca(int a, int b) {
        std::vector<bool> seen(static_cast<size_t>(n), false);
        for (;;) {
            a = base[static_cast<size_t>(a)];
            seen[static_cast<size_t>(a)] = true;
            if (match[static_cast<size_t>(a)] == -1) break;
            a = parent[static_cast<size_t>(match[static_cast<size_t>(a)])];
        }
        for (;;) {
            b = base[static_cast<size_t>(b)];
            if (seen[static_cast<size_t>(b)]) return b;
            b = parent[static_cast<size_t>(match[static_cast<size_t>(b)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[static_cast<size_t>(v)] != b) {
            blossom[static_cast<size_t>(base[static_cast<size_t>(v)])] = true;
            blossom[static_cast<size_t>(base[static_cast<size_t>(match[static_cast<size_t>(v)])])] = true;
            parent[static_cast<size_t>(v)] = child;
            child = match[static_cast<size_t>(v)];
            v = parent[static_cast<size_t>(match[static_cast<size_t>(v)])];
        }
    }

    bool augment_from(int root) {
        std::fill(used.begin(), used.end(), false);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i) base[static_cast<size_t>(i)] = i;

        used[static_cast<size_t>(root)] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g.neighbors(v)) {
                if (base[static_cast<size_t>(v)] == base[static_cast<size_t>(to)] ||
                    match[static_cast<size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match[static_cast<size_t>(to)] != -1 && parent[static_cast<size_t>(match[static_cast<size_t>(to)])] != -1)) {
                    int curbase = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), false);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[static_cast<size_t>(base[static_cast<size_t>(i)])]) {
                            base[static_cast<size_t>(i)] = curbase;
                            if (!used[static_cast<size_t>(i)]) {
                                used[static_cast<size_t>(i)] = true;
                                q.push(i);
                            }
                        }
                } else if (parent[static_cast<size_t>(to)] == -1) {
                    parent[static_cast<size_t>(to)] = v;
                    if (match[static_cast<size_t>(to)] == -1) {
                        // Alternate along the tree, flipping matched edges.
                        int u = to;
                        while (u != -1) {
                            int pv = parent[static_cast<size_t>(u)];
                            int ppv = match[static_cast<size_t>(pv)];
                            match[static_cast<size_t>(u)] = pv;
                            match[static_cast<size_t>(pv)] = u;
                            u = ppv;
                        }
                        return true;
                    }
                    used[static_cast<size_t>(match[static_cast<size_t>(to)])] = true;
                    q.push(match[static_cast<size_t>(to)]);
                }
            }
        }
        return false;
    }

    std::vector<int> solve() {
        // Greedy warm start saves most augmentation rounds.
        for (int v = 0; v < n; ++v)
            if (match[static_cast<size_t>(v)] == -1)
                for (int to : g.neighbors(v))
                    if (match[static_cast<size_t>(to)] == -1) {
                        match[static_cast<size_t>(v)] = to;
                        match[static_cast<size_t>(to)] = v;
                        break;
                    }
        for (int v = 0; v < n; ++v)
            if (match[static_cast<size_t>(v)] == -1) augment_from(v);
        return match;
    }
};

}  // namespace

std::vector<int> maximum_matching(const Graph& g) { return Blossom(g).solve(); }

Matching perfect_matching_cubic(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) throw std::invalid_argument("perfect_matching_cubic: graph is not cubic");
    if (!find_bridges(g).empty())
        throw std::invalid_argument("perfect_matching_cubic: graph has a bridge");

    auto mate = maximum_matching(g);
    Matching m;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (mate[static_cast<size_t>(v)] == -1)
            throw std::runtime_error("perfect_matching_cubic: matching is not perfect");
        if (v < mate[static_cast<size_t>(v)]) m.edges.emplace_back(v, mate[static_cast<size_t>(v)]);
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

std::vector<std::vector<int>> remove_matching_cycles(const Graph& g, const Matching& m) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    {
        std::vector<bool> covered(static_cast<size_t>(n), false);
        for (const Edge& e : m.edges) {
            if (!g.has_edge(e.u, e.v))
                throw std::invalid_argument("remove_matching_cycles: matching edge not in graph");
            if (covered[static_cast<size_t>(e.u)] || covered[static_cast<size_t>(e.v)])
                throw std::invalid_argument("remove_matching_cycles: edges are not disjoint");
            covered[static_cast<size_t>(e.u)] = covered[static_cast<size_t>(e.v)] = true;
        }
        for (const Edge& e : g.edges()) {
            bool in_m = std::binary_search(m.edges.begin(), m.edges.end(), e);
            if (!in_m) {
                adj[static_cast<size_t>(e.u)].push_back(e.v);
                adj[static_cast<size_t>(e.v)].push_back(e.u);
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        std::sort(adj[static_cast<size_t>(v)].begin(), adj[static_cast<size_t>(v)].end());
        if (adj[static_cast<size_t>(v)].size() != 2)
            throw std::invalid_argument("remove_matching_cycles: leftover graph is not 2-regular at vertex " +
                                        std::to_string(v));
    }

    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<std::vector<int>> cycles;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<int> cycle{start};
        seen[static_cast<size_t>(start)] = true;
        int prev = start;
        int cur = adj[static_cast<size_t>(start)][0];  // smaller neighbor first
        while (cur != start) {
            seen[static_cast<size_t>(cur)] = true;
            cycle.push_back(cur);
            const auto& nb = adj[static_cast<size_t>(cur)];
            int next = (nb[0] == prev) ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

}  // namespace groom
