#include "groom/graph.hpp"

#include <algorithm>

namespace groom {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        ") out of range for n=" + std::to_string(n_));
        if (i > 0 && edges_[i - 1] == e)
            throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ")");
    }
    adj_.assign(static_cast<size_t>(n_), {});
    for (const Edge& e : edges_) {
        adj_[static_cast<size_t>(e.u)].push_back(e.v);
        adj_[static_cast<size_t>(e.v)].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = neighbors(u);
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<int> degree_profile(const Graph& g) {
    std::vector<int> out(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) out[static_cast<size_t>(v)] = g.degree(v);
    return out;
}

namespace {

struct BridgeDfs {
    const Graph& g;
    std::vector<int> tin, low;
    std::vector<Edge> bridges;
    int timer = 0;

    explicit BridgeDfs(const Graph& gg)
        : g(gg), tin(static_cast<size_t>(gg.vertex_count()), -1), low(static_cast<size_t>(gg.vertex_count()), -1) {}

    void run(int root) {
        // Iterative lowlink traversal; parent tracked per frame so parallel
        // recursion depth never becomes an issue on long paths.
        struct Frame {
            int v;
            int parent;
            size_t next = 0;
        };
        std::vector<Frame> stack;
        stack.push_back({root, -1});
        tin[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                int to = nbrs[f.next++];
                if (to == f.parent) {
                    f.parent = -1;  // skip the tree edge once; a second copy cannot exist
                    continue;
                }
                if (tin[static_cast<size_t>(to)] != -1) {
                    low[static_cast<size_t>(f.v)] =
                        std::min(low[static_cast<size_t>(f.v)], tin[static_cast<size_t>(to)]);
                } else {
                    tin[static_cast<size_t>(to)] = low[static_cast<size_t>(to)] = timer++;
                    stack.push_back({to, f.v});
                }
            } else {
                int v = f.v;
                int parent = stack.back().parent;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    (void)parent;
                    low[static_cast<size_t>(p)] = std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(v)]);
                    if (low[static_cast<size_t>(v)] > tin[static_cast<size_t>(p)]) bridges.emplace_back(p, v);
                }
            }
        }
    }
};

}  // namespace

std::vector<Edge> find_bridges(const Graph& g) {
    BridgeDfs dfs(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dfs.tin[static_cast<size_t>(v)] == -1) dfs.run(v);
    std::sort(dfs.bridges.begin(), dfs.bridges.end());
    return dfs.bridges;
}

std::optional<int> girth(const Graph& g) {
    // BFS from every root; the first non-tree edge seen closes a cycle of
    // length dist[u]+dist[v]+1. The minimum over all roots is exact.
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(static_cast<size_t>(n)), parent(static_cast<size_t>(n));
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        queue.assign(1, root);
        dist[static_cast<size_t>(root)] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int w : g.neighbors(u)) {
                if (dist[static_cast<size_t>(w)] == -1) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                    parent[static_cast<size_t>(w)] = u;
                    queue.push_back(w);
                } else if (w != parent[static_cast<size_t>(u)]) {
                    int len = dist[static_cast<size_t>(u)] + dist[static_cast<size_t>(w)] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < n; ++v) {
        if (comp[static_cast<size_t>(v)] != -1) continue;
        int id = static_cast<int>(out.size());
        std::vector<int> members{v};
        comp[static_cast<size_t>(v)] = id;
        for (size_t i = 0; i < members.size(); ++i)
            for (int w : g.neighbors(members[i]))
                if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = id;
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

}  // namespace groom
