#include "groom/canonical.hpp"

#include <algorithm>
#include <vector>

namespace groom {

BitGraph to_bitgraph(const Graph& g) {
    if (g.vertex_count() > kMaxCanonVertices)
        throw std::invalid_argument("graph too large for canonical labeling (n > 22)");
    BitGraph b;
    b.n = g.vertex_count();
    for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
    return b;
}

Graph to_graph(const BitGraph& g) {
    std::vector<Edge> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(g.n, std::move(edges));
}

namespace {

// Bit index of pair (i,j), i < j, in the packed upper triangle of an n-vertex
// adjacency matrix.
inline int pair_index(int n, int i, int j) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

struct SmallUf {
    std::array<int, kMaxCanonVertices> parent{};

    explicit SmallUf(int n) {
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

struct Searcher {
    const BitGraph& g;
    int n;

    bool have_best = false;
    CanonForm best_form;
    std::array<uint8_t, kMaxCanonVertices> best_position{};
    std::vector<int> best_path;

    struct Node {
        SmallUf uf;
        std::vector<int> branched;
        explicit Node(int n) : uf(n) {}
    };
    std::vector<Node> nodes;    // one per individualization on the current path
    std::vector<int> path;      // individualized vertices, outermost first

    explicit Searcher(const BitGraph& gg) : g(gg), n(gg.n) {}

    // Refine colors to the coarsest stable partition; colors are ranks and the
    // rank order is what makes the final labeling canonical.
    void refine(std::vector<int>& colors) const {
        std::vector<std::pair<std::vector<int>, int>> sigs(static_cast<size_t>(n));
        int classes = 0;
        {
            std::vector<int> sorted(colors);
            std::sort(sorted.begin(), sorted.end());
            classes = static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
        }
        while (classes < n) {
            for (int v = 0; v < n; ++v) {
                auto& sig = sigs[static_cast<size_t>(v)];
                sig.first.clear();
                sig.first.push_back(colors[static_cast<size_t>(v)]);
                uint32_t nb = g.adj[static_cast<size_t>(v)];
                while (nb) {
                    int u = __builtin_ctz(nb);
                    nb &= nb - 1;
                    sig.first.push_back(colors[static_cast<size_t>(u)]);
                }
                std::sort(sig.first.begin() + 1, sig.first.end());
                sig.second = v;
            }
            std::vector<int> order(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                return sigs[static_cast<size_t>(a)].first < sigs[static_cast<size_t>(b)].first;
            });
            int next = 0;
            std::vector<int> fresh(static_cast<size_t>(n));
            for (size_t i = 0; i < order.size(); ++i) {
                if (i > 0 && sigs[static_cast<size_t>(order[i])].first != sigs[static_cast<size_t>(order[i - 1])].first)
                    ++next;
                fresh[static_cast<size_t>(order[i])] = next;
            }
            int new_classes = next + 1;
            bool stable = (new_classes == classes);
            colors.swap(fresh);
            classes = new_classes;
            if (stable) break;
        }
    }

    CanonForm build_form(const std::vector<int>& colors) const {
        CanonForm f;
        std::array<int, kMaxCanonVertices> at{};
        for (int v = 0; v < n; ++v) at[static_cast<size_t>(colors[static_cast<size_t>(v)])] = v;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (g.has_edge(at[static_cast<size_t>(i)], at[static_cast<size_t>(j)]))
                    f.set_bit(pair_index(n, i, j));
        return f;
    }

    // Returns -1 to keep searching, otherwise a depth to backjump to.
    int handle_leaf(const std::vector<int>& colors) {
        CanonForm f = build_form(colors);
        if (!have_best || best_form < f) {
            have_best = true;
            best_form = f;
            for (int v = 0; v < n; ++v) best_position[static_cast<size_t>(v)] = static_cast<uint8_t>(colors[static_cast<size_t>(v)]);
            best_path = path;
            return -1;
        }
        if (f < best_form) return -1;
        // Equal forms: position->vertex of best composed with vertex->position
        // of this leaf is an automorphism fixing the common path prefix.
        std::array<int, kMaxCanonVertices> best_at{};
        for (int v = 0; v < n; ++v) best_at[best_position[static_cast<size_t>(v)]] = v;
        std::array<int, kMaxCanonVertices> gamma{};
        for (int v = 0; v < n; ++v) gamma[static_cast<size_t>(v)] = best_at[static_cast<size_t>(colors[static_cast<size_t>(v)])];
        size_t lca = 0;
        while (lca < path.size() && lca < best_path.size() && path[lca] == best_path[lca]) ++lca;
        for (size_t d = 0; d <= lca && d < nodes.size(); ++d)
            for (int v = 0; v < n; ++v) nodes[d].uf.unite(v, gamma[static_cast<size_t>(v)]);
        return static_cast<int>(lca);
    }

    int dfs(std::vector<int> colors) {
        refine(colors);
        int cell_color = -1;
        {
            std::array<int, kMaxCanonVertices> count{};
            for (int v = 0; v < n; ++v) ++count[static_cast<size_t>(colors[static_cast<size_t>(v)])];
            for (int c = 0; c < n; ++c)
                if (count[static_cast<size_t>(c)] > 1) {
                    cell_color = c;
                    break;
                }
        }
        if (cell_color == -1) return handle_leaf(colors);

        int depth = static_cast<int>(nodes.size());
        nodes.emplace_back(n);
        for (int v = 0; v < n; ++v) {
            if (colors[static_cast<size_t>(v)] != cell_color) continue;
            Node& node = nodes[static_cast<size_t>(depth)];
            bool skip = false;
            for (int u : node.branched)
                if (node.uf.find(u) == node.uf.find(v)) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            node.branched.push_back(v);

            std::vector<int> child(colors);
            for (int& c : child) c *= 2;
            child[static_cast<size_t>(v)] -= 1;
            path.push_back(v);
            int jump = dfs(std::move(child));
            path.pop_back();
            if (jump != -1 && jump < depth) {
                nodes.pop_back();
                return jump;
            }
        }
        nodes.pop_back();
        return -1;
    }

    CanonResult run() {
        path.clear();
        nodes.clear();
        dfs(std::vector<int>(static_cast<size_t>(n), 0));
        CanonResult out;
        out.form = best_form;
        out.position = best_position;
        return out;
    }
};

}  // namespace

CanonResult canonical_labeling(const BitGraph& g) {
    if (g.n < 1 || g.n > kMaxCanonVertices) throw std::invalid_argument("canonical labeling needs 1 <= n <= 22");
    Searcher s(g);
    return s.run();
}

CanonForm canonical_form(const BitGraph& g) { return canonical_labeling(g).form; }

CanonForm canonical_form(const Graph& g) { return canonical_form(to_bitgraph(g)); }

BitGraph form_to_bitgraph(const CanonForm& f, int n) {
    BitGraph g;
    g.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (f.get_bit(pair_index(n, i, j))) g.add_edge(i, j);
    return g;
}

}  // namespace groom
