// Simple undirected graphs on dense vertices 0..n-1, plus the structural
// queries the rest of the suite is built on: degrees, bridges, girth,
// connected components.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace groom {

struct Edge {
    int u = 0;  // always u < v
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("self-loop edge (" + std::to_string(a) + ")");
    }
    auto operator<=>(const Edge&) const = default;
};

// Immutable simple graph. Edges are kept sorted lexicographically, so
// iteration order is deterministic everywhere.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);

    static Graph empty(int n) { return Graph(n, {}); }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;
    int max_degree() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// A set of pairwise vertex-disjoint edges of some parent graph.
struct Matching {
    std::vector<Edge> edges;  // sorted
};

std::vector<int> degree_profile(const Graph& g);

// Edges lying on no cycle; empty result means the graph is bridgeless.
std::vector<Edge> find_bridges(const Graph& g);

// Length of the shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

bool is_connected(const Graph& g);

// Vertex sets of connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace groom
