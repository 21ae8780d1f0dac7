// Canonical labeling for small graphs (n <= 22) by iterated degree/neighbor
// refinement with backtracking individualization. Discovered automorphisms
// prune the search (orbit skipping + backjump to the divergence node), which
// keeps highly symmetric inputs such as empty graphs and matchings cheap.
#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "groom/graph.hpp"

namespace groom {

inline constexpr int kMaxCanonVertices = 22;

// Adjacency rows as bitmasks; the working representation for enumeration.
struct BitGraph {
    int n = 0;
    std::array<uint32_t, kMaxCanonVertices> adj{};

    void add_edge(int u, int v) {
        adj[static_cast<size_t>(u)] |= 1u << v;
        adj[static_cast<size_t>(v)] |= 1u << u;
    }
    bool has_edge(int u, int v) const { return (adj[static_cast<size_t>(u)] >> v) & 1u; }
    int degree(int v) const { return __builtin_popcount(adj[static_cast<size_t>(v)]); }
    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n; ++v) total += degree(v);
        return total / 2;
    }
};

BitGraph to_bitgraph(const Graph& g);
Graph to_graph(const BitGraph& g);

// Upper-triangle adjacency bits of the relabeled graph, packed MSB-first so
// lexicographic word comparison equals bitstring comparison.
struct CanonForm {
    std::array<uint64_t, 4> words{};

    auto operator<=>(const CanonForm&) const = default;
    void set_bit(int idx) { words[static_cast<size_t>(idx >> 6)] |= 1ull << (63 - (idx & 63)); }
    bool get_bit(int idx) const { return (words[static_cast<size_t>(idx >> 6)] >> (63 - (idx & 63))) & 1ull; }
};

struct CanonFormHash {
    size_t operator()(const CanonForm& f) const {
        uint64_t h = 0x9e3779b97f4a7c15ull;
        for (uint64_t w : f.words) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<size_t>(h);
    }
};

struct CanonResult {
    CanonForm form;
    std::array<uint8_t, kMaxCanonVertices> position{};  // vertex -> canonical index
};

CanonResult canonical_labeling(const BitGraph& g);
CanonForm canonical_form(const BitGraph& g);
CanonForm canonical_form(const Graph& g);

// Rebuild the canonical representative graph encoded by a form.
BitGraph form_to_bitgraph(const CanonForm& f, int n);

}  // namespace groom
