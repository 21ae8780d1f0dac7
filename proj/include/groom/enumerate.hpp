// Isomorph-free generation of simple graphs with bounded (or exact) degrees.
// Graphs are grown one vertex at a time; each level is deduplicated by
// canonical form, so every isomorphism class on the target vertex count is
// produced exactly once, in a deterministic order.
#pragma once

#include <functional>
#include <vector>

#include "groom/canonical.hpp"
#include "groom/graph.hpp"

namespace groom {

struct EnumOptions {
    int n = 1;                // target vertex count, 1..16
    int max_degree = 0;       // degree bound for every vertex
    bool connected_only = false;
    int exact_degree = -1;    // when >= 0, every vertex of an emitted graph has exactly this degree
};

// Calls visit for each class representative; stop early by returning false.
void enumerate_graphs(const EnumOptions& opt, const std::function<bool(const Graph&)>& visit);

std::vector<Graph> enumerate_graphs_max_degree(int n, int max_degree, bool connected_only);

// Number of classes the options would emit (runs the full enumeration).
long long count_graph_classes(const EnumOptions& opt);

}  // namespace groom
