#include "groom/partition.hpp"

#include <algorithm>
#include <map>

namespace groom {

std::vector<int> EdgeSubset::vertices() const {
    std::vector<int> vs;
    vs.reserve(edges.size() * 2);
    for (const Edge& e : edges) {
        vs.push_back(e.u);
        vs.push_back(e.v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

void canonicalize(Partition& p) {
    for (EdgeSubset& part : p.parts) std::sort(part.edges.begin(), part.edges.end());
    std::sort(p.parts.begin(), p.parts.end(),
              [](const EdgeSubset& a, const EdgeSubset& b) { return a.edges < b.edges; });
}

std::vector<int> appearances(const Partition& p) {
    std::vector<int> out(static_cast<size_t>(p.parent.vertex_count()), 0);
    for (const EdgeSubset& part : p.parts)
        for (int v : part.vertices()) ++out[static_cast<size_t>(v)];
    return out;
}

int partition_cost(const Partition& p) {
    int cost = 0;
    for (const EdgeSubset& part : p.parts) cost += static_cast<int>(part.vertices().size());
    return cost;
}

int max_appearances(const Partition& p) {
    int best = 0;
    for (int a : appearances(p)) best = std::max(best, a);
    return best;
}

namespace {

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

VerifyResult verify_partition(const Partition& p, const AdmAssignment& a) {
    if (static_cast<int>(a.counts.size()) != p.parent.vertex_count())
        return {false, "assignment has " + std::to_string(a.counts.size()) + " entries for n=" +
                           std::to_string(p.parent.vertex_count())};
    if (p.capacity < 1) return {false, "capacity must be at least 1"};

    std::map<Edge, int> seen;
    for (size_t i = 0; i < p.parts.size(); ++i) {
        const EdgeSubset& part = p.parts[i];
        if (part.edges.empty()) return {false, "part " + std::to_string(i) + " is empty"};
        if (static_cast<int>(part.edges.size()) > p.capacity)
            return {false, "part " + std::to_string(i) + " has " + std::to_string(part.edges.size()) +
                               " edges, capacity " + std::to_string(p.capacity)};
        for (const Edge& e : part.edges) {
            if (!p.parent.has_edge(e.u, e.v))
                return {false, "part " + std::to_string(i) + " uses " + edge_str(e) + " missing from the graph"};
            auto [it, fresh] = seen.emplace(e, static_cast<int>(i));
            if (!fresh)
                return {false, "edge " + edge_str(e) + " appears in parts " + std::to_string(it->second) +
                                   " and " + std::to_string(i)};
        }
    }
    if (static_cast<int>(seen.size()) != p.parent.edge_count()) {
        for (const Edge& e : p.parent.edges())
            if (!seen.count(e)) return {false, "edge " + edge_str(e) + " is not covered"};
    }
    auto app = appearances(p);
    for (int v = 0; v < p.parent.vertex_count(); ++v)
        if (app[static_cast<size_t>(v)] > a.counts[static_cast<size_t>(v)])
            return {false, "vertex " + std::to_string(v) + " appears in " + std::to_string(app[static_cast<size_t>(v)]) +
                               " parts, allowed " + std::to_string(a.counts[static_cast<size_t>(v)])};
    return {true, ""};
}

}  // namespace groom
