// Exhaustive solvers: minimum partition cost of one request graph,
// feasibility under per-vertex ADM caps, and the worst-case total A(n,C,delta)
// over every request graph of bounded degree (optionally restricted to a
// class). Everything is deterministic; limits are configuration.
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "groom/graph.hpp"
#include "groom/partition.hpp"

namespace groom {
namespace solver {

struct SolverLimits {
    int max_worst_case_n = 8;       // exhaustive limit for worst-case searches
    int max_feasibility_edges = 24; // edge-partition search limit
    double timeout_sec = 0.0;       // per-search wall clock; 0 disables
    int workers = 1;
};

struct SolveResult {
    bool feasible = false;
    long long optimum = 0;               // minimum cost, when this is a cost problem
    std::optional<Partition> witness;    // achieves the optimum / proves feasibility
    long long nodes_explored = 0;
    bool timed_out = false;
};

// Minimum over edge partitions into parts of <= capacity edges of the summed
// part vertex counts. Branch and bound over edges in index order.
SolveResult min_cost_partition(const Graph& g, int capacity, const SolverLimits& limits = {});

// Decides whether a partition exists with every part <= capacity edges and
// appearances(v) <= caps.counts[v]; returns a witness when feasible.
SolveResult feasible_under_caps(const Graph& g, int capacity, const AdmAssignment& caps,
                                const SolverLimits& limits = {});

using ClassPredicate = std::function<bool(const Graph&)>;

struct WorstCaseResult {
    long long optimum = 0;
    std::vector<int> assignment;     // nondecreasing witness assignment
    long long nodes_explored = 0;
    long long classes_checked = 0;
};

// Shared machinery: the adversary list for ring size n and degree bound
// delta, with lazily built labeled placements per unlabeled class.
class WorstCaseSearch {
public:
    WorstCaseSearch(int n, int C, int delta, const SolverLimits& limits = {},
                    ClassPredicate predicate = {});

    // A request graph refuting the assignment, or nullopt when every request
    // graph of the class is feasible. Deterministic: greedy adversary
    // placements are probed first, surviving assignments get the full
    // placement enumeration.
    std::optional<Graph> refuter(const AdmAssignment& a);

    WorstCaseResult solve();

    const std::vector<Graph>& adversary_classes() const { return classes_; }
    long long nodes_explored() const { return nodes_; }

private:
    Graph place_greedy(const Graph& cls, const AdmAssignment& a) const;
    const std::vector<Graph>& placements(size_t class_index);

    int n_, C_, delta_;
    SolverLimits limits_;
    std::vector<Graph> classes_;
    std::vector<std::vector<Graph>> placements_;
    std::vector<bool> placements_ready_;
    long long nodes_ = 0;
};

WorstCaseResult worst_case_A(int n, int C, int delta, const SolverLimits& limits = {});
WorstCaseResult worst_case_A_for_class(int n, int C, int delta, const ClassPredicate& predicate,
                                       const SolverLimits& limits = {});

}  // namespace solver
}  // namespace groom
