// Closed-form ADM totals and the per-node requirement table M(C,Delta):
// M(C,Delta) is the least integer M with A(n,C,Delta) <= M*n for every ring
// size n, where A is the worst-case total over all request graphs of maximum
// degree Delta under grooming factor C. Everything here is exact integer
// arithmetic.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groom/graph.hpp"

namespace groom {
namespace bounds {

struct GroomingInstance {
    int n = 1;       // ring size
    int C = 1;       // grooming factor: max edges per subgraph
    int delta = 0;   // request-degree bound
};

void validate(const GroomingInstance& inst);

// Exact worst-case total when an elementary argument pins it:
//   one subgraph fits everything (2C >= n*delta)  -> n
//   matchings only (delta = 1)                    -> n
//   single-edge subgraphs (C = 1)                 -> delta * n
std::optional<long long> elementary_value(const GroomingInstance& inst);

// ceil(((C+1)/C) * (delta/2)): some vertex of a high-girth delta-regular
// request graph must appear in at least this many tree-shaped parts.
int general_lower_bound_M(int C, int delta);

// ceil(n*delta/(2C)) * n: grouping edges greedily into full parts.
long long greedy_upper_bound_A(const GroomingInstance& inst);

// Exact worst-case total for degree-2 requests, 2 <= C <= n: 2n - (C-1).
long long degree2_exact_A(int n, int C);

// One cell of the published M(C,delta) table.
struct KnownM {
    int lower = 0;
    int upper = 0;                // == lower for exact cells
    bool conjectured = false;     // the (C=4, delta=3) cell: believed 2, proven only within [2,3]
    std::string provenance;      // which argument produced the cell

    bool exact() const { return lower == upper; }
};

KnownM known_M(int C, int delta);

// table[C-1][delta-1] for C = 1..max_C, delta = 1..max_delta.
using MTable = std::vector<std::vector<KnownM>>;

MTable known_table(int max_C, int max_delta);

// Sanity rules for a table of M values: non-increasing in C, non-decreasing
// in delta, and for C > delta a unit increase of C drops M by at most 1.
// Cells are intervals, so only forced inconsistencies are violations.
std::vector<std::string> check_monotonicity(const MTable& table);

}  // namespace bounds
}  // namespace groom
