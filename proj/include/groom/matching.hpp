// Maximum matching in general graphs (blossom contraction), the 1-factor
// extraction for bridgeless cubic graphs, and the cycle decomposition of what
// remains after removing a perfect matching.
#pragma once

#include <vector>

#include "groom/graph.hpp"

namespace groom {

// mate[v] is v's partner or -1; maximum cardinality over all matchings.
std::vector<int> maximum_matching(const Graph& g);

// Requires a cubic bridgeless graph; the matching covers every vertex.
Matching perfect_matching_cubic(const Graph& g);

// Components of g minus m, each certified 2-regular. Every cycle is listed
// starting at its smallest vertex, stepping first toward the smaller of the
// two neighbors; this is the orientation every consumer relies on.
std::vector<std::vector<int>> remove_matching_cycles(const Graph& g, const Matching& m);

}  // namespace groom
