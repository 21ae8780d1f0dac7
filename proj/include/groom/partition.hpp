// Edge partitions of a request graph into capacity-bounded parts, the
// per-node ADM assignment they are checked against, and the verifier that
// every solver and decomposer output must pass.
#pragma once

#include <string>
#include <vector>

#include "groom/graph.hpp"

namespace groom {

// Per-node ADM counts on the ring.
struct AdmAssignment {
    std::vector<int> counts;

    static AdmAssignment uniform(int n, int value) {
        return AdmAssignment{std::vector<int>(static_cast<size_t>(n), value)};
    }
    int total() const {
        int t = 0;
        for (int c : counts) t += c;
        return t;
    }
};

// A subset of a parent graph's edges. Its vertex set is always the set of
// endpoints; isolated vertices are never members.
struct EdgeSubset {
    std::vector<Edge> edges;  // sorted

    std::vector<int> vertices() const;
};

struct Partition {
    Graph parent;
    int capacity = 0;
    std::vector<EdgeSubset> parts;
};

// Sorts edges within parts and parts by their smallest edge.
void canonicalize(Partition& p);

// appearances[v] = number of parts whose vertex set contains v.
std::vector<int> appearances(const Partition& p);

// Sum over parts of the part's vertex count.
int partition_cost(const Partition& p);

int max_appearances(const Partition& p);

struct VerifyResult {
    bool ok = true;
    std::string violation;  // first violated condition, with a witness

    explicit operator bool() const { return ok; }
};

// Checks: every part has 1..capacity edges of the parent, the parts are
// pairwise disjoint and cover E(parent), and appearances(v) <= a.counts[v].
VerifyResult verify_partition(const Partition& p, const AdmAssignment& a);

}  // namespace groom
