#include "groom/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

namespace groom {

namespace {

constexpr int kMaxEnumVertices = 16;

// Sum over vertices of (target degree - current degree). Only meaningful in
// exact-degree mode.
int deficiency(const BitGraph& g, int target) {
    int d = 0;
    for (int v = 0; v < g.n; ++v) d += target - g.degree(v);
    return d;
}

// A graph on k vertices can only grow into an exact-degree graph on n
// vertices if the missing degree fits on the remaining vertices, with the
// right parity. Both conditions hold for every induced subgraph of every
// valid target, so pruning by them loses nothing.
bool extendable_to_regular(const BitGraph& g, int target_degree, int target_n) {
    int future = target_n - g.n;
    int d = deficiency(g, target_degree);
    if (d > target_degree * future) return false;
    if ((target_degree * future - d) % 2 != 0) return false;
    return true;
}

struct LevelExpander {
    const EnumOptions& opt;
    std::unordered_set<CanonForm, CanonFormHash> next;

    void add_child(const BitGraph& child) {
        if (opt.exact_degree >= 0 && !extendable_to_regular(child, opt.exact_degree, opt.n)) return;
        next.insert(canonical_form(child));
    }

    // Attach a fresh vertex to every admissible subset of the parent.
    void expand(const BitGraph& parent) {
        std::vector<int> eligible;
        for (int v = 0; v < parent.n; ++v)
            if (parent.degree(v) < opt.max_degree) eligible.push_back(v);

        BitGraph child = parent;
        child.n = parent.n + 1;
        int max_pick = std::min<int>(opt.max_degree, static_cast<int>(eligible.size()));
        std::vector<int> pick;
        auto rec = [&](auto&& self, size_t from) -> void {
            if (static_cast<int>(pick.size()) <= max_pick && (!opt.connected_only || !pick.empty())) add_child(child);
            if (static_cast<int>(pick.size()) == max_pick) return;
            for (size_t i = from; i < eligible.size(); ++i) {
                int v = eligible[i];
                pick.push_back(v);
                child.add_edge(v, parent.n);
                self(self, i + 1);
                child.adj[static_cast<size_t>(v)] &= ~(1u << parent.n);
                child.adj[static_cast<size_t>(parent.n)] &= ~(1u << v);
                pick.pop_back();
            }
        };
        rec(rec, 0);
    }
};

}  // namespace

void enumerate_graphs(const EnumOptions& opt, const std::function<bool(const Graph&)>& visit) {
    if (opt.n < 1 || opt.n > kMaxEnumVertices)
        throw std::invalid_argument("enumeration supports 1 <= n <= 16");
    if (opt.max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
    if (opt.exact_degree > opt.max_degree)
        throw std::invalid_argument("exact_degree cannot exceed max_degree");

    // Level k holds one canonical form per class on k vertices. Forms sort
    // deterministically, so the emission order is reproducible.
    std::vector<CanonForm> level;
    {
        BitGraph seed;
        seed.n = 1;
        if (opt.exact_degree >= 0 && !extendable_to_regular(seed, opt.exact_degree, opt.n)) {
            level.clear();
        } else {
            level.push_back(canonical_form(seed));
        }
    }
    for (int k = 1; k < opt.n; ++k) {
        LevelExpander ex{opt, {}};
        for (const CanonForm& f : level) ex.expand(form_to_bitgraph(f, k));
        level.assign(ex.next.begin(), ex.next.end());
        std::sort(level.begin(), level.end());
    }

    for (const CanonForm& f : level) {
        BitGraph b = form_to_bitgraph(f, opt.n);
        if (opt.exact_degree >= 0) {
            bool regular = true;
            for (int v = 0; v < b.n && regular; ++v) regular = (b.degree(v) == opt.exact_degree);
            if (!regular) continue;
        }
        Graph g = to_graph(b);
        if (opt.connected_only && !is_connected(g)) continue;
        if (!visit(g)) return;
    }
}

std::vector<Graph> enumerate_graphs_max_degree(int n, int max_degree, bool connected_only) {
    std::vector<Graph> out;
    EnumOptions opt{n, max_degree, connected_only, -1};
    enumerate_graphs(opt, [&](const Graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

long long count_graph_classes(const EnumOptions& opt) {
    long long count = 0;
    enumerate_graphs(opt, [&](const Graph&) {
        ++count;
        return true;
    });
    return count;
}

}  // namespace groom
