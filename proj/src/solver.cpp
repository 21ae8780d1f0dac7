#include "groom/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <unordered_set>

#include "groom/bounds.hpp"
#include "groom/canonical.hpp"
#include "groom/enumerate.hpp"
#include "groom/parallel.hpp"

namespace groom {
namespace solver {

namespace {

constexpr int kMaxSolverVertices = 64;
constexpr long long kNoBudget = 1LL << 40;

long long ceil_div_ll(long long a, long long b) { return a <= 0 ? 0 : (a + b - 1) / b; }

// Edge-partition search over edges in fixed index order. Each edge joins an
// open part or starts a fresh one; identical-looking parts (same remaining
// capacity, same overlap with future endpoints) are branched only once.
class PartitionSearch {
public:
    PartitionSearch(const Graph& g, int capacity, const std::vector<long long>* budgets,
                    const SolverLimits& limits)
        : g_(g), C_(capacity), limits_(limits) {
        if (capacity < 1) throw std::invalid_argument("capacity must be at least 1");
        if (g.vertex_count() > kMaxSolverVertices)
            throw std::invalid_argument("partition search supports at most 64 vertices");
        if (g.edge_count() > limits.max_feasibility_edges)
            throw std::invalid_argument("instance too large: " + std::to_string(g.edge_count()) +
                                        " edges exceeds the configured limit of " +
                                        std::to_string(limits.max_feasibility_edges) +
                                        " (raise --max-edges to override)");
        const size_t n = static_cast<size_t>(g.vertex_count());
        budget_.assign(n, kNoBudget);
        if (budgets) budget_ = *budgets;
        remaining_.assign(n, 0);
        for (const Edge& e : g.edges()) {
            ++remaining_[static_cast<size_t>(e.u)];
            ++remaining_[static_cast<size_t>(e.v)];
        }
        suffix_mask_.assign(g.edges().size() + 1, 0);
        for (int i = g.edge_count() - 1; i >= 0; --i) {
            const Edge& e = g.edges()[static_cast<size_t>(i)];
            suffix_mask_[static_cast<size_t>(i)] = suffix_mask_[static_cast<size_t>(i + 1)] |
                                                   (1ull << e.u) | (1ull << e.v);
        }
        if (limits.timeout_sec > 0)
            deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(limits.timeout_sec));
    }

    // Feasibility: stop at the first complete partition.
    SolveResult run_feasibility() {
        minimizing_ = false;
        best_cost_ = kNoBudget;
        SolveResult res;
        bool found = dfs(0);
        res.feasible = found && !timed_out_;
        res.nodes_explored = nodes_;
        res.timed_out = timed_out_;
        if (res.feasible) {
            res.witness = snapshot();
            res.optimum = cost_;
        }
        return res;
    }

    SolveResult run_min_cost() {
        minimizing_ = true;
        seed_incumbent();
        dfs(0);
        SolveResult res;
        res.feasible = !timed_out_;
        res.optimum = best_cost_;
        res.witness = best_partition_;
        res.nodes_explored = nodes_;
        res.timed_out = timed_out_;
        return res;
    }

private:
    using Clock = std::chrono::steady_clock;

    struct Part {
        uint64_t vmask = 0;
        int cap_left = 0;
        std::vector<Edge> edges;
    };

    Partition snapshot() const {
        Partition p{g_, C_, {}};
        for (const Part& part : parts_)
            p.parts.push_back(EdgeSubset{part.edges});
        canonicalize(p);
        return p;
    }

    void seed_incumbent() {
        // Greedy: first open part sharing a vertex, else a fresh part.
        std::vector<Part> parts;
        long long cost = 0;
        for (const Edge& e : g_.edges()) {
            bool placed = false;
            for (Part& p : parts) {
                if (p.cap_left == 0) continue;
                bool hasu = (p.vmask >> e.u) & 1, hasv = (p.vmask >> e.v) & 1;
                if (!hasu && !hasv) continue;
                p.vmask |= (1ull << e.u) | (1ull << e.v);
                p.cap_left--;
                p.edges.push_back(e);
                cost += (hasu ? 0 : 1) + (hasv ? 0 : 1);
                placed = true;
                break;
            }
            if (!placed) {
                parts.push_back(Part{(1ull << e.u) | (1ull << e.v), C_ - 1, {e}});
                cost += 2;
            }
        }
        best_cost_ = cost;
        Partition p{g_, C_, {}};
        for (const Part& part : parts) p.parts.push_back(EdgeSubset{part.edges});
        canonicalize(p);
        best_partition_ = std::move(p);
    }

    bool out_of_time() {
        if (limits_.timeout_sec <= 0) return false;
        if ((nodes_ & 1023) == 0 && Clock::now() > deadline_) timed_out_ = true;
        return timed_out_;
    }

    // Per-vertex slack: capacity still available in open parts containing it.
    void fill_slack(std::vector<long long>& slack) const {
        std::fill(slack.begin(), slack.end(), 0);
        for (const Part& p : parts_) {
            if (p.cap_left == 0) continue;
            uint64_t m = p.vmask;
            while (m) {
                int w = __builtin_ctzll(m);
                m &= m - 1;
                slack[static_cast<size_t>(w)] += p.cap_left;
            }
        }
    }

    bool viable(int next_edge) {
        fill_slack(slack_);
        uint64_t future = suffix_mask_[static_cast<size_t>(next_edge)];
        long long lower_extra = 0;
        long long total_slack = 0;
        uint64_t m = future;
        while (m) {
            int w = __builtin_ctzll(m);
            m &= m - 1;
            long long need = remaining_[static_cast<size_t>(w)] - slack_[static_cast<size_t>(w)];
            long long new_parts = ceil_div_ll(need, C_);
            if (new_parts > budget_[static_cast<size_t>(w)]) return false;
            lower_extra += new_parts;
        }
        if (minimizing_) {
            for (const Part& p : parts_) total_slack += p.cap_left;
            long long rem_edges = g_.edge_count() - next_edge;
            long long fresh_parts = ceil_div_ll(rem_edges - total_slack, C_);
            long long bound = std::max(lower_extra, 2 * fresh_parts);
            if (cost_ + bound >= best_cost_) return false;
        }
        return true;
    }

    bool dfs(int i) {
        ++nodes_;
        if (out_of_time()) return false;
        if (i == g_.edge_count()) {
            if (minimizing_) {
                if (cost_ < best_cost_) {
                    best_cost_ = cost_;
                    best_partition_ = snapshot();
                }
                return false;
            }
            return true;
        }
        const Edge e = g_.edges()[static_cast<size_t>(i)];
        const uint64_t ebits = (1ull << e.u) | (1ull << e.v);
        const uint64_t relevant = suffix_mask_[static_cast<size_t>(i)];

        seen_.clear();
        for (size_t pi = 0; pi < parts_.size(); ++pi) {
            Part& p = parts_[pi];
            if (p.cap_left == 0) continue;
            bool newu = !((p.vmask >> e.u) & 1), newv = !((p.vmask >> e.v) & 1);
            if (newu && budget_[static_cast<size_t>(e.u)] == 0) continue;
            if (newv && budget_[static_cast<size_t>(e.v)] == 0) continue;
            uint64_t key_mask = p.vmask & relevant;
            bool dup = false;
            for (const auto& [km, kc] : seen_)
                if (km == key_mask && kc == p.cap_left) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            seen_.emplace_back(key_mask, p.cap_left);

            uint64_t saved_mask = p.vmask;
            p.vmask |= ebits;
            p.cap_left--;
            p.edges.push_back(e);
            budget_[static_cast<size_t>(e.u)] -= newu;
            budget_[static_cast<size_t>(e.v)] -= newv;
            cost_ += (newu ? 1 : 0) + (newv ? 1 : 0);
            remaining_[static_cast<size_t>(e.u)]--;
            remaining_[static_cast<size_t>(e.v)]--;

            bool done = viable(i + 1) && dfs(i + 1);

            remaining_[static_cast<size_t>(e.u)]++;
            remaining_[static_cast<size_t>(e.v)]++;
            cost_ -= (newu ? 1 : 0) + (newv ? 1 : 0);
            budget_[static_cast<size_t>(e.u)] += newu;
            budget_[static_cast<size_t>(e.v)] += newv;
            p.edges.pop_back();
            p.cap_left++;
            p.vmask = saved_mask;
            if (done) return true;
            if (timed_out_) return false;
        }

        if (budget_[static_cast<size_t>(e.u)] >= 1 && budget_[static_cast<size_t>(e.v)] >= 1) {
            parts_.push_back(Part{ebits, C_ - 1, {e}});
            budget_[static_cast<size_t>(e.u)]--;
            budget_[static_cast<size_t>(e.v)]--;
            cost_ += 2;
            remaining_[static_cast<size_t>(e.u)]--;
            remaining_[static_cast<size_t>(e.v)]--;

            bool done = viable(i + 1) && dfs(i + 1);

            remaining_[static_cast<size_t>(e.u)]++;
            remaining_[static_cast<size_t>(e.v)]++;
            cost_ -= 2;
            budget_[static_cast<size_t>(e.u)]++;
            budget_[static_cast<size_t>(e.v)]++;
            parts_.pop_back();
            if (done) return true;
        }
        return false;
    }

    const Graph& g_;
    int C_;
    SolverLimits limits_;
    bool minimizing_ = false;
    std::vector<Part> parts_;
    std::vector<long long> budget_, remaining_, slack_;
    std::vector<uint64_t> suffix_mask_;
    std::vector<std::pair<uint64_t, int>> seen_;
    long long cost_ = 0;
    long long best_cost_ = kNoBudget;
    std::optional<Partition> best_partition_;
    long long nodes_ = 0;
    bool timed_out_ = false;
    Clock::time_point deadline_{};
};

}  // namespace

SolveResult min_cost_partition(const Graph& g, int capacity, const SolverLimits& limits) {
    PartitionSearch search(g, capacity, nullptr, limits);
    return search.run_min_cost();
}

SolveResult feasible_under_caps(const Graph& g, int capacity, const AdmAssignment& caps,
                                const SolverLimits& limits) {
    if (static_cast<int>(caps.counts.size()) != g.vertex_count())
        throw std::invalid_argument("caps must cover every vertex");
    std::vector<long long> budgets(caps.counts.begin(), caps.counts.end());
    PartitionSearch search(g, capacity, &budgets, limits);
    return search.run_feasibility();
}

WorstCaseSearch::WorstCaseSearch(int n, int C, int delta, const SolverLimits& limits,
                                 ClassPredicate predicate)
    : n_(n), C_(C), delta_(std::min(delta, n - 1)), limits_(limits) {
    if (n < 1) throw std::invalid_argument("ring size must be at least 1");
    if (C < 1) throw std::invalid_argument("grooming factor must be at least 1");
    if (delta < 0) throw std::invalid_argument("degree bound must be nonnegative");
    if (n > limits.max_worst_case_n)
        throw std::invalid_argument("instance too large: n=" + std::to_string(n) +
                                    " exceeds the exhaustive limit of " +
                                    std::to_string(limits.max_worst_case_n) +
                                    " (raise --max-n to override)");
    for (const Graph& g : enumerate_graphs_max_degree(n, delta_, false)) {
        if (g.edge_count() == 0) continue;  // edgeless graphs never refute anything
        if (predicate && !predicate(g)) continue;
        classes_.push_back(g);
    }
    // Dense request graphs refute weak assignments fastest.
    std::stable_sort(classes_.begin(), classes_.end(),
                     [](const Graph& a, const Graph& b) { return a.edge_count() > b.edge_count(); });
    placements_.resize(classes_.size());
    placements_ready_.assign(classes_.size(), false);
}

Graph WorstCaseSearch::place_greedy(const Graph& cls, const AdmAssignment& a) const {
    // Highest-degree request vertices onto the lowest-cap ring nodes. The
    // assignment is nondecreasing, so node k is the k-th weakest.
    std::vector<int> order(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) order[static_cast<size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (cls.degree(x) != cls.degree(y)) return cls.degree(x) > cls.degree(y);
        return x < y;
    });
    (void)a;
    std::vector<int> node_of(static_cast<size_t>(n_));
    for (int k = 0; k < n_; ++k) node_of[static_cast<size_t>(order[static_cast<size_t>(k)])] = k;
    std::vector<Edge> edges;
    edges.reserve(cls.edges().size());
    for (const Edge& e : cls.edges())
        edges.emplace_back(node_of[static_cast<size_t>(e.u)], node_of[static_cast<size_t>(e.v)]);
    return Graph(n_, std::move(edges));
}

const std::vector<Graph>& WorstCaseSearch::placements(size_t class_index) {
    if (!placements_ready_[class_index]) {
        const Graph& cls = classes_[class_index];
        std::unordered_set<CanonForm, CanonFormHash> seen;
        std::vector<Graph> out;
        std::vector<int> perm(static_cast<size_t>(n_));
        for (int v = 0; v < n_; ++v) perm[static_cast<size_t>(v)] = v;
        do {
            CanonForm key;
            std::vector<Edge> edges;
            edges.reserve(cls.edges().size());
            for (const Edge& e : cls.edges()) {
                Edge mapped(perm[static_cast<size_t>(e.u)], perm[static_cast<size_t>(e.v)]);
                edges.push_back(mapped);
                key.set_bit(mapped.u * n_ + mapped.v);
            }
            if (seen.insert(key).second) out.emplace_back(n_, std::move(edges));
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::sort(out.begin(), out.end(),
                  [](const Graph& a, const Graph& b) { return a.edges() < b.edges(); });
        placements_[class_index] = std::move(out);
        placements_ready_[class_index] = true;
    }
    return placements_[class_index];
}

std::optional<Graph> WorstCaseSearch::refuter(const AdmAssignment& a) {
    const int k = static_cast<int>(classes_.size());
    // Greedy adversary pass: any refuting placement refutes the assignment.
    std::vector<char> refuted(static_cast<size_t>(k), 0);
    std::atomic<long long> nodes{0};
    parallel_for(0, k, limits_.workers, [&](int i) {
        Graph placed = place_greedy(classes_[static_cast<size_t>(i)], a);
        SolveResult r = feasible_under_caps(placed, C_, a, limits_);
        if (r.timed_out) throw std::runtime_error("timeout inside worst-case search");
        nodes.fetch_add(r.nodes_explored);
        refuted[static_cast<size_t>(i)] = r.feasible ? 0 : 1;
    });
    nodes_ += nodes.load();
    for (int i = 0; i < k; ++i)
        if (refuted[static_cast<size_t>(i)]) return place_greedy(classes_[static_cast<size_t>(i)], a);

    // Survivors get the full placement enumeration; acceptance needs it all.
    for (int i = 0; i < k; ++i) {
        for (const Graph& placed : placements(static_cast<size_t>(i))) {
            SolveResult r = feasible_under_caps(placed, C_, a, limits_);
            if (r.timed_out) throw std::runtime_error("timeout inside worst-case search");
            nodes_ += r.nodes_explored;
            if (!r.feasible) return placed;
        }
    }
    return std::nullopt;
}

namespace {

// Nondecreasing vectors of length n with entries in [0, cap] summing to T.
template <class Fn>
bool for_each_assignment(int n, int T, int cap, Fn&& fn) {
    std::vector<int> a(static_cast<size_t>(n));
    auto rec = [&](auto&& self, int idx, int minv, int rem) -> bool {
        if (idx == n) return rem == 0 ? fn(a) : false;
        int slots = n - idx;
        for (int x = minv; x <= std::min(cap, rem); ++x) {
            if (rem - x > cap * (slots - 1)) continue;       // cannot fill the rest
            if (static_cast<long long>(x) * (slots - 1) > rem - x) break;  // nondecreasing tail too big
            a[static_cast<size_t>(idx)] = x;
            if (self(self, idx + 1, x, rem - x)) return true;
        }
        return false;
    };
    return rec(rec, 0, 0, T);
}

}  // namespace

WorstCaseResult WorstCaseSearch::solve() {
    const int cap = std::max(1, delta_);
    const long long t_max = static_cast<long long>(n_) * cap;
    for (long long T = n_; T <= t_max; ++T) {
        std::vector<int> winner;
        bool found = for_each_assignment(n_, static_cast<int>(T), cap, [&](const std::vector<int>& a) {
            if (refuter(AdmAssignment{a}).has_value()) return false;
            winner = a;
            return true;
        });
        if (found) {
            WorstCaseResult res;
            res.optimum = T;
            res.assignment = winner;
            res.nodes_explored = nodes_;
            res.classes_checked = static_cast<long long>(classes_.size());
            return res;
        }
    }
    throw std::logic_error("worst-case search exhausted its range without a feasible assignment");
}

WorstCaseResult worst_case_A(int n, int C, int delta, const SolverLimits& limits) {
    WorstCaseSearch search(n, C, delta, limits);
    return search.solve();
}

WorstCaseResult worst_case_A_for_class(int n, int C, int delta, const ClassPredicate& predicate,
                                       const SolverLimits& limits) {
    WorstCaseSearch search(n, C, delta, limits, predicate);
    return search.solve();
}

}  // namespace solver
}  // namespace groom
