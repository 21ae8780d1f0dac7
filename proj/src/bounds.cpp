#include "groom/bounds.hpp"

#include <stdexcept>

namespace groom {
namespace bounds {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

void validate(const GroomingInstance& inst) {
    if (inst.n < 1) throw std::invalid_argument("ring size must be at least 1");
    if (inst.C < 1) throw std::invalid_argument("grooming factor must be at least 1");
    if (inst.delta < 0) throw std::invalid_argument("degree bound must be nonnegative");
}

std::optional<long long> elementary_value(const GroomingInstance& inst) {
    validate(inst);
    const long long n = inst.n, C = inst.C, d = inst.delta;
    if (2 * C >= n * d) return n;  // all possible requests fit into one subgraph
    if (d == 1) return n;
    if (C == 1) return d * n;
    return std::nullopt;
}

int general_lower_bound_M(int C, int delta) {
    if (C < 1 || delta < 1) throw std::invalid_argument("general_lower_bound_M needs C >= 1, delta >= 1");
    return static_cast<int>(ceil_div(static_cast<long long>(C + 1) * delta, 2LL * C));
}

long long greedy_upper_bound_A(const GroomingInstance& inst) {
    validate(inst);
    return ceil_div(static_cast<long long>(inst.n) * inst.delta, 2LL * inst.C) * inst.n;
}

long long degree2_exact_A(int n, int C) {
    if (n < 1) throw std::invalid_argument("ring size must be at least 1");
    if (C < 2) throw std::invalid_argument("degree2_exact_A needs C >= 2");
    if (C > n) throw std::invalid_argument("degree2_exact_A needs C <= n");
    return 2LL * n - (C - 1);
}

KnownM known_M(int C, int delta) {
    if (C < 1 || delta < 1) throw std::invalid_argument("known_M needs C >= 1, delta >= 1");
    if (delta == 1) return {1, 1, false, "matching-floor"};
    if (C == 1) return {delta, delta, false, "single-edge-parts"};
    if (delta == 2) return {2, 2, false, "cycle-cover"};
    if (C == 2) return {delta, delta, false, "two-edge-parts"};
    if (delta == 3) {
        if (C == 3) return {3, 3, false, "cubic-witness"};
        if (C == 4) return {2, 3, true, "conjectured"};
        return {2, 2, false, "linear-forest"};
    }
    return {general_lower_bound_M(C, delta), delta, false, "tree-packing-bound"};
}

MTable known_table(int max_C, int max_delta) {
    MTable table(static_cast<size_t>(max_C));
    for (int C = 1; C <= max_C; ++C) {
        auto& row = table[static_cast<size_t>(C - 1)];
        row.reserve(static_cast<size_t>(max_delta));
        for (int d = 1; d <= max_delta; ++d) row.push_back(known_M(C, d));
    }
    return table;
}

std::vector<std::string> check_monotonicity(const MTable& table) {
    std::vector<std::string> violations;
    const int max_C = static_cast<int>(table.size());
    for (int C = 1; C <= max_C; ++C) {
        const int max_delta = static_cast<int>(table[static_cast<size_t>(C - 1)].size());
        auto cell = [&](int CC, int d) { return table[static_cast<size_t>(CC - 1)][static_cast<size_t>(d - 1)]; };
        for (int d = 1; d <= max_delta; ++d) {
            if (C < max_C && d <= static_cast<int>(table[static_cast<size_t>(C)].size())) {
                KnownM a = cell(C, d), b = cell(C + 1, d);
                if (b.lower > a.upper)
                    violations.push_back("M(" + std::to_string(C + 1) + "," + std::to_string(d) +
                                         ") cannot exceed M(" + std::to_string(C) + "," + std::to_string(d) + ")");
                if (C > d && a.lower - b.upper > 1)
                    violations.push_back("M drops by more than 1 from C=" + std::to_string(C) + " to C=" +
                                         std::to_string(C + 1) + " at delta=" + std::to_string(d));
            }
            if (d < max_delta) {
                KnownM a = cell(C, d), b = cell(C, d + 1);
                if (a.lower > b.upper)
                    violations.push_back("M(" + std::to_string(C) + "," + std::to_string(d + 1) +
                                         ") cannot be below M(" + std::to_string(C) + "," + std::to_string(d) + ")");
            }
        }
    }
    return violations;
}

}  // namespace bounds
}  // namespace groom
