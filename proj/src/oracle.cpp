#include "mmcc/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mmcc {

namespace {

void check_size(int n, int limit, const char* what) {
    if (n > limit)
        throw std::invalid_argument(std::string(what) + ": n = " + std::to_string(n) +
                                    " exceeds the exhaustive-search limit " +
                                    std::to_string(limit));
}

Partition partition_from_rgs(const std::vector<int>& rgs, int part_count) {
    Partition p;
    p.parts.assign(static_cast<std::size_t>(part_count), {});
    for (int v = 0; v < static_cast<int>(rgs.size()); ++v)
        p.parts[static_cast<std::size_t>(rgs[static_cast<std::size_t>(v)])].push_back(v);
    return p;
}

}  // namespace

void enumerate_partitions(int n,
                          const std::function<bool(const Partition&)>& visit) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
    check_size(n, 13, "enumerate_partitions");
    if (n == 0) {
        visit(Partition{});
        return;
    }
    // Restricted-growth strings: a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
    while (true) {
        int parts = prefix_max[static_cast<std::size_t>(n - 1)];
        parts = std::max(parts, a[static_cast<std::size_t>(n - 1)]) + 1;
        if (!visit(partition_from_rgs(a, parts))) return;
        // Advance to the next string in lexicographic order.
        int i = n - 1;
        while (i > 0) {
            if (a[static_cast<std::size_t>(i)] <=
                prefix_max[static_cast<std::size_t>(i - 1)]) {
                ++a[static_cast<std::size_t>(i)];
                break;
            }
            i = i - 1;
        }
        if (i == 0) return;
        prefix_max[static_cast<std::size_t>(i)] =
            std::max(prefix_max[static_cast<std::size_t>(i - 1)],
                     a[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
            a[static_cast<std::size_t>(j)] = 0;
            prefix_max[static_cast<std::size_t>(j)] =
                prefix_max[static_cast<std::size_t>(j - 1)];
        }
    }
}

std::uint64_t count_partitions(int n) {
    std::uint64_t count = 0;
    enumerate_partitions(n, [&](const Partition&) {
        ++count;
        return true;
    });
    return count;
}

ExactPartitionResult exact_cc(const SignedGraph& g) {
    check_size(g.n(), 12, "exact_cc");
    ExactPartitionResult best;
    bool have = false;
    enumerate_partitions(g.n(), [&](const Partition& p) {
        const double cost = max_disagreement(g, p);
        if (!have || cost < best.value - kCostTol) {
            best.value = cost;
            best.best = p;
            have = true;
        }
        return true;
    });
    if (!have) {
        best.best = Partition{};
        best.value = 0.0;
    }
    return best;
}

ExactPartitionResult exact_multicut(const MulticutInstance& mc) {
    check_size(mc.n(), 12, "exact_multicut");
    ExactPartitionResult best;
    bool have = false;
    enumerate_partitions(mc.n(), [&](const Partition& p) {
        if (!separates_all_pairs(mc, p)) return true;
        double worst = 0.0;
        for (const auto& part : p.parts)
            worst = std::max(worst, boundary(mc, part));
        if (!have || worst < best.value - kCostTol) {
            best.value = worst;
            best.best = p;
            have = true;
        }
        return true;
    });
    if (!have)
        throw std::runtime_error("exact_multicut: no partition separates all pairs");
    return best;
}

namespace {

template <class CostFn, class FeasibleFn>
ExactSetResult best_subset(int n, CostFn cost, FeasibleFn feasible,
                           const char* what) {
    check_size(n, 16, what);
    ExactSetResult best;
    bool have = false;
    std::vector<int> set;
    const std::uint32_t limit = 1u << n;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        set.clear();
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) set.push_back(v);
        if (!feasible(set)) continue;
        const double c = cost(set);
        if (!have || c < best.value - kCostTol) {
            best.value = c;
            best.set = set;
            have = true;
        }
    }
    if (!have)
        throw std::runtime_error(std::string(what) + ": no feasible subset");
    return best;
}

}  // namespace

ExactSetResult exact_cluster(const SignedGraph& g, const Measure& eta, double H) {
    return best_subset(
        g.n(), [&](const std::vector<int>& s) { return set_disagreement(g, s); },
        [&](const std::vector<int>& s) { return eta.mass(s) >= H - 1e-12; },
        "exact_cluster");
}

ExactSetResult exact_mc_cluster(const MulticutInstance& mc, const Measure& eta,
                                double H) {
    return best_subset(
        mc.n(), [&](const std::vector<int>& s) { return boundary(mc, s); },
        [&](const std::vector<int>& s) {
            const double m = eta.mass(s);
            return m >= H - 1e-12 && m <= 2.0 * H + 1e-12 && vio(mc, s) == 0;
        },
        "exact_mc_cluster");
}

}  // namespace mmcc
