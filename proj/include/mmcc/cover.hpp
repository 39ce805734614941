#pragma once

// Objective-agnostic covering and aggregation shared by the correlation
// clustering and multicut pipelines. Covering repeatedly asks a finder for
// cheap sets under a renormalized measure and halves the weight of covered
// vertices; aggregation turns the resulting multiset into a partition via a
// seeded random order plus uncrossing repairs.

#include <cstdint>
#include <functional>

#include "mmcc/graph.hpp"

namespace mmcc {

using SetCostFn = std::function<double(const std::vector<int>&)>;
using FinderFn = std::function<SetFamily(const Measure&, double /*H*/)>;

struct CoveringConfig {
    int k = 1;                 // guessed part count; H = tau = 1/k
    FinderFn finder;
    int max_rounds = 0;        // 0 = derive from k and n (>= ceil(17 k log2 n))
    // Set when the finder is a pure function of (eta, H). Lets the loop
    // collapse runs of identical rounds once a round covers every vertex
    // (halving all weights leaves the normalized measure unchanged).
    bool stationary_finder = false;
};

struct CoveringStats {
    int rounds = 0;
    double rounds_bound = 0.0;   // 1 + 16 k ln n
    double min_coverage = 1.0;   // min over v of coverage_fraction(family, v)
};

// Runs the halving loop until the total weight drops to 1/n. Throws if the
// round cap is exceeded, which means the finder broke its mass contract.
SetFamily covering(int n, const CoveringConfig& cfg, CoveringStats* stats = nullptr);

// Fraction of family members containing v.
double coverage_fraction(const SetFamily& family, int v);

struct AggregateStats {
    int step2_iterations = 0;
    // Sum of part costs before Step 2 and after each Step-2 iteration.
    std::vector<double> potential;
};

// Random-order greedy peeling (Step 1) followed by uncrossing repairs of any
// part costing more than 2B (Step 2). Requires cost_fn(S) <= B per member
// and every vertex covered. Every output part is a subset of the family
// member it originated from.
Partition aggregate(int n, const SetFamily& family, double B, const SetCostFn& cost_fn,
                    std::uint64_t seed, AggregateStats* stats = nullptr);

// Same with an explicit member order (positions into family.sets); used by
// tests that sweep all orders.
Partition aggregate_ordered(int n, const SetFamily& family,
                            const std::vector<int>& order, double B,
                            const SetCostFn& cost_fn, AggregateStats* stats = nullptr);

}  // namespace mmcc
