#pragma once

// Brute-force exact solvers used as independent oracles by the tests and
// the benchmark harness. Size guards are hard errors: an oracle must never
// silently return a non-optimal value.

#include <functional>

#include "mmcc/graph.hpp"

namespace mmcc {

// Enumerates every set partition of {0..n-1} exactly once, in lexicographic
// order of the restricted-growth string. n <= 13 (Bell(13) ~ 2.8e7).
// The callback may return false to stop early.
void enumerate_partitions(int n, const std::function<bool(const Partition&)>& visit);

std::uint64_t count_partitions(int n);

struct ExactPartitionResult {
    double value = 0.0;
    Partition best;
};

// Global minimum of max_disagreement over all clusterings. n <= 12.
// Ties resolved by the lexicographically-first restricted-growth string.
ExactPartitionResult exact_cc(const SignedGraph& g);

// Minimum of max boundary over partitions separating every pair. n <= 12.
ExactPartitionResult exact_multicut(const MulticutInstance& mc);

struct ExactSetResult {
    double value = 0.0;
    std::vector<int> set;
};

// Minimum standalone disagreement over nonempty subsets T with eta(T) >= H.
// n <= 16. Throws if no subset qualifies.
ExactSetResult exact_cluster(const SignedGraph& g, const Measure& eta, double H);

// Minimum boundary over subsets S with vio(S) = 0 and eta(S) in [H, 2H].
// n <= 16. Throws if no subset qualifies.
ExactSetResult exact_mc_cluster(const MulticutInstance& mc, const Measure& eta,
                                double H);

}  // namespace mmcc
