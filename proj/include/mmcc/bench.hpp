#pragma once

// Benchmark suites and reporting shared by the CLI `bench` subcommand and
// the acceptance tests, so both run exactly the same instances.

#include <optional>
#include <string>
#include <vector>

#include "mmcc/graph.hpp"

namespace mmcc {

struct CcBenchCase {
    std::string kind;  // "random-signed" or "planted"
    int n = 0;
    double p = 0.0;    // negative probability / flip probability
    std::uint64_t seed = 0;
    SignedGraph graph;
};

// 200 complete-graph cases mixing planted and random signs over
// n in {5..8} and p in {0.2, 0.5, 0.8}.
std::vector<CcBenchCase> cc_suite(std::uint64_t base_seed);

struct McBenchCase {
    int rows = 0, cols = 0, npairs = 0;
    std::uint64_t seed = 0;
    MulticutInstance instance;
};

// 100 grid multicut cases, up to 4x4 vertices and 4 terminal pairs.
std::vector<McBenchCase> mc_suite(std::uint64_t base_seed);

struct BenchRow {
    std::string kind;
    int n = 0;
    std::uint64_t seed = 0;
    double heuristic_cost = 0.0;
    std::optional<double> oracle_opt;  // empty when n is beyond the oracle
    std::optional<double> ratio;
    double lp_lower_bound = 0.0;
    double wall_ms = 0.0;  // reported on stderr, never in the CSV
};

BenchRow run_cc_case(const CcBenchCase& c);
BenchRow run_mc_case(const McBenchCase& c);

// Deterministic CSV: kind,n,seed,heuristic_cost,oracle_opt,ratio,
// lp_lower_bound. Missing oracle values stay blank. Wall time is excluded
// so reruns with the same seed are byte-identical.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace mmcc
