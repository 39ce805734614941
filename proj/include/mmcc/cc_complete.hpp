#pragma once

// Complete-graph min-max correlation clustering: per-guess LP relaxation,
// prefix selection of cheap guesses, 2/7-ball rounding, and the full
// covering + aggregation solve with its 14-approximation bookkeeping.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "mmcc/cover.hpp"
#include "mmcc/graph.hpp"
#include "mmcc/lp.hpp"
#include "mmcc/metric.hpp"

namespace mmcc {

struct GuessSolution {
    int guess = 0;
    double objective = 0.0;
    std::vector<double> x;  // per vertex
    std::vector<double> d;  // per unordered pair, pair_index order
    std::vector<double> m;  // per negative edge, graph edge order
};

// LP over x(v), d(u,v) and one auxiliary m per negative edge linearizing the
// max term of the objective. Triangle rows on d are generated lazily by
// solve_guess; everything else is in the returned problem. Rejects
// non-complete graphs.
LpProblem build_cc_lp(const SignedGraph& g, const Measure& eta, double H, int guess);

// Solves the per-guess relaxation. Throws LpInfeasibleError when the measure
// cannot reach H even with every vertex inside (invalid H).
GuessSolution solve_guess(const SignedGraph& g, const Measure& eta, double H,
                          int guess, RowPool* pool = nullptr, long* lp_solves = nullptr);

struct LpInfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GammaSelection {
    std::vector<int> sorted_guesses;       // vertex ids by (objective, id)
    std::vector<double> sorted_objectives;
    int lambda = 0;                        // smallest prefix with eta-mass >= H
    std::vector<int> gamma;                // the first lambda guesses
};

GammaSelection select_gamma(const std::vector<GuessSolution>& solutions,
                            const Measure& eta, double H);

// 2/7-ball rounding around the pinned guess: returns {u} when the ball's
// total fractional distance reaches |T|/7 (the empty ball lands here too),
// otherwise the whole ball including u.
std::vector<int> round_ball(const GuessSolution& sol);

struct CcFamilyDiag {
    GammaSelection selection;
    std::vector<double> objectives;   // per guess id
    double max_seven_gap = -std::numeric_limits<double>::infinity();
    long seven_violations = 0;        // ball cost > 7 o + 1e-6
};

// One covering round: per-guess LPs, prefix selection, rounded balls for the
// selected guesses. The 7-bound diagnostics cover every solved guess.
SetFamily find_cluster_family(const SignedGraph& g, const Measure& eta, double H,
                              CcFamilyDiag* diag = nullptr, RowPool* pool = nullptr,
                              long* lp_solves = nullptr);

struct CcKReport {
    int k = 0;
    bool ran = false;
    std::string skip_reason;
    int rounds = 0;
    double rounds_bound = 0.0;
    double min_coverage = 0.0;
    std::size_t family_size = 0;
    double B = 0.0;          // max standalone disagreement over family members
    double max_cost = 0.0;   // max disagreement of this k's final clustering
    int step2_iterations = 0;
};

struct CcReport {
    std::vector<CcKReport> per_k;
    int best_k = 0;
    double best_cost = 0.0;
    long lp_solves = 0;
    // Per-LP 7-bound across every guess solved anywhere in the run.
    double max_seven_gap = -std::numeric_limits<double>::infinity();
    long seven_violations = 0;
    // Optional lower-bound audit against the exhaustive oracle.
    bool oracle_checked = false;
    double max_guess_gap = -std::numeric_limits<double>::infinity();
    long guess_violations = 0;
    // Aggregation potential audit (strict decrease per Step-2 iteration).
    bool potential_ok = true;
};

struct CcOptions {
    std::uint64_t seed = 1;
    int k_override = 0;          // 0 = sweep k over 1..n
    bool early_exit_on_zero = true;
    // When set (n <= 12), checks o_i <= exact_cluster value per covering
    // round for every selected guess. Slow; meant for audits and tests.
    bool check_guess_lower_bound = false;
};

struct CcResult {
    Partition clustering;
    CcReport report;
};

CcResult solve_cc_complete(const SignedGraph& g, const CcOptions& opts = {});

// LP lower bound on the min-max disagreement: the lambda-th smallest guess
// objective at uniform measure with H = 1/n. Any optimal clustering has a
// cluster of uniform mass at least 1/n, so this never exceeds the optimum.
double cc_lp_lower_bound(const SignedGraph& g);

}  // namespace mmcc
