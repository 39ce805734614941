#pragma once

// Self-contained bounded-variable linear program solver, sized for the
// desk-scale metric LPs built by the clustering and multicut modules.
// Dense two-phase simplex; variable bounds are handled natively instead of
// as explicit rows. Deterministic: a fixed pivot rule (largest reduced cost,
// falling back to Bland's rule under degeneracy) with index tie-breaks, so
// identical problems yield identical solutions bit-for-bit.

#include <functional>
#include <vector>

namespace mmcc {

enum class Relation { le, ge, eq };

struct LpConstraint {
    std::vector<std::pair<int, double>> coeffs;  // sparse (variable, coefficient)
    Relation rel = Relation::le;
    double rhs = 0.0;
};

struct LpProblem {
    int var_count = 0;
    std::vector<double> lower;  // default 0
    std::vector<double> upper;  // default 1
    std::vector<std::pair<int, double>> objective;  // sparse, sense = minimize
    std::vector<LpConstraint> constraints;

    int add_var(double lo = 0.0, double hi = 1.0);
    void add_le(std::vector<std::pair<int, double>> coeffs, double rhs);
    void add_ge(std::vector<std::pair<int, double>> coeffs, double rhs);
    void add_eq(std::vector<std::pair<int, double>> coeffs, double rhs);
    void set_bounds(int var, double lo, double hi);
};

enum class LpStatus { optimal, infeasible, iteration_limit };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    std::vector<double> values;
    double objective = 0.0;
};

inline constexpr double kLpFeasTol = 1e-7;
inline constexpr double kLpPivotTol = 1e-9;
inline constexpr double kLpObjTol = 1e-6;

LpSolution solve(const LpProblem& p);

// A violated constraint found by a separation callback, with the amount of
// violation at the queried point. Callbacks must return constraints in a
// deterministic order (their position is the tie-break key).
struct SeparatedConstraint {
    LpConstraint constraint;
    double violation = 0.0;
};

using Separator =
    std::function<std::vector<SeparatedConstraint>(const std::vector<double>&)>;

// Solves p, then repeatedly adds the most-violated constraints reported by
// `separate` (at most 500 per round, violation descending, earlier-reported
// first on ties) and re-solves, until no violation above 1e-6 remains.
// Gives up with status iteration_limit after 200 rounds.
LpSolution solve_lazy(const LpProblem& p, const Separator& separate);

// Largest violation of any constraint of p at the given point (bound
// violations included). Used by tests to audit returned solutions.
double max_violation(const LpProblem& p, const std::vector<double>& values);

}  // namespace mmcc
