#include "mmcc/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mmcc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

int LpProblem::add_var(double lo, double hi) {
    lower.push_back(lo);
    upper.push_back(hi);
    return var_count++;
}

void LpProblem::add_le(std::vector<std::pair<int, double>> coeffs, double rhs) {
    constraints.push_back({std::move(coeffs), Relation::le, rhs});
}

void LpProblem::add_ge(std::vector<std::pair<int, double>> coeffs, double rhs) {
    constraints.push_back({std::move(coeffs), Relation::ge, rhs});
}

void LpProblem::add_eq(std::vector<std::pair<int, double>> coeffs, double rhs) {
    constraints.push_back({std::move(coeffs), Relation::eq, rhs});
}

void LpProblem::set_bounds(int var, double lo, double hi) {
    lower.at(static_cast<std::size_t>(var)) = lo;
    upper.at(static_cast<std::size_t>(var)) = hi;
}

namespace {

// Dense tableau simplex over columns = structural vars + slacks +
// artificials. Nonbasic columns rest at one of their bounds.
class Simplex {
public:
    explicit Simplex(const LpProblem& p) : prob_(p) { build(); }

    LpSolution run() {
        const long limit =
            50L * (static_cast<long>(prob_.var_count) +
                   static_cast<long>(prob_.constraints.size()) + 4);
        // Phase 1: minimize the sum of artificial variables.
        if (!artificials_.empty()) {
            set_phase_costs(true);
            if (!iterate(limit)) return finish(LpStatus::iteration_limit);
            if (phase_objective() > kLpFeasTol)
                return finish(LpStatus::infeasible);
            for (int col : artificials_) upper_[static_cast<std::size_t>(col)] = 0.0;
        }
        // Phase 2: minimize the real objective.
        set_phase_costs(false);
        if (!iterate(limit)) return finish(LpStatus::iteration_limit);
        return finish(LpStatus::optimal);
    }

private:
    enum State : char { kAtLower = 0, kAtUpper = 1, kBasic = 2 };

    const LpProblem& prob_;
    int m_ = 0;       // rows
    int ncols_ = 0;   // structural + slack + artificial columns
    std::vector<double> tab_;        // m_ x ncols_, row-major
    std::vector<double> lower_, upper_;
    std::vector<double> cost_;       // phase-2 costs per column
    std::vector<double> dcost_;      // reduced costs for the current phase
    std::vector<double> basic_val_;  // value of the basic variable per row
    std::vector<int> basis_;         // column currently basic in each row
    std::vector<State> state_;
    std::vector<int> artificials_;
    bool phase1_ = false;
    long pivots_ = 0;

    double* row(int i) { return tab_.data() + static_cast<std::size_t>(i) * ncols_; }

    double nonbasic_value(int j) const {
        return state_[static_cast<std::size_t>(j)] == kAtUpper
                   ? upper_[static_cast<std::size_t>(j)]
                   : lower_[static_cast<std::size_t>(j)];
    }

    void build() {
        const int nv = prob_.var_count;
        m_ = static_cast<int>(prob_.constraints.size());
        for (int j = 0; j < nv; ++j) {
            const double lo = prob_.lower[static_cast<std::size_t>(j)];
            const double hi = prob_.upper[static_cast<std::size_t>(j)];
            if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi + 1e-12)
                throw std::invalid_argument("lp: variable bounds must be finite with lower <= upper");
        }

        // Normalized rows: ge becomes le by negation; each le row gets a
        // slack in [0, inf). Equality rows have no slack.
        struct Row {
            std::vector<std::pair<int, double>> coeffs;
            double rhs = 0.0;
            bool is_eq = false;
        };
        std::vector<Row> rows;
        rows.reserve(prob_.constraints.size());
        for (const auto& c : prob_.constraints) {
            Row r;
            r.coeffs = c.coeffs;
            r.rhs = c.rhs;
            r.is_eq = (c.rel == Relation::eq);
            if (c.rel == Relation::ge) {
                for (auto& [j, a] : r.coeffs) a = -a;
                r.rhs = -r.rhs;
            }
            for (const auto& [j, a] : r.coeffs) {
                (void)a;
                if (j < 0 || j >= nv)
                    throw std::invalid_argument("lp: constraint index out of range");
            }
            rows.push_back(std::move(r));
        }

        int slack_count = 0;
        for (const auto& r : rows)
            if (!r.is_eq) ++slack_count;

        // Columns: structural | slacks | artificials (allocated on demand).
        lower_.assign(static_cast<std::size_t>(nv), 0.0);
        upper_.assign(static_cast<std::size_t>(nv), 0.0);
        for (int j = 0; j < nv; ++j) {
            lower_[static_cast<std::size_t>(j)] = prob_.lower[static_cast<std::size_t>(j)];
            upper_[static_cast<std::size_t>(j)] = prob_.upper[static_cast<std::size_t>(j)];
        }
        state_.assign(static_cast<std::size_t>(nv), kAtLower);

        // Residuals at the all-at-lower-bound point decide which rows can
        // start with their slack basic and which need an artificial.
        std::vector<double> residual(static_cast<std::size_t>(m_), 0.0);
        for (int i = 0; i < m_; ++i) {
            double act = 0.0;
            for (const auto& [j, a] : rows[static_cast<std::size_t>(i)].coeffs)
                act += a * lower_[static_cast<std::size_t>(j)];
            residual[static_cast<std::size_t>(i)] =
                rows[static_cast<std::size_t>(i)].rhs - act;
        }

        int artif_count = 0;
        for (int i = 0; i < m_; ++i) {
            const bool needs =
                rows[static_cast<std::size_t>(i)].is_eq ||
                residual[static_cast<std::size_t>(i)] < 0.0;
            if (needs) ++artif_count;
        }

        ncols_ = nv + slack_count + artif_count;
        tab_.assign(static_cast<std::size_t>(m_) * ncols_, 0.0);
        lower_.resize(static_cast<std::size_t>(ncols_), 0.0);
        upper_.resize(static_cast<std::size_t>(ncols_), kInf);
        state_.resize(static_cast<std::size_t>(ncols_), kAtLower);
        basis_.assign(static_cast<std::size_t>(m_), -1);
        basic_val_.assign(static_cast<std::size_t>(m_), 0.0);

        int next_slack = nv;
        int next_artif = nv + slack_count;
        for (int i = 0; i < m_; ++i) {
            const Row& r = rows[static_cast<std::size_t>(i)];
            double* ti = row(i);
            for (const auto& [j, a] : r.coeffs) ti[j] += a;
            const double res = residual[static_cast<std::size_t>(i)];
            if (!r.is_eq) {
                const int s = next_slack++;
                ti[s] = 1.0;
                if (res >= 0.0) {
                    basis_[static_cast<std::size_t>(i)] = s;
                    basic_val_[static_cast<std::size_t>(i)] = res;
                    state_[static_cast<std::size_t>(s)] = kBasic;
                    continue;
                }
            }
            // Artificial start. Basis columns must be unit columns, so flip
            // the whole row when the residual is negative.
            if (res < 0.0)
                for (int q = 0; q < ncols_; ++q) ti[q] = -ti[q];
            const int z = next_artif++;
            ti[z] = 1.0;
            basis_[static_cast<std::size_t>(i)] = z;
            basic_val_[static_cast<std::size_t>(i)] = std::abs(res);
            state_[static_cast<std::size_t>(z)] = kBasic;
            artificials_.push_back(z);
        }

        cost_.assign(static_cast<std::size_t>(ncols_), 0.0);
        for (const auto& [j, c] : prob_.objective)
            cost_[static_cast<std::size_t>(j)] += c;
    }

    void set_phase_costs(bool phase1) {
        phase1_ = phase1;
        recompute_reduced_costs();
    }

    void recompute_reduced_costs() {
        dcost_.assign(static_cast<std::size_t>(ncols_), 0.0);
        if (phase1_) {
            for (int col : artificials_) dcost_[static_cast<std::size_t>(col)] = 1.0;
        } else {
            dcost_ = cost_;
        }
        // d <- c - c_B^T B^{-1} A, where tab already stores B^{-1} A.
        for (int i = 0; i < m_; ++i) {
            const int b = basis_[static_cast<std::size_t>(i)];
            const double cb = dcost_[static_cast<std::size_t>(b)];
            if (cb == 0.0) continue;
            const double* ti = row(i);
            for (int j = 0; j < ncols_; ++j)
                dcost_[static_cast<std::size_t>(j)] -= cb * ti[j];
        }
        for (int i = 0; i < m_; ++i)
            dcost_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] = 0.0;
    }

    double phase_objective() const {
        // Artificials occupy the trailing columns.
        const int first_artif = ncols_ - static_cast<int>(artificials_.size());
        double total = 0.0;
        for (int i = 0; i < m_; ++i)
            if (basis_[static_cast<std::size_t>(i)] >= first_artif)
                total += basic_val_[static_cast<std::size_t>(i)];
        return total;
    }

    bool eligible(int j, double tol) const {
        if (state_[static_cast<std::size_t>(j)] == kBasic) return false;
        if (upper_[static_cast<std::size_t>(j)] - lower_[static_cast<std::size_t>(j)] <=
            1e-14)
            return false;  // fixed columns can never move
        const double d = dcost_[static_cast<std::size_t>(j)];
        if (state_[static_cast<std::size_t>(j)] == kAtLower) return d < -tol;
        return d > tol;
    }

    int price(bool bland) const {
        if (bland) {
            for (int j = 0; j < ncols_; ++j)
                if (eligible(j, kLpPivotTol)) return j;
            return -1;
        }
        int best = -1;
        double score = kLpPivotTol;
        for (int j = 0; j < ncols_; ++j) {
            if (!eligible(j, kLpPivotTol)) continue;
            const double s = std::abs(dcost_[static_cast<std::size_t>(j)]);
            if (s > score) {
                score = s;
                best = j;
            }
        }
        return best;
    }

    // One simplex phase. Returns false if the pivot budget ran out.
    bool iterate(long limit) {
        int degenerate_streak = 0;
        bool bland = false;
        while (true) {
            if (pivots_ >= limit) return false;
            const int j = price(bland);
            if (j < 0) return true;
            const int dir = state_[static_cast<std::size_t>(j)] == kAtLower ? 1 : -1;

            // Bounded ratio test: the entering column moves by t >= 0, each
            // basic variable must stay inside its own bounds, and the
            // entering variable may at most travel to its opposite bound.
            double t_best = upper_[static_cast<std::size_t>(j)] -
                            lower_[static_cast<std::size_t>(j)];
            int leave = -1;     // row index, -1 means bound flip
            int leave_col = -1;
            bool leave_at_upper = false;
            for (int i = 0; i < m_; ++i) {
                const double g = dir * row(i)[j];
                double t;
                bool hits_upper;
                const int b = basis_[static_cast<std::size_t>(i)];
                if (g > kLpPivotTol) {
                    t = (basic_val_[static_cast<std::size_t>(i)] -
                         lower_[static_cast<std::size_t>(b)]) / g;
                    hits_upper = false;
                } else if (g < -kLpPivotTol) {
                    const double ub = upper_[static_cast<std::size_t>(b)];
                    if (ub == kInf) continue;
                    t = (ub - basic_val_[static_cast<std::size_t>(i)]) / (-g);
                    hits_upper = true;
                } else {
                    continue;
                }
                if (t < 0.0) t = 0.0;  // clamp feasibility drift
                if (t < t_best - 1e-12 ||
                    (t <= t_best + 1e-12 && leave >= 0 &&
                     b < leave_col)) {
                    t_best = t;
                    leave = i;
                    leave_col = b;
                    leave_at_upper = hits_upper;
                }
            }

            if (t_best == kInf && leave < 0)
                throw std::runtime_error("lp: unbounded direction (internal)");

            ++pivots_;
            if (t_best <= 1e-12) {
                if (++degenerate_streak >= 64) bland = true;
            } else {
                degenerate_streak = 0;
                bland = false;
            }

            // Move the entering variable by t_best and update basic values.
            if (t_best > 0.0) {
                for (int i = 0; i < m_; ++i)
                    basic_val_[static_cast<std::size_t>(i)] -= dir * t_best * row(i)[j];
            }

            if (leave < 0) {
                // Bound flip: no basis change.
                state_[static_cast<std::size_t>(j)] =
                    state_[static_cast<std::size_t>(j)] == kAtLower ? kAtUpper
                                                                    : kAtLower;
                continue;
            }

            const double enter_value = nonbasic_value(j) + dir * t_best;
            state_[static_cast<std::size_t>(leave_col)] =
                leave_at_upper ? kAtUpper : kAtLower;
            state_[static_cast<std::size_t>(j)] = kBasic;
            basis_[static_cast<std::size_t>(leave)] = j;
            basic_val_[static_cast<std::size_t>(leave)] = enter_value;

            // Row elimination so the entering column becomes a unit column.
            double* pr = row(leave);
            const double piv = pr[j];
            const double inv = 1.0 / piv;
            for (int q = 0; q < ncols_; ++q) pr[q] *= inv;
            pr[j] = 1.0;
            for (int i = 0; i < m_; ++i) {
                if (i == leave) continue;
                double* ti = row(i);
                const double f = ti[j];
                if (f == 0.0) continue;
                for (int q = 0; q < ncols_; ++q) ti[q] -= f * pr[q];
                ti[j] = 0.0;
            }
            const double dj = dcost_[static_cast<std::size_t>(j)];
            if (dj != 0.0) {
                for (int q = 0; q < ncols_; ++q)
                    dcost_[static_cast<std::size_t>(q)] -= dj * pr[q];
            }
            dcost_[static_cast<std::size_t>(j)] = 0.0;

            if (pivots_ % 128 == 0) recompute_reduced_costs();
        }
    }

    LpSolution finish(LpStatus status) {
        LpSolution sol;
        sol.status = status;
        sol.values.assign(static_cast<std::size_t>(prob_.var_count), 0.0);
        for (int j = 0; j < prob_.var_count; ++j)
            sol.values[static_cast<std::size_t>(j)] = nonbasic_value(j);
        for (int i = 0; i < m_; ++i) {
            const int b = basis_[static_cast<std::size_t>(i)];
            if (b < prob_.var_count)
                sol.values[static_cast<std::size_t>(b)] =
                    basic_val_[static_cast<std::size_t>(i)];
        }
        // Clip roundoff excursions beyond the variable box.
        for (int j = 0; j < prob_.var_count; ++j) {
            double& v = sol.values[static_cast<std::size_t>(j)];
            v = std::min(std::max(v, prob_.lower[static_cast<std::size_t>(j)] ),
                         prob_.upper[static_cast<std::size_t>(j)]);
        }
        sol.objective = 0.0;
        for (const auto& [j, c] : prob_.objective)
            sol.objective += c * sol.values[static_cast<std::size_t>(j)];
        return sol;
    }
};

}  // namespace

LpSolution solve(const LpProblem& p) {
    Simplex s(p);
    return s.run();
}

LpSolution solve_lazy(const LpProblem& p, const Separator& separate) {
    LpProblem work = p;
    for (int round = 0; round < 200; ++round) {
        LpSolution sol = solve(work);
        if (sol.status != LpStatus::optimal) return sol;
        auto violated = separate(sol.values);
        violated.erase(std::remove_if(violated.begin(), violated.end(),
                                      [](const SeparatedConstraint& s) {
                                          return s.violation <= 1e-6;
                                      }),
                       violated.end());
        if (violated.empty()) return sol;
        std::stable_sort(violated.begin(), violated.end(),
                         [](const SeparatedConstraint& a, const SeparatedConstraint& b) {
                             return a.violation > b.violation;
                         });
        if (violated.size() > 500) violated.resize(500);
        for (auto& v : violated) work.constraints.push_back(std::move(v.constraint));
    }
    LpSolution sol;
    sol.status = LpStatus::iteration_limit;
    return sol;
}

double max_violation(const LpProblem& p, const std::vector<double>& values) {
    double worst = 0.0;
    for (int j = 0; j < p.var_count; ++j) {
        worst = std::max(worst, p.lower[static_cast<std::size_t>(j)] -
                                    values[static_cast<std::size_t>(j)]);
        worst = std::max(worst, values[static_cast<std::size_t>(j)] -
                                    p.upper[static_cast<std::size_t>(j)]);
    }
    for (const auto& c : p.constraints) {
        double act = 0.0;
        for (const auto& [j, a] : c.coeffs)
            act += a * values[static_cast<std::size_t>(j)];
        switch (c.rel) {
            case Relation::le: worst = std::max(worst, act - c.rhs); break;
            case Relation::ge: worst = std::max(worst, c.rhs - act); break;
            case Relation::eq: worst = std::max(worst, std::abs(act - c.rhs)); break;
        }
    }
    return worst;
}

}  // namespace mmcc
