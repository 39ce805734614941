#include "mmcc/cc_complete.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mmcc/oracle.hpp"
#include "mmcc/rng.hpp"

namespace mmcc {

namespace {

constexpr double kBallRadius = 2.0 / 7.0;

std::vector<const SignedEdge*> negative_edges(const SignedGraph& g) {
    std::vector<const SignedEdge*> neg;
    for (const auto& e : g.edges())
        if (e.sign == Sign::negative) neg.push_back(&e);
    return neg;
}

}  // namespace

LpProblem build_cc_lp(const SignedGraph& g, const Measure& eta, double H,
                      int guess) {
    if (!g.complete())
        throw std::invalid_argument(
            "build_cc_lp: requires a complete unit-weight instance");
    const int n = g.n();
    if (guess < 0 || guess >= n)
        throw std::invalid_argument("build_cc_lp: guess out of range");
    if (!(H > 0.0 && H <= 1.0))
        throw std::invalid_argument("build_cc_lp: H must lie in (0,1]");

    LpProblem p;
    for (int v = 0; v < n; ++v) p.add_var(0.0, 1.0);                  // x
    for (int i = 0; i < pair_count(n); ++i) p.add_var(0.0, 1.0);      // d
    const auto neg = negative_edges(g);
    const int m_base = n + pair_count(n);
    for (std::size_t i = 0; i < neg.size(); ++i) p.add_var(0.0, 1.0);  // m

    p.set_bounds(guess, 1.0, 1.0);

    const auto dv = [&](int u, int v) { return n + pair_index(n, u, v); };
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const int d = dv(u, v);
            p.add_le({{u, 1.0}, {v, -1.0}, {d, -1.0}}, 0.0);   // x(u)-x(v) <= d
            p.add_le({{v, 1.0}, {u, -1.0}, {d, -1.0}}, 0.0);   // x(v)-x(u) <= d
            p.add_le({{d, 1.0}, {u, -1.0}, {v, -1.0}}, 0.0);   // d <= x(u)+x(v)
            p.add_le({{u, 1.0}, {v, 1.0}, {d, 1.0}}, 2.0);     // x+x+d <= 2
        }
    }
    for (std::size_t i = 0; i < neg.size(); ++i) {
        const int m = m_base + static_cast<int>(i);
        const int d = dv(neg[i]->u, neg[i]->v);
        p.add_le({{neg[i]->u, 1.0}, {m, -1.0}}, 0.0);  // m >= x(u)
        p.add_le({{neg[i]->v, 1.0}, {m, -1.0}}, 0.0);  // m >= x(v)
        // Keeps every negative edge's objective term m - d nonnegative, as
        // the rounding analysis requires; integral points have d = cut and
        // m = max, which always satisfy d <= m.
        p.add_le({{d, 1.0}, {m, -1.0}}, 0.0);
    }
    {
        std::vector<std::pair<int, double>> row;
        for (int v = 0; v < n; ++v) row.push_back({v, eta.eta[static_cast<std::size_t>(v)]});
        p.add_ge(std::move(row), H);
    }

    // Objective: positive edges pay d, negative edges pay m - d.
    for (std::size_t i = 0, neg_i = 0; i < g.edges().size(); ++i) {
        const auto& e = g.edges()[i];
        const int d = dv(e.u, e.v);
        if (e.sign == Sign::positive) {
            p.objective.push_back({d, 1.0});
        } else {
            p.objective.push_back({m_base + static_cast<int>(neg_i), 1.0});
            p.objective.push_back({d, -1.0});
            ++neg_i;
        }
    }
    return p;
}

GuessSolution solve_guess(const SignedGraph& g, const Measure& eta, double H,
                          int guess, RowPool* pool, long* lp_solves) {
    const int n = g.n();
    LpProblem p = build_cc_lp(g, eta, H, guess);
    if (pool)
        for (const auto& key : *pool) p.constraints.push_back(triangle_row(n, n, key));

    long rounds = 0;
    auto separator = [&](const std::vector<double>& values) {
        ++rounds;
        return separate_triangles(values, n, n, pool);
    };
    const LpSolution sol = solve_lazy(p, separator);
    if (lp_solves) *lp_solves += rounds;
    if (sol.status == LpStatus::infeasible)
        throw LpInfeasibleError("solve_guess: LP infeasible (total measure below H)");
    if (sol.status != LpStatus::optimal)
        throw std::runtime_error("solve_guess: LP hit its iteration limit");

    GuessSolution out;
    out.guess = guess;
    out.objective = sol.objective;
    out.x.assign(sol.values.begin(), sol.values.begin() + n);
    out.d.assign(sol.values.begin() + n, sol.values.begin() + n + pair_count(n));
    out.m.assign(sol.values.begin() + n + pair_count(n), sol.values.end());
    return out;
}

GammaSelection select_gamma(const std::vector<GuessSolution>& solutions,
                            const Measure& eta, double H) {
    const std::size_t n = solutions.size();
    if (n == 0) throw std::invalid_argument("select_gamma: no solutions");
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        const auto& sa = solutions[static_cast<std::size_t>(a)];
        const auto& sb = solutions[static_cast<std::size_t>(b)];
        if (sa.objective != sb.objective) return sa.objective < sb.objective;
        return sa.guess < sb.guess;
    });

    GammaSelection sel;
    double prefix = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = solutions[static_cast<std::size_t>(idx[i])];
        sel.sorted_guesses.push_back(s.guess);
        sel.sorted_objectives.push_back(s.objective);
        if (sel.lambda == 0) {
            prefix += eta.eta[static_cast<std::size_t>(s.guess)];
            if (prefix >= H - 1e-12) sel.lambda = static_cast<int>(i) + 1;
        }
    }
    if (sel.lambda == 0)
        throw std::invalid_argument("select_gamma: total measure below H");
    sel.gamma.assign(sel.sorted_guesses.begin(),
                     sel.sorted_guesses.begin() + sel.lambda);
    return sel;
}

std::vector<int> round_ball(const GuessSolution& sol) {
    const int n = static_cast<int>(sol.x.size());
    const int u = sol.guess;
    std::vector<int> ball;
    double total = 0.0;
    for (int w = 0; w < n; ++w) {
        if (w == u) continue;
        const double duw = sol.d[static_cast<std::size_t>(pair_index(n, u, w))];
        if (duw <= kBallRadius + 1e-9) {
            ball.push_back(w);
            total += duw;
        }
    }
    if (total >= static_cast<double>(ball.size()) / 7.0 - 1e-12) return {u};
    ball.push_back(u);
    std::sort(ball.begin(), ball.end());
    return ball;
}

SetFamily find_cluster_family(const SignedGraph& g, const Measure& eta, double H,
                              CcFamilyDiag* diag, RowPool* pool, long* lp_solves) {
    const int n = g.n();
    std::vector<GuessSolution> solutions;
    solutions.reserve(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        solutions.push_back(solve_guess(g, eta, H, u, pool, lp_solves));

    if (diag) {
        diag->objectives.resize(static_cast<std::size_t>(n));
        for (const auto& s : solutions) {
            diag->objectives[static_cast<std::size_t>(s.guess)] = s.objective;
            const auto ball = round_ball(s);
            const double gap = set_disagreement(g, ball) - 7.0 * s.objective;
            diag->max_seven_gap = std::max(diag->max_seven_gap, gap);
            if (gap > 1e-6) ++diag->seven_violations;
        }
    }

    GammaSelection sel = select_gamma(solutions, eta, H);
    SetFamily family;
    for (int i = 0; i < sel.lambda; ++i) {
        const int u = sel.sorted_guesses[static_cast<std::size_t>(i)];
        family.sets.push_back(round_ball(solutions[static_cast<std::size_t>(u)]));
    }
    if (diag) diag->selection = std::move(sel);
    return family;
}

CcResult solve_cc_complete(const SignedGraph& g, const CcOptions& opts) {
    if (!g.complete())
        throw std::invalid_argument("solve_cc_complete: requires a complete instance");
    const int n = g.n();
    CcResult result;
    if (n == 1) {
        result.clustering.parts = {{0}};
        result.report.best_k = 1;
        result.report.best_cost = 0.0;
        return result;
    }

    auto cost_fn = [&](const std::vector<int>& s) { return set_disagreement(g, s); };
    RowPool pool;
    CcReport& rep = result.report;
    bool have_best = false;

    const int k_lo = opts.k_override > 0 ? opts.k_override : 1;
    const int k_hi = opts.k_override > 0 ? opts.k_override : n;
    for (int k = k_lo; k <= k_hi; ++k) {
        CcKReport kr;
        kr.k = k;
        const double H = 1.0 / k;

        auto finder = [&](const Measure& eta, double h) {
            CcFamilyDiag diag;
            SetFamily fam = find_cluster_family(g, eta, h, &diag, &pool, &rep.lp_solves);
            rep.max_seven_gap = std::max(rep.max_seven_gap, diag.max_seven_gap);
            rep.seven_violations += diag.seven_violations;
            if (opts.check_guess_lower_bound && n <= 12) {
                rep.oracle_checked = true;
                const double opt = exact_cluster(g, eta, h).value;
                for (int i = 0; i < diag.selection.lambda; ++i) {
                    const double gap =
                        diag.selection.sorted_objectives[static_cast<std::size_t>(i)] - opt;
                    rep.max_guess_gap = std::max(rep.max_guess_gap, gap);
                    if (gap > 1e-6) ++rep.guess_violations;
                }
            }
            return fam;
        };

        try {
            CoveringStats cstats;
            CoveringConfig cfg;
            cfg.k = k;
            cfg.finder = finder;
            cfg.stationary_finder = true;
            SetFamily family = covering(n, cfg, &cstats);

            double B = 0.0;
            for (const auto& s : family.sets) B = std::max(B, cost_fn(s));

            AggregateStats astats;
            Partition part = aggregate(n, family, B, cost_fn,
                                       derive_seed(opts.seed, 0xCC, static_cast<std::uint64_t>(k)),
                                       &astats);
            for (std::size_t i = 1; i < astats.potential.size(); ++i)
                if (!(astats.potential[i] < astats.potential[i - 1] - kCostTol))
                    rep.potential_ok = false;

            kr.ran = true;
            kr.rounds = cstats.rounds;
            kr.rounds_bound = cstats.rounds_bound;
            kr.min_coverage = cstats.min_coverage;
            kr.family_size = family.sets.size();
            kr.B = B;
            kr.step2_iterations = astats.step2_iterations;
            kr.max_cost = max_disagreement(g, part);

            if (!have_best || kr.max_cost < rep.best_cost - kCostTol) {
                rep.best_cost = kr.max_cost;
                rep.best_k = k;
                result.clustering = canonical_partition(part);
                have_best = true;
            }
        } catch (const LpInfeasibleError& e) {
            kr.skip_reason = e.what();
        }
        rep.per_k.push_back(std::move(kr));
        if (have_best && opts.early_exit_on_zero && rep.best_cost <= kCostTol) break;
    }

    if (!have_best)
        throw std::runtime_error("solve_cc_complete: every k failed (invalid measure)");
    return result;
}

double cc_lp_lower_bound(const SignedGraph& g) {
    const int n = g.n();
    if (n <= 1) return 0.0;
    const Measure eta = Measure::uniform(n);
    const double H = 1.0 / n;
    RowPool pool;
    std::vector<GuessSolution> solutions;
    for (int u = 0; u < n; ++u)
        solutions.push_back(solve_guess(g, eta, H, u, &pool));
    const GammaSelection sel = select_gamma(solutions, eta, H);
    return sel.sorted_objectives[static_cast<std::size_t>(sel.lambda - 1)];
}

}  // namespace mmcc
