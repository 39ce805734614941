#include "mmcc/multicut.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mmcc/rng.hpp"

namespace mmcc {

namespace {

// Lazy row families beyond the shared triangle rows.
constexpr int kRowAbsA = 10;      // x(a) - x(b) <= z(a,b)
constexpr int kRowAbsB = 11;      // x(b) - x(a) <= z(a,b)
constexpr int kRowZBox = 12;      // z(a,b) <= x(a) + x(b)
constexpr int kRowSpreadCut = 15; // subset form of the spreading constraint

struct McLayout {
    int n = 0;
    bool spreading = false;
    double spread_coeff = 0.0;  // 1 - 2H
    int z_base = 0;
    int mu_base = 0;
    int var_count = 0;

    McLayout(int n_, double H, bool include_mu) : n(n_) {
        spreading = 1.0 - 2.0 * H > 1e-12;
        spread_coeff = 1.0 - 2.0 * H;
        z_base = n;
        mu_base = n + pair_count(n);
        var_count = mu_base + (spreading && include_mu ? n * (n - 1) : 0);
    }

    bool has_mu() const { return var_count > mu_base; }
    int z(int u, int v) const { return z_base + pair_index(n, u, v); }
    // Ordered pair (u, v), u = spreading center.
    int mu(int u, int v) const {
        return mu_base + u * (n - 1) + (v < u ? v : v - 1);
    }
};

bool heavy(const Measure& eta, double H, int v) {
    return eta.eta[static_cast<std::size_t>(v)] > 2.0 * H + 1e-12;
}

LpConstraint make_row(const McLayout& lay, const Measure& eta, const RowKey& key) {
    switch (key.family) {
        case kRowTriangle:
            return triangle_row(lay.n, lay.z_base, key);
        case kRowAbsA:
            return {{{key.a, 1.0}, {key.b, -1.0}, {lay.z(key.a, key.b), -1.0}},
                    Relation::le, 0.0};
        case kRowAbsB:
            return {{{key.b, 1.0}, {key.a, -1.0}, {lay.z(key.a, key.b), -1.0}},
                    Relation::le, 0.0};
        case kRowZBox:
            return {{{lay.z(key.a, key.b), 1.0}, {key.a, -1.0}, {key.b, -1.0}},
                    Relation::le, 0.0};
        case kRowSpreadCut: {
            // Subset cut for center u = key.a and A = bits of key.c:
            // sum_{v in A} eta(v) z(u,v) + sum_{v not in A, v != u} eta(v) x(u)
            //   >= (1 - 2H) x(u)
            const int u = key.a;
            const unsigned mask = static_cast<unsigned>(key.c);
            LpConstraint row;
            row.rel = Relation::ge;
            row.rhs = 0.0;
            double xu_coeff = -lay.spread_coeff;
            for (int v = 0; v < lay.n; ++v) {
                if (v == u) continue;
                if (mask & (1u << v))
                    row.coeffs.push_back({lay.z(u, v),
                                          eta.eta[static_cast<std::size_t>(v)]});
                else
                    xu_coeff += eta.eta[static_cast<std::size_t>(v)];
            }
            row.coeffs.push_back({u, xu_coeff});
            return row;
        }
        default:
            throw std::logic_error("multicut: unknown row key");
    }
}

void add_shared_rows(LpProblem& p, const McLayout& lay, const MulticutInstance& mc,
                     const Measure& eta, double H) {
    const int n = lay.n;
    for (int v = 0; v < n; ++v)
        if (heavy(eta, H, v)) p.set_bounds(v, 0.0, 0.0);
    for (const auto& [s, t] : mc.pairs()) {
        p.add_ge({{lay.z(s, t), 1.0}, {s, -1.0}}, 0.0);  // z(s,t) >= x(s)
        p.add_ge({{lay.z(s, t), 1.0}, {t, -1.0}}, 0.0);  // z(s,t) >= x(t)
    }
    {
        std::vector<std::pair<int, double>> row;
        for (int v = 0; v < n; ++v)
            row.push_back({v, eta.eta[static_cast<std::size_t>(v)]});
        p.add_ge(std::move(row), H);
    }
    if (lay.spreading && lay.has_mu()) {
        for (int u = 0; u < n; ++u) {
            std::vector<std::pair<int, double>> row;
            for (int v = 0; v < n; ++v) {
                if (v == u) continue;
                row.push_back({lay.mu(u, v), eta.eta[static_cast<std::size_t>(v)]});
            }
            row.push_back({u, -(1.0 - 2.0 * H)});
            p.add_ge(std::move(row), 0.0);
        }
    }
}

void set_mc_objective(LpProblem& p, const McLayout& lay, const MulticutInstance& mc) {
    for (const auto& e : mc.edges())
        p.objective.push_back({lay.z(e.u, e.v), e.weight});
}

}  // namespace

LpProblem build_mc_lp(const MulticutInstance& mc, const Measure& eta, double H) {
    if (!(H > 0.0 && H <= 1.0))
        throw std::invalid_argument("build_mc_lp: H must lie in (0,1]");
    const McLayout lay(mc.n(), H, true);
    LpProblem p;
    for (int j = 0; j < lay.var_count; ++j) p.add_var(0.0, 1.0);
    set_mc_objective(p, lay, mc);
    add_shared_rows(p, lay, mc, eta, H);
    const int n = lay.n;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            p.constraints.push_back(make_row(lay, eta, {kRowAbsA, u, v, 0}));
            p.constraints.push_back(make_row(lay, eta, {kRowAbsB, u, v, 0}));
            p.constraints.push_back(make_row(lay, eta, {kRowZBox, u, v, 0}));
        }
    }
    if (lay.has_mu()) {
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (v == u) continue;
                p.add_le({{lay.mu(u, v), 1.0}, {u, -1.0}}, 0.0);
                p.add_le({{lay.mu(u, v), 1.0}, {lay.z(u, v), -1.0}}, 0.0);
            }
        }
    }
    return p;
}

bool check_integral_feasible(const MulticutInstance& mc, const Measure& eta,
                             double H, const std::vector<int>& s) {
    const McLayout lay(mc.n(), H, true);
    const auto in = member_flags(mc.n(), s);
    std::vector<double> values(static_cast<std::size_t>(lay.var_count), 0.0);
    const int n = mc.n();
    for (int v = 0; v < n; ++v)
        values[static_cast<std::size_t>(v)] = in[static_cast<std::size_t>(v)] ? 1.0 : 0.0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            values[static_cast<std::size_t>(lay.z(u, v))] =
                in[static_cast<std::size_t>(u)] != in[static_cast<std::size_t>(v)] ? 1.0
                                                                                   : 0.0;
    if (lay.has_mu()) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (v == u) continue;
                values[static_cast<std::size_t>(lay.mu(u, v))] =
                    std::min(values[static_cast<std::size_t>(u)],
                             values[static_cast<std::size_t>(lay.z(u, v))]);
            }
    }
    const LpProblem p = build_mc_lp(mc, eta, H);
    if (max_violation(p, values) > 1e-9) return false;
    // The cut pseudometric satisfies the lazy triangle rows by construction;
    // check anyway so the answer really covers every constraint.
    return separate_triangles(values, n, lay.z_base).empty();
}

McLpSolution solve_mc_lp(const MulticutInstance& mc, const Measure& eta, double H,
                         RowPool* pool, long* lp_solves) {
    if (!(H > 0.0 && H <= 1.0))
        throw std::invalid_argument("solve_mc_lp: H must lie in (0,1]");
    // Fast path: no mu block. The spreading constraints enter as subset cuts
    // over (x, z), whose tightest instance picks exactly min{x(u), z(u,v)}
    // per vertex, so the optimum matches the mu formulation.
    const McLayout lay(mc.n(), H, false);
    const int n = lay.n;
    const bool can_pool_spread = n <= 31;

    LpProblem p;
    for (int j = 0; j < lay.var_count; ++j) p.add_var(0.0, 1.0);
    set_mc_objective(p, lay, mc);
    add_shared_rows(p, lay, mc, eta, H);
    if (pool) {
        for (const auto& key : *pool) {
            if (key.family == kRowSpreadCut && !lay.spreading) continue;
            p.constraints.push_back(make_row(lay, eta, key));
        }
    }

    auto note = [&](std::vector<SeparatedConstraint>& out, const RowKey& key,
                    double violation, bool poolable = true) {
        if (violation <= 1e-6) return;
        out.push_back({make_row(lay, eta, key), violation});
        if (pool && poolable) pool->insert(key);
    };
    long rounds = 0;
    auto separator = [&](const std::vector<double>& values) {
        ++rounds;
        auto out = separate_triangles(values, n, lay.z_base, pool);
        auto val = [&](int j) { return values[static_cast<std::size_t>(j)]; };
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                const double zuv = val(lay.z(u, v));
                note(out, {kRowAbsA, u, v, 0}, val(u) - val(v) - zuv);
                note(out, {kRowAbsB, u, v, 0}, val(v) - val(u) - zuv);
                note(out, {kRowZBox, u, v, 0}, zuv - val(u) - val(v));
            }
        }
        if (lay.spreading) {
            for (int u = 0; u < n; ++u) {
                const double xu = val(u);
                double lhs = 0.0;
                unsigned mask = 0;
                for (int v = 0; v < n; ++v) {
                    if (v == u) continue;
                    const double zuv = val(lay.z(u, v));
                    if (zuv < xu) {
                        lhs += eta.eta[static_cast<std::size_t>(v)] * zuv;
                        if (v < 31) mask |= 1u << v;
                    } else {
                        lhs += eta.eta[static_cast<std::size_t>(v)] * xu;
                    }
                }
                note(out, {kRowSpreadCut, u, 0, static_cast<int>(mask)},
                     lay.spread_coeff * xu - lhs, can_pool_spread);
            }
        }
        return out;
    };

    const LpSolution sol = solve_lazy(p, separator);
    if (lp_solves) *lp_solves += rounds;
    if (sol.status == LpStatus::infeasible)
        throw McLpInfeasibleError(
            "solve_mc_lp: infeasible (light vertices carry less measure than H)");
    if (sol.status != LpStatus::optimal)
        throw std::runtime_error("solve_mc_lp: LP hit its iteration limit");

    McLpSolution out;
    out.objective = sol.objective;
    out.x.assign(sol.values.begin(), sol.values.begin() + n);
    out.z.assign(sol.values.begin() + n, sol.values.begin() + n + pair_count(n));
    return out;
}

SetFamily heuristic_separator(const McLpSolution& sol, const MulticutInstance& mc,
                              const Measure& eta, double H, std::uint64_t seed) {
    const int n = mc.n();
    if (static_cast<int>(sol.x.size()) != n)
        throw std::invalid_argument("heuristic_separator: solution size mismatch");
    double xmax = 0.0;
    for (double v : sol.x) xmax = std::max(xmax, v);
    if (xmax <= 1e-12)
        throw std::runtime_error(
            "heuristic_separator: empty family (LP solution has x identically zero)");

    std::mt19937_64 rng(seed);
    std::vector<char> unassigned(static_cast<std::size_t>(n), 1);
    int remaining = n;
    double acc = 0.0;
    SetFamily out;

    auto zval = [&](int u, int v) {
        return u == v ? 0.0 : sol.z[static_cast<std::size_t>(pair_index(n, u, v))];
    };

    while (acc < H / 4.0 - 1e-12 && remaining > 0) {
        int center = -1;
        for (int v = 0; v < n; ++v) {
            if (!unassigned[static_cast<std::size_t>(v)]) continue;
            if (center < 0 || sol.x[static_cast<std::size_t>(v)] >
                                  sol.x[static_cast<std::size_t>(center)])
                center = v;
        }
        const double theta = 0.5 * uniform01(rng);
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            if (unassigned[static_cast<std::size_t>(v)] && zval(center, v) <= theta)
                in[static_cast<std::size_t>(v)] = 1;

        // Evict one endpoint of any pair trapped inside the ball: the one
        // with smaller x (ties: larger id). Evicted vertices stay unassigned.
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [s, t] : mc.pairs()) {
                if (!in[static_cast<std::size_t>(s)] || !in[static_cast<std::size_t>(t)])
                    continue;
                const double xs = sol.x[static_cast<std::size_t>(s)];
                const double xt = sol.x[static_cast<std::size_t>(t)];
                int evict;
                if (xs < xt) evict = s;
                else if (xt < xs) evict = t;
                else evict = std::max(s, t);
                in[static_cast<std::size_t>(evict)] = 0;
                changed = true;
            }
        }

        std::vector<int> ball;
        for (int v = 0; v < n; ++v)
            if (in[static_cast<std::size_t>(v)]) ball.push_back(v);
        if (ball.empty())
            throw std::logic_error("heuristic_separator: eviction emptied a ball");
        for (int v : ball) unassigned[static_cast<std::size_t>(v)] = 0;
        remaining -= static_cast<int>(ball.size());
        acc += eta.mass(ball);
        out.sets.push_back(std::move(ball));
    }
    return out;
}

SetFamily combine_phase(const SetFamily& family, const MulticutInstance& mc) {
    for (const auto& s : family.sets)
        if (vio(mc, s) > 0)
            throw std::invalid_argument("combine_phase: member with vio > 0");

    bool disjoint = true;
    {
        std::vector<char> seen(static_cast<std::size_t>(mc.n()), 0);
        for (const auto& s : family.sets)
            for (int v : s) {
                if (seen[static_cast<std::size_t>(v)]) disjoint = false;
                seen[static_cast<std::size_t>(v)] = 1;
            }
    }

    std::vector<std::vector<int>> sets = family.sets;
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < sets.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < sets.size() && !merged; ++j) {
                std::vector<int> uni = sets[i];
                uni.insert(uni.end(), sets[j].begin(), sets[j].end());
                uni = sorted_unique(uni);
                if (vio(mc, uni) == 0) {
                    sets[i] = std::move(uni);
                    sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(j));
                    merged = true;
                }
            }
        }
    }

    // Size invariant from the uncrossing argument: every surviving pair of
    // sets shares a conflicting terminal pair, and with disjoint sets the
    // least-terminal one caps the count via |U|(|U|-1) <= min(2T,n)*Delta.
    // (The bare sqrt form overshoots by less than one on tiny inputs, e.g.
    // two singleton sets around a single pair.)
    const int T = static_cast<int>(mc.pairs().size());
    if (disjoint && T >= 1 && sets.size() >= 2) {
        const double cap =
            static_cast<double>(std::min(2 * T, mc.n())) * max_demand(mc);
        const double count = static_cast<double>(sets.size());
        if (count * (count - 1.0) > cap + 1e-9)
            throw std::logic_error("combine_phase: output exceeds the size bound");
    }
    SetFamily out;
    out.sets = std::move(sets);
    return out;
}

Partition aggregate_constrained(const SetFamily& family, const MulticutInstance& mc,
                                double B, int k, std::uint64_t seed) {
    const int n = mc.n();
    const int T = static_cast<int>(mc.pairs().size());
    if (k < 1) throw std::invalid_argument("aggregate_constrained: k must be >= 1");
    if (T == 0) {
        // No pairs means no terminals; the square-root bounds degenerate, so
        // everything lands in one part.
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        return Partition{{all}};
    }

    auto delta = [&](const std::vector<int>& s) { return boundary(mc, s); };
    Partition p = aggregate(n, family, B, delta, seed);

    std::vector<char> is_terminal(static_cast<std::size_t>(n), 0);
    for (const auto& [s, t] : mc.pairs()) {
        is_terminal[static_cast<std::size_t>(s)] = 1;
        is_terminal[static_cast<std::size_t>(t)] = 1;
    }
    auto terminal_part = [&](const std::vector<int>& part) {
        for (int v : part)
            if (is_terminal[static_cast<std::size_t>(v)]) return true;
        return false;
    };

    const double Q =
        std::sqrt(static_cast<double>(std::min(2 * T, n)) * max_demand(mc));
    double total = 0.0;
    for (const auto& part : p.parts) total += delta(part);
    const double Bp = std::max(total / (k * Q), 2.0 * B);

    // Step 3: merge non-terminal parts while the combined boundary fits.
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < p.parts.size() && !merged; ++i) {
            if (terminal_part(p.parts[i])) continue;
            for (std::size_t j = i + 1; j < p.parts.size() && !merged; ++j) {
                if (terminal_part(p.parts[j])) continue;
                if (delta(p.parts[i]) + delta(p.parts[j]) <= Bp + kCostTol) {
                    p.parts[i].insert(p.parts[i].end(), p.parts[j].begin(),
                                      p.parts[j].end());
                    p.parts[i] = sorted_unique(p.parts[i]);
                    p.parts.erase(p.parts.begin() + static_cast<std::ptrdiff_t>(j));
                    merged = true;
                }
            }
        }
    }

    // Step 4: hand surviving non-terminal parts round-robin to terminal parts.
    std::vector<std::size_t> terminals, leftovers;
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        (terminal_part(p.parts[i]) ? terminals : leftovers).push_back(i);
    if (terminals.empty())
        throw std::logic_error("aggregate_constrained: no terminal part despite T >= 1");
    const std::size_t cap = static_cast<std::size_t>(std::ceil(2.0 * Q));
    if (leftovers.size() > terminals.size() * cap)
        throw CapacityError("aggregate_constrained: " + std::to_string(leftovers.size()) +
                            " non-terminal parts exceed capacity " +
                            std::to_string(terminals.size() * cap) +
                            " (finder defect)");
    Partition out;
    for (std::size_t i : terminals) out.parts.push_back(p.parts[i]);
    for (std::size_t idx = 0; idx < leftovers.size(); ++idx) {
        auto& host = out.parts[idx % out.parts.size()];
        const auto& extra = p.parts[leftovers[idx]];
        host.insert(host.end(), extra.begin(), extra.end());
        host = sorted_unique(host);
    }
    return canonical_partition(out);
}

namespace {

std::vector<double> h_grid_candidates(const Measure& eta, double tau) {
    std::vector<double> grid;
    const int steps = static_cast<int>(std::ceil(
                          std::log2(static_cast<double>(eta.eta.size())))) + 1;
    for (double e : eta.eta) {
        if (e <= 0.0) continue;
        double h = e;
        for (int t = 0; t <= steps; ++t, h *= 2.0)
            if (h >= tau - 1e-12 && h <= 1.0 + 1e-12) grid.push_back(std::min(h, 1.0));
    }
    grid.push_back(tau);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-12; }),
               grid.end());
    return grid;
}

struct PipelineHooks {
    bool combine = false;  // run combine_phase after separation
    bool use_h_grid = false;
};

SetFamily mc_round_family(const MulticutInstance& mc, const Measure& eta, double tau,
                          std::uint64_t round_seed, RowPool* pool, long* lp_solves,
                          const PipelineHooks& hooks) {
    std::vector<double> candidates;
    if (hooks.use_h_grid)
        candidates = h_grid_candidates(eta, tau);
    else
        candidates = {tau};

    SetFamily best;
    double best_delta = std::numeric_limits<double>::infinity();
    bool have = false;
    for (double H : candidates) {
        McLpSolution sol = solve_mc_lp(mc, eta, H, pool, lp_solves);
        SetFamily fam = heuristic_separator(sol, mc, eta, H, round_seed);
        if (hooks.combine) fam = combine_phase(fam, mc);
        double worst = 0.0;
        for (const auto& s : fam.sets) worst = std::max(worst, boundary(mc, s));
        if (!have || worst < best_delta - kCostTol) {
            best = std::move(fam);
            best_delta = worst;
            have = true;
        }
    }
    return best;
}

Partition trivial_single_part(int n) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return Partition{{all}};
}

McResult run_mc_pipeline(const MulticutInstance& mc, const McOptions& opts,
                         bool constrained, int fixed_k) {
    const int n = mc.n();
    McResult result;
    McReport& rep = result.report;
    if (mc.pairs().empty() || n == 1) {
        result.partition = trivial_single_part(n);
        rep.best_k = 1;
        rep.best_cost = 0.0;
        return result;
    }

    RowPool pool;
    auto delta = [&](const std::vector<int>& s) { return boundary(mc, s); };
    bool have_best = false;

    const int k_lo = constrained ? fixed_k : (opts.k_override > 0 ? opts.k_override : 1);
    const int k_hi = constrained ? fixed_k : (opts.k_override > 0 ? opts.k_override : n);
    for (int k = k_lo; k <= k_hi; ++k) {
        McKReport kr;
        kr.k = k;
        int round = 0;
        PipelineHooks hooks;
        hooks.combine = constrained;
        hooks.use_h_grid = opts.use_h_grid;
        auto finder = [&](const Measure& eta, double tau) {
            const std::uint64_t rs = derive_seed(opts.seed,
                                                 static_cast<std::uint64_t>(k),
                                                 static_cast<std::uint64_t>(++round));
            return mc_round_family(mc, eta, tau, rs, &pool, &rep.lp_solves, hooks);
        };

        try {
            CoveringStats cstats;
            CoveringConfig cfg;
            cfg.k = k;
            cfg.finder = finder;
            SetFamily family = covering(n, cfg, &cstats);

            double B = 0.0;
            for (const auto& s : family.sets) B = std::max(B, delta(s));

            Partition part;
            AggregateStats astats;
            const std::uint64_t agg_seed =
                derive_seed(opts.seed, 0x1AC, static_cast<std::uint64_t>(k));
            if (constrained) {
                part = aggregate_constrained(family, mc, B, k, agg_seed);
            } else {
                part = aggregate(n, family, B, delta, agg_seed, &astats);
                for (std::size_t i = 1; i < astats.potential.size(); ++i) {
                    const double decrease =
                        astats.potential[i - 1] - astats.potential[i];
                    if (!(decrease > 0.0 && decrease >= 2.0 * B - 1e-6))
                        rep.potential_ok = false;
                }
                kr.step2_iterations = astats.step2_iterations;
            }

            for (const auto& piece : part.parts)
                if (vio(mc, piece) > 0)
                    throw std::logic_error(
                        "solve_multicut: aggregated part violates a pair");
            if (!separates_all_pairs(mc, part))
                throw std::logic_error("solve_multicut: pair left unseparated");

            double worst = 0.0;
            for (const auto& piece : part.parts)
                worst = std::max(worst, delta(piece));

            kr.ran = true;
            kr.rounds = cstats.rounds;
            kr.rounds_bound = cstats.rounds_bound;
            kr.min_coverage = cstats.min_coverage;
            kr.family_size = family.sets.size();
            kr.B = B;
            kr.max_delta = worst;
            kr.part_count = part.parts.size();

            if (!have_best || worst < rep.best_cost - kCostTol) {
                rep.best_cost = worst;
                rep.best_k = k;
                result.partition = canonical_partition(part);
                have_best = true;
            }
        } catch (const McLpInfeasibleError& e) {
            kr.skip_reason = e.what();
        } catch (const CapacityError& e) {
            kr.skip_reason = e.what();
        }
        rep.per_k.push_back(std::move(kr));
    }
    if (!have_best)
        throw std::runtime_error("solve_multicut: every k was infeasible");
    return result;
}

}  // namespace

McResult solve_multicut(const MulticutInstance& mc, const McOptions& opts) {
    return run_mc_pipeline(mc, opts, false, 0);
}

McResult solve_constrained_multicut(const MulticutInstance& mc, int k,
                                    std::uint64_t seed) {
    if (k < 1)
        throw std::invalid_argument("solve_constrained_multicut: k must be >= 1");
    McOptions opts;
    opts.seed = seed;
    return run_mc_pipeline(mc, opts, true, k);
}

double mc_lp_lower_bound(const MulticutInstance& mc) {
    const int n = mc.n();
    if (n <= 1) return 0.0;
    const Measure eta = Measure::uniform(n);
    RowPool pool;
    double best = std::numeric_limits<double>::infinity();
    const int steps = static_cast<int>(std::ceil(std::log2(static_cast<double>(n))));
    for (int t = 0; t <= steps; ++t) {
        const double H = std::pow(0.5, t);
        try {
            best = std::min(best, solve_mc_lp(mc, eta, H, &pool).objective);
        } catch (const McLpInfeasibleError&) {
            // grid point excluded by heavy-vertex pins; skip
        }
    }
    return std::isfinite(best) ? std::max(best, 0.0) : 0.0;
}

}  // namespace mmcc
