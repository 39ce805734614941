#include <doctest.h>

#include <cstring>

#include "mmcc/lp.hpp"
#include "mmcc/metric.hpp"

using namespace mmcc;

TEST_CASE("bound-tight minimization") {
    LpProblem p;
    const int x = p.add_var(0.0, 1.0);
    p.objective = {{x, 1.0}};
    p.add_ge({{x, 1.0}}, 0.4);
    const auto sol = solve(p);
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.values[0] == doctest::Approx(0.4));
    CHECK(sol.objective == doctest::Approx(0.4));
}

TEST_CASE("shared constraint split") {
    LpProblem p;
    const int x = p.add_var();
    const int y = p.add_var();
    p.objective = {{x, 1.0}, {y, 1.0}};
    p.add_ge({{x, 1.0}, {y, 1.0}}, 1.0);
    const auto sol = solve(p);
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.objective == doctest::Approx(1.0));
    CHECK(max_violation(p, sol.values) <= kLpFeasTol);
}

TEST_CASE("maximization via negated objective") {
    LpProblem p;
    const int x = p.add_var(0.0, 1.0);
    p.objective = {{x, -1.0}};
    p.add_le({{x, 1.0}}, 0.3);
    const auto sol = solve(p);
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.objective == doctest::Approx(-0.3));
}

TEST_CASE("infeasible system detected") {
    LpProblem p;
    const int x = p.add_var(0.0, 1.0);
    p.add_ge({{x, 1.0}}, 0.5);
    p.add_le({{x, 1.0}}, 0.3);
    CHECK(solve(p).status == LpStatus::infeasible);

    LpProblem q;
    (void)q.add_var(0.0, 1.0);
    q.add_ge({{0, 1.0}}, 2.0);  // beyond the box
    CHECK(solve(q).status == LpStatus::infeasible);
}

TEST_CASE("equality rows and fixed variables") {
    LpProblem p;
    const int x = p.add_var(0.0, 5.0);
    const int y = p.add_var(0.0, 5.0);
    p.objective = {{y, 1.0}};
    p.add_eq({{x, 1.0}, {y, 1.0}}, 3.0);
    p.set_bounds(x, 2.0, 2.0);
    const auto sol = solve(p);
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.values[x] == doctest::Approx(2.0));
    CHECK(sol.values[y] == doctest::Approx(1.0));
}

TEST_CASE("deterministic solves") {
    LpProblem p;
    for (int i = 0; i < 6; ++i) p.add_var(0.0, 1.0);
    p.objective = {{0, 1.0}, {1, -2.0}, {2, 0.5}, {3, 1.5}, {4, -1.0}, {5, 0.25}};
    p.add_ge({{0, 1.0}, {1, 1.0}, {2, 1.0}}, 1.2);
    p.add_le({{1, 1.0}, {3, 1.0}, {4, 2.0}}, 1.7);
    p.add_eq({{2, 1.0}, {5, -1.0}}, 0.25);
    const auto a = solve(p);
    const auto b = solve(p);
    REQUIRE(a.status == LpStatus::optimal);
    REQUIRE(b.status == LpStatus::optimal);
    CHECK(std::memcmp(a.values.data(), b.values.data(),
                      a.values.size() * sizeof(double)) == 0);
    CHECK(a.objective == b.objective);
}

namespace {

// three-point metric completion problem over d01, d12, d02 with lazy triangles
LpProblem metric3(double d01, double d12) {
    LpProblem p;
    for (int i = 0; i < 3; ++i) p.add_var(0.0, 1.0);
    p.set_bounds(pair_index(3, 0, 1), d01, d01);
    p.set_bounds(pair_index(3, 1, 2), d12, d12);
    p.objective = {{pair_index(3, 0, 2), -1.0}};
    return p;
}

Separator triangle_sep() {
    return [](const std::vector<double>& values) {
        return separate_triangles(values, 3, 0);
    };
}

}  // namespace

TEST_CASE("lazy triangle separation caps the free distance") {
    // forced zeros: the third side collapses
    auto sol = solve_lazy(metric3(0.0, 0.0), triangle_sep());
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.values[pair_index(3, 0, 2)] == doctest::Approx(0.0));

    // one triangle constraint: d02 <= 0.2 + 0.3
    sol = solve_lazy(metric3(0.2, 0.3), triangle_sep());
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.values[pair_index(3, 0, 2)] == doctest::Approx(0.5));
}

TEST_CASE("lazy solve with no violations returns after one round") {
    LpProblem p;
    (void)p.add_var(0.0, 1.0);
    p.objective = {{0, 1.0}};
    int calls = 0;
    const auto sol = solve_lazy(p, [&](const std::vector<double>&) {
        ++calls;
        return std::vector<SeparatedConstraint>{};
    });
    CHECK(sol.status == LpStatus::optimal);
    CHECK(calls == 1);
}

TEST_CASE("lazy solve equals eager solve on the full constraint set") {
    // random-ish dense metric instance, lazy vs eager triangles
    const int n = 5;
    LpProblem base;
    for (int i = 0; i < pair_count(n); ++i) base.add_var(0.0, 1.0);
    // pin some distances, maximize the sum of the rest
    base.set_bounds(pair_index(n, 0, 1), 0.2, 0.2);
    base.set_bounds(pair_index(n, 1, 2), 0.15, 0.15);
    base.set_bounds(pair_index(n, 2, 3), 0.4, 0.4);
    base.set_bounds(pair_index(n, 3, 4), 0.1, 0.1);
    for (int i = 0; i < pair_count(n); ++i) base.objective.push_back({i, -1.0});

    const auto lazy_sol = solve_lazy(base, [&](const std::vector<double>& v) {
        return separate_triangles(v, n, 0);
    });
    REQUIRE(lazy_sol.status == LpStatus::optimal);

    LpProblem eager = base;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = 0; w < n; ++w) {
                if (w == u || w == v) continue;
                eager.constraints.push_back(triangle_row(n, 0, {kRowTriangle, u, v, w}));
            }
    const auto eager_sol = solve(eager);
    REQUIRE(eager_sol.status == LpStatus::optimal);
    CHECK(lazy_sol.objective == doctest::Approx(eager_sol.objective).epsilon(1e-6));
    CHECK(max_violation(eager, lazy_sol.values) <= 1e-6);
}
