#include "mmcc/bench.hpp"

#include <cstdio>
#include <sstream>

#include "mmcc/cc_complete.hpp"
#include "mmcc/io.hpp"
#include "mmcc/multicut.hpp"
#include "mmcc/oracle.hpp"
#include "mmcc/rng.hpp"

namespace mmcc {

namespace {
constexpr int kOracleLimit = 12;

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}
}  // namespace

std::vector<CcBenchCase> cc_suite(std::uint64_t base_seed) {
    static const double kProbs[3] = {0.2, 0.5, 0.8};
    std::vector<CcBenchCase> cases;
    cases.reserve(200);
    for (int i = 0; i < 200; ++i) {
        const int n = 5 + (i % 4);
        const double p = kProbs[(i / 4) % 3];
        const bool planted = ((i / 12) % 2) == 1;
        const std::uint64_t seed = derive_seed(base_seed, 0xCC5E, static_cast<std::uint64_t>(i));
        if (planted) {
            const int k = 2 + ((i / 24) % 2);
            cases.push_back({"planted", n, p, seed, gen_planted(n, k, p, seed)});
        } else {
            cases.push_back({"random-signed", n, p, seed, gen_random_signed(n, p, seed)});
        }
    }
    return cases;
}

std::vector<McBenchCase> mc_suite(std::uint64_t base_seed) {
    struct GridSpec {
        int rows, cols, count;
    };
    static const GridSpec kGrids[] = {{2, 2, 28}, {2, 3, 28}, {3, 3, 24},
                                      {3, 4, 12}, {4, 4, 8}};
    std::vector<McBenchCase> cases;
    cases.reserve(100);
    int i = 0;
    for (const auto& spec : kGrids) {
        for (int c = 0; c < spec.count; ++c, ++i) {
            const int npairs = 1 + (i % 4);
            const std::uint64_t seed =
                derive_seed(base_seed, 0x3C5E, static_cast<std::uint64_t>(i));
            cases.push_back({spec.rows, spec.cols, npairs, seed,
                             gen_grid_mc(spec.rows, spec.cols, npairs, seed)});
        }
    }
    return cases;
}

BenchRow run_cc_case(const CcBenchCase& c) {
    BenchRow row;
    row.kind = c.kind;
    row.n = c.n;
    row.seed = c.seed;
    CcOptions opts;
    opts.seed = c.seed;
    const CcResult res = solve_cc_complete(c.graph, opts);
    row.heuristic_cost = res.report.best_cost;
    row.lp_lower_bound = cc_lp_lower_bound(c.graph);
    if (c.n <= kOracleLimit) {
        const double opt = exact_cc(c.graph).value;
        row.oracle_opt = opt;
        if (opt > kCostTol) row.ratio = row.heuristic_cost / opt;
        else if (row.heuristic_cost <= kCostTol) row.ratio = 1.0;
    }
    return row;
}

BenchRow run_mc_case(const McBenchCase& c) {
    BenchRow row;
    row.kind = "grid-mc";
    row.n = c.instance.n();
    row.seed = c.seed;
    McOptions opts;
    opts.seed = c.seed;
    const McResult res = solve_multicut(c.instance, opts);
    row.heuristic_cost = res.report.best_cost;
    row.lp_lower_bound = mc_lp_lower_bound(c.instance);
    if (row.n <= kOracleLimit) {
        const double opt = exact_multicut(c.instance).value;
        row.oracle_opt = opt;
        if (opt > kCostTol) row.ratio = row.heuristic_cost / opt;
        else if (row.heuristic_cost <= kCostTol) row.ratio = 1.0;
    }
    return row;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "kind,n,seed,heuristic_cost,oracle_opt,ratio,lp_lower_bound\n";
    for (const auto& r : rows) {
        out << r.kind << "," << r.n << "," << r.seed << ","
            << format_value(r.heuristic_cost) << ",";
        if (r.oracle_opt) out << format_value(*r.oracle_opt);
        out << ",";
        if (r.ratio) out << format_value(*r.ratio);
        out << "," << format_value(r.lp_lower_bound) << "\n";
    }
    return out.str();
}

}  // namespace mmcc
