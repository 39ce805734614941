#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mmcc/bench.hpp"
#include "mmcc/cc_complete.hpp"
#include "mmcc/io.hpp"
#include "mmcc/multicut.hpp"
#include "mmcc/oracle.hpp"
#include "mmcc/reduce.hpp"

namespace mmcc {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

void print_partition(std::ostream& out, const Partition& p) {
    for (const auto& part : p.parts) {
        for (std::size_t i = 0; i < part.size(); ++i)
            out << (i ? " " : "") << part[i];
        out << "\n";
    }
}

int cmd_solve_cc(const std::string& input, std::uint64_t seed, int k,
                 const std::string& out_path) {
    const std::string text = read_file(input);
    const SignedGraph g = parse_signed(text);
    Partition clustering;
    if (g.complete()) {
        CcOptions opts;
        opts.seed = seed;
        opts.k_override = k;
        const CcResult res = solve_cc_complete(g, opts);
        clustering = res.clustering;
        std::cout << "route complete-lp best_k " << res.report.best_k
                  << " lp_solves " << res.report.lp_solves << "\n";
    } else {
        // General graphs go through the multicut reduction; the heuristic
        // separator carries no approximation guarantee on this route.
        auto [mc, rm] = cc_to_multicut(g);
        McOptions opts;
        opts.seed = seed;
        opts.k_override = k;
        const McResult res = solve_multicut(mc, opts);
        clustering = canonical_partition(partition_to_clustering(rm, res.partition));
        std::cout << "route reduction-multicut best_k " << res.report.best_k
                  << " lp_solves " << res.report.lp_solves << "\n";
    }
    const double cost = max_disagreement(g, clustering);
    std::ostringstream out;
    write_solution(out, clustering, cost);
    write_file(out_path, out.str());
    std::cout << "max_disagreement " << cost << "\n";
    return 0;
}

int cmd_solve_mc(const std::string& input, std::uint64_t seed, int k,
                 bool constrained, const std::string& out_path) {
    const MulticutInstance mc = parse_mc(read_file(input));
    McResult res;
    if (constrained) {
        if (k <= 0) throw std::invalid_argument("--constrained requires --k");
        res = solve_constrained_multicut(mc, k, seed);
    } else {
        McOptions opts;
        opts.seed = seed;
        opts.k_override = k;
        res = solve_multicut(mc, opts);
    }
    double cost = 0.0;
    for (const auto& part : res.partition.parts)
        cost = std::max(cost, boundary(mc, part));
    std::ostringstream out;
    write_solution(out, res.partition, cost);
    write_file(out_path, out.str());
    std::cout << "max_delta " << cost << " parts " << res.partition.parts.size()
              << "\n";
    return 0;
}

int cmd_exact(const std::string& mode, const std::string& input) {
    const std::string text = read_file(input);
    if (mode == "cc") {
        const SignedGraph g = parse_signed(text);
        const auto res = exact_cc(g);
        std::cout << "OPT " << res.value << "\n";
        print_partition(std::cout, canonical_partition(res.best));
    } else {
        const MulticutInstance mc = parse_mc(text);
        const auto res = exact_multicut(mc);
        std::cout << "OPT " << res.value << "\n";
        print_partition(std::cout, canonical_partition(res.best));
    }
    return 0;
}

int cmd_reduce(const std::string& input, const std::string& out_path) {
    const SignedGraph g = parse_signed(read_file(input));
    auto [mc, rm] = cc_to_multicut(g);
    write_file(out_path, write_mc(mc));
    std::cout << "vertices " << mc.n() << " pairs " << mc.pairs().size() << "\n";
    return 0;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path) {
    const std::string text = read_file(instance_path);
    const SolutionFile sol = parse_solution(read_file(solution_path));
    const InstanceKind kind = sniff_kind(text);
    int n = 0;
    double cost = 0.0;
    std::vector<std::string> errors;
    if (kind == InstanceKind::signed_graph) {
        const SignedGraph g = parse_signed(text);
        n = g.n();
        errors = validate_partition(n, sol.partition);
        if (errors.empty()) cost = max_disagreement(g, sol.partition);
    } else {
        const MulticutInstance mc = parse_mc(text);
        n = mc.n();
        errors = validate_partition(n, sol.partition);
        if (errors.empty()) {
            for (const auto& part : sol.partition.parts) {
                if (vio(mc, part) > 0)
                    errors.push_back("part contains both endpoints of a pair");
                cost = std::max(cost, boundary(mc, part));
            }
        }
    }
    if (errors.empty() && sol.max_cost &&
        std::abs(*sol.max_cost - cost) > 1e-6)
        errors.push_back("recorded max_cost " + std::to_string(*sol.max_cost) +
                         " does not match recomputed " + std::to_string(cost));
    if (!errors.empty()) {
        for (const auto& e : errors) std::cout << "invalid: " << e << "\n";
        return 1;
    }
    std::cout << "valid max_cost " << cost << "\n";
    return 0;
}

int cmd_gen(const std::string& kind, const std::vector<std::string>& params,
            std::uint64_t seed, const std::string& out_path) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw std::invalid_argument("gen " + kind + ": expected " +
                                        std::to_string(count) + " parameters");
    };
    std::string payload;
    if (kind == "random-signed") {
        need(2);
        payload = write_signed(
            gen_random_signed(std::stoi(params[0]), std::stod(params[1]), seed));
    } else if (kind == "planted") {
        need(3);
        payload = write_signed(gen_planted(std::stoi(params[0]), std::stoi(params[1]),
                                           std::stod(params[2]), seed));
    } else if (kind == "grid-mc") {
        need(3);
        payload = write_mc(gen_grid_mc(std::stoi(params[0]), std::stoi(params[1]),
                                       std::stoi(params[2]), seed));
    } else {
        throw std::invalid_argument("unknown generator kind '" + kind + "'");
    }
    write_file(out_path, payload);
    return 0;
}

int cmd_bench(const std::string& suite, std::uint64_t seed, const std::string& csv_path,
              int limit) {
    std::vector<BenchRow> rows;
    const auto t0 = std::chrono::steady_clock::now();
    auto clock_ms = [](auto start) {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
            .count();
    };
    if (suite == "small-cc") {
        auto cases = cc_suite(seed);
        if (limit > 0 && static_cast<std::size_t>(limit) < cases.size())
            cases.erase(cases.begin() + limit, cases.end());
        for (const auto& c : cases) {
            const auto start = std::chrono::steady_clock::now();
            BenchRow row = run_cc_case(c);
            row.wall_ms = clock_ms(start);
            std::cerr << "cc " << c.kind << " n=" << c.n << " seed=" << c.seed
                      << " cost=" << row.heuristic_cost << " wall_ms=" << row.wall_ms
                      << "\n";
            rows.push_back(std::move(row));
        }
    } else if (suite == "small-mc") {
        auto cases = mc_suite(seed);
        if (limit > 0 && static_cast<std::size_t>(limit) < cases.size())
            cases.erase(cases.begin() + limit, cases.end());
        for (const auto& c : cases) {
            const auto start = std::chrono::steady_clock::now();
            BenchRow row = run_mc_case(c);
            row.wall_ms = clock_ms(start);
            std::cerr << "mc grid " << c.rows << "x" << c.cols << " pairs=" << c.npairs
                      << " seed=" << c.seed << " cost=" << row.heuristic_cost
                      << " wall_ms=" << row.wall_ms << "\n";
            rows.push_back(std::move(row));
        }
    } else {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    write_file(csv_path, bench_csv(rows));
    std::cerr << "total wall_ms " << clock_ms(t0) << "\n";
    std::cout << "instances " << rows.size() << " csv " << csv_path << "\n";
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"min-max correlation clustering and multicut toolkit"};
    app.require_subcommand(1);

    std::string input, output, instance_path, solution_path, csv_path;
    std::uint64_t seed = 1;
    int k = 0;
    bool constrained = false;

    auto* solve = app.add_subcommand("solve", "run a solver");
    solve->require_subcommand(1);
    auto* solve_cc = solve->add_subcommand("cc", "min-max correlation clustering");
    solve_cc->add_option("--input", input)->required();
    solve_cc->add_option("--seed", seed);
    solve_cc->add_option("--k", k);
    solve_cc->add_option("--out", output)->required();
    auto* solve_mc = solve->add_subcommand("mc", "min-max multicut");
    solve_mc->add_option("--input", input)->required();
    solve_mc->add_option("--seed", seed);
    solve_mc->add_option("--k", k);
    solve_mc->add_flag("--constrained", constrained);
    solve_mc->add_option("--out", output)->required();

    auto* exact = app.add_subcommand("exact", "exhaustive oracle");
    exact->require_subcommand(1);
    auto* exact_cc_cmd = exact->add_subcommand("cc");
    exact_cc_cmd->add_option("--input", input)->required();
    auto* exact_mc_cmd = exact->add_subcommand("mc");
    exact_mc_cmd->add_option("--input", input)->required();

    auto* reduce = app.add_subcommand("reduce", "correlation clustering to multicut");
    reduce->add_option("--input", input)->required();
    reduce->add_option("--out", output)->required();

    auto* verify = app.add_subcommand("verify", "check a solution file");
    verify->add_option("--instance", instance_path)->required();
    verify->add_option("--solution", solution_path)->required();

    std::string gen_kind;
    std::vector<std::string> gen_params;
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("kind", gen_kind)->required();
    gen->add_option("params", gen_params);
    gen->add_option("--seed", seed);
    gen->add_option("--out", output)->required();

    std::string suite;
    int limit = 0;
    auto* bench = app.add_subcommand("bench", "run a benchmark suite");
    bench->add_option("--suite", suite)->required()
        ->check(CLI::IsMember({"small-cc", "small-mc"}));
    bench->add_option("--seed", seed);
    bench->add_option("--csv", csv_path)->required();
    bench->add_option("--limit", limit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve_cc->parsed()) return cmd_solve_cc(input, seed, k, output);
        if (solve_mc->parsed()) return cmd_solve_mc(input, seed, k, constrained, output);
        if (exact_cc_cmd->parsed()) return cmd_exact("cc", input);
        if (exact_mc_cmd->parsed()) return cmd_exact("mc", input);
        if (reduce->parsed()) return cmd_reduce(input, output);
        if (verify->parsed()) return cmd_verify(instance_path, solution_path);
        if (gen->parsed()) return cmd_gen(gen_kind, gen_params, seed, output);
        if (bench->parsed()) return cmd_bench(suite, seed, csv_path, limit);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

}  // namespace mmcc
