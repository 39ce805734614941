#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mmcc/bench.hpp"
#include "mmcc/io.hpp"
#include "mmcc/oracle.hpp"

using namespace mmcc;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content = "") {
        path = "mmcc_test_" + name;
        if (!content.empty()) {
            std::ofstream out(path, std::ios::binary);
            out << content;
        }
    }
    ~TempFile() { std::remove(path.c_str()); }
    std::string read() const {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
};

int cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv = {"mmcc"};
    argv.insert(argv.end(), args.begin(), args.end());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("signed graph parsing") {
    const auto g = parse_signed("sg 2 1\n0 1 + 2.5\n");
    CHECK(g.n() == 2);
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges()[0].weight == doctest::Approx(2.5));

    // weight defaults to 1
    const auto g1 = parse_signed("sg 2 1\n0 1 -\n");
    CHECK(g1.edges()[0].sign == Sign::negative);
    CHECK(g1.edges()[0].weight == doctest::Approx(1.0));

    // complete mode expands the negative list against a positive background
    const auto k3 = parse_signed("sgc 3\n1 2\n");
    CHECK(k3.complete());
    CHECK(k3.negative_count() == 1);
    CHECK(k3.edges().size() == 3);

    // comments and blank lines are ignored
    const auto g2 = parse_signed("# header comment\nsg 2 1\n\n# mid comment\n0 1 +\n");
    CHECK(g2.edges().size() == 1);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_signed("sg 3 2\n0 1 +\n0 1 -\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }
    try {
        parse_signed("sg 2 1\n0 5 +\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_signed("sg 2 1\n0 1 * 1\n"), ParseError);
    CHECK_THROWS_AS(parse_signed("bogus\n"), ParseError);
    CHECK_THROWS_AS(parse_mc("mc 2 1 0\n0 1\n"), ParseError);
}

TEST_CASE("round trips") {
    const auto sparse = parse_signed("sg 4 3\n0 1 + 1\n1 2 - 0.25\n2 3 + 3.5\n");
    CHECK(write_signed(parse_signed(write_signed(sparse))) == write_signed(sparse));

    const auto complete = gen_random_signed(5, 0.4, 77);
    CHECK(write_signed(parse_signed(write_signed(complete))) ==
          write_signed(complete));

    const auto mc = gen_grid_mc(2, 3, 2, 5);
    CHECK(write_mc(parse_mc(write_mc(mc))) == write_mc(mc));

    std::ostringstream sol;
    write_solution(sol, Partition{{{0, 2}, {1}}}, 3.25);
    const auto parsed = parse_solution(sol.str());
    REQUIRE(parsed.partition.parts.size() == 2);
    CHECK(parsed.partition.parts[0] == std::vector<int>{0, 2});
    REQUIRE(parsed.max_cost.has_value());
    CHECK(*parsed.max_cost == doctest::Approx(3.25));
}

TEST_CASE("generators") {
    // no flips: the planted blocks are an exact zero-cost clustering
    const auto planted = gen_planted(6, 2, 0.0, 1);
    CHECK(exact_cc(planted).value == doctest::Approx(0.0));

    const auto all_pos = gen_random_signed(4, 0.0, 1);
    CHECK(all_pos.negative_count() == 0);

    const auto grid = gen_grid_mc(2, 2, 1, 9);
    CHECK(grid.n() == 4);
    CHECK(grid.edges().size() == 4);
    CHECK(grid.pairs().size() == 1);

    // determinism in the seed
    CHECK(write_signed(gen_planted(6, 2, 0.3, 5)) ==
          write_signed(gen_planted(6, 2, 0.3, 5)));
    CHECK(write_signed(gen_planted(6, 2, 0.3, 5)) !=
          write_signed(gen_planted(6, 2, 0.3, 6)));
}

TEST_CASE("cli solve, verify, exact") {
    TempFile instance("k3.sg", "sgc 3\n1 2\n");
    TempFile solution("k3.sol");
    CHECK(cli({"solve", "cc", "--input", instance.path.c_str(), "--seed", "3",
               "--out", solution.path.c_str()}) == 0);
    CHECK(cli({"verify", "--instance", instance.path.c_str(), "--solution",
               solution.path.c_str()}) == 0);

    // tampered solution fails verification
    TempFile bad("k3.bad", "0\n0 1 2\n# max_cost 0\n");
    CHECK(cli({"verify", "--instance", instance.path.c_str(), "--solution",
               bad.path.c_str()}) == 1);

    TempFile mc_instance("pair.mc", "mc 2 1 1\n0 1 1\n0 1\n");
    TempFile mc_solution("pair.sol");
    CHECK(cli({"solve", "mc", "--input", mc_instance.path.c_str(), "--seed", "1",
               "--out", mc_solution.path.c_str()}) == 0);
    CHECK(cli({"verify", "--instance", mc_instance.path.c_str(), "--solution",
               mc_solution.path.c_str()}) == 0);

    CHECK(cli({"exact", "cc", "--input", instance.path.c_str()}) == 0);
    CHECK(cli({"exact", "mc", "--input", mc_instance.path.c_str()}) == 0);
}

TEST_CASE("cli reduce and generate") {
    TempFile instance("red.sg", "sgc 3\n1 2\n");
    TempFile reduced("red.mc");
    CHECK(cli({"reduce", "--input", instance.path.c_str(), "--out",
               reduced.path.c_str()}) == 0);
    const auto mc = parse_mc(reduced.read());
    CHECK(mc.n() == 4);
    CHECK(mc.pairs().size() == 1);

    TempFile gen_out("gen.sg");
    CHECK(cli({"gen", "planted", "6", "2", "0.2", "--seed", "4", "--out",
               gen_out.path.c_str()}) == 0);
    CHECK(parse_signed(gen_out.read()).n() == 6);

    // usage errors exit 1
    CHECK(cli({"gen", "bogus-kind", "1", "--out", gen_out.path.c_str()}) == 1);
    CHECK(cli({"solve", "cc"}) == 1);
    TempFile broken("broken.sg", "sg 2 1\n0 1 *\n");
    TempFile sink("sink.sol");
    CHECK(cli({"solve", "cc", "--input", broken.path.c_str(), "--out",
               sink.path.c_str()}) == 1);
}

TEST_CASE("cli solve cc routes general graphs through the reduction") {
    TempFile instance("gen.sg", "sg 3 3\n0 1 + 2\n0 2 + 2\n1 2 - 1\n");
    TempFile solution("gen.sol");
    CHECK(cli({"solve", "cc", "--input", instance.path.c_str(), "--seed", "5",
               "--out", solution.path.c_str()}) == 0);
    CHECK(cli({"verify", "--instance", instance.path.c_str(), "--solution",
               solution.path.c_str()}) == 0);
}

TEST_CASE("bench csv is deterministic and oracle-gated") {
    std::vector<BenchRow> rows;
    auto cases = cc_suite(42);
    REQUIRE(cases.size() == 200);
    // spot-run two cases end to end
    rows.push_back(run_cc_case(cases[0]));
    rows.push_back(run_cc_case(cases[1]));
    const auto csv1 = bench_csv(rows);
    const auto csv2 = bench_csv({run_cc_case(cases[0]), run_cc_case(cases[1])});
    CHECK(csv1 == csv2);
    for (const auto& row : rows) {
        REQUIRE(row.oracle_opt.has_value());
        CHECK(row.heuristic_cost <= 14.0 * *row.oracle_opt + 1e-6);
        CHECK(row.lp_lower_bound <= *row.oracle_opt + 1e-6);
    }

    const auto mc_cases = mc_suite(42);
    REQUIRE(mc_cases.size() == 100);
    const auto row = run_mc_case(mc_cases.front());
    REQUIRE(row.oracle_opt.has_value());
    CHECK(row.heuristic_cost >= *row.oracle_opt - 1e-9);
}
