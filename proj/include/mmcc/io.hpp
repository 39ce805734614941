#pragma once

// Text formats, instance generators, and the command-line surface.
//
// Formats (ASCII, LF, 0-based ids, '#' starts a comment line):
//   signed graph    sg <n> <m>    then m lines  <u> <v> <+|-> [w]   (w = 1)
//   complete mode   sgc <n>       then one <u> <v> line per negative pair
//   multicut        mc <n> <m> <T>  then m edge lines <u> <v> <w>,
//                                   then T pair lines <s> <t>
//   solution        one part per line (space-separated ids), then a
//                   trailing comment  # max_cost <value>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "mmcc/graph.hpp"

namespace mmcc {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
          line(line_) {}
};

enum class InstanceKind { signed_graph, multicut };

// Reads the first meaningful token to decide which parser applies.
InstanceKind sniff_kind(const std::string& text);

SignedGraph parse_signed(std::istream& in);
SignedGraph parse_signed(const std::string& text);
void write_signed(std::ostream& out, const SignedGraph& g);
std::string write_signed(const SignedGraph& g);

MulticutInstance parse_mc(std::istream& in);
MulticutInstance parse_mc(const std::string& text);
void write_mc(std::ostream& out, const MulticutInstance& mc);
std::string write_mc(const MulticutInstance& mc);

struct SolutionFile {
    Partition partition;
    std::optional<double> max_cost;
};

SolutionFile parse_solution(std::istream& in);
SolutionFile parse_solution(const std::string& text);
void write_solution(std::ostream& out, const Partition& p, double max_cost);

// Generators. Deterministic in the seed.
SignedGraph gen_random_signed(int n, double p, std::uint64_t seed);
SignedGraph gen_planted(int n, int k, double flip, std::uint64_t seed);
MulticutInstance gen_grid_mc(int rows, int cols, int npairs, std::uint64_t seed);

// Command-line entry point. Exit codes: 0 ok, 1 usage or parse error,
// 2 infeasible or iteration/capacity limit.
int run_cli(int argc, const char* const* argv);

}  // namespace mmcc
