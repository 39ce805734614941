#include "mmcc/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "mmcc/rng.hpp"

namespace mmcc {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

bool comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// Line-oriented reader that tracks line numbers and skips comments.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-comment, non-blank line split into tokens; nullopt at EOF.
    std::optional<std::vector<std::string>> next() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (comment_or_blank(line)) continue;
            return split_ws(line);
        }
        return std::nullopt;
    }

    int line() const { return line_; }

private:
    std::istream& in_;
    int line_ = 0;
};

int parse_int(const std::string& tok, int line, const char* what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                                   tok + "'");
    }
}

double parse_double(const std::string& tok, int line, const char* what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size() || !std::isfinite(v)) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected number ") + what + ", got '" +
                                   tok + "'");
    }
}

std::string format_weight(double w) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", w);
    return buf;
}

void check_id(int v, int n, int line) {
    if (v < 0 || v >= n)
        throw ParseError(line, "vertex id " + std::to_string(v) +
                                   " out of range [0," + std::to_string(n) + ")");
}

}  // namespace

InstanceKind sniff_kind(const std::string& text) {
    std::istringstream in(text);
    LineReader reader(in);
    auto toks = reader.next();
    if (!toks || toks->empty()) throw ParseError(reader.line(), "empty instance file");
    const std::string& tag = (*toks)[0];
    if (tag == "sg" || tag == "sgc") return InstanceKind::signed_graph;
    if (tag == "mc") return InstanceKind::multicut;
    throw ParseError(reader.line(), "unknown format tag '" + tag + "'");
}

SignedGraph parse_signed(std::istream& in) {
    LineReader reader(in);
    auto header = reader.next();
    if (!header) throw ParseError(reader.line(), "missing header");
    const auto& h = *header;
    if (h[0] == "sgc") {
        if (h.size() != 2)
            throw ParseError(reader.line(), "expected 'sgc <n>'");
        const int n = parse_int(h[1], reader.line(), "n");
        if (n <= 0) throw ParseError(reader.line(), "n must be positive");
        std::vector<std::pair<int, int>> negatives;
        std::set<std::pair<int, int>> seen;
        while (auto toks = reader.next()) {
            if (toks->size() != 2)
                throw ParseError(reader.line(), "expected '<u> <v>' negative pair");
            const int u = parse_int((*toks)[0], reader.line(), "u");
            const int v = parse_int((*toks)[1], reader.line(), "v");
            check_id(u, n, reader.line());
            check_id(v, n, reader.line());
            if (u == v) throw ParseError(reader.line(), "self-loop pair");
            if (!seen.insert(std::minmax(u, v)).second)
                throw ParseError(reader.line(), "duplicate negative pair");
            negatives.push_back({u, v});
        }
        return SignedGraph::complete_from_negative_pairs(n, negatives);
    }
    if (h[0] != "sg" || h.size() != 3)
        throw ParseError(reader.line(), "expected 'sg <n> <m>' header");
    const int n = parse_int(h[1], reader.line(), "n");
    const int m = parse_int(h[2], reader.line(), "m");
    if (n <= 0) throw ParseError(reader.line(), "n must be positive");
    if (m < 0) throw ParseError(reader.line(), "edge count must be nonnegative");
    std::vector<SignedEdge> edges;
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < m; ++i) {
        auto toks = reader.next();
        if (!toks)
            throw ParseError(reader.line(), "expected " + std::to_string(m) +
                                                " edge lines, got " + std::to_string(i));
        if (toks->size() != 3 && toks->size() != 4)
            throw ParseError(reader.line(), "expected '<u> <v> <+|-> [w]'");
        const int u = parse_int((*toks)[0], reader.line(), "u");
        const int v = parse_int((*toks)[1], reader.line(), "v");
        check_id(u, n, reader.line());
        check_id(v, n, reader.line());
        if (u == v) throw ParseError(reader.line(), "self-loop edge");
        if (!seen.insert(std::minmax(u, v)).second)
            throw ParseError(reader.line(), "duplicate edge (" + std::to_string(u) +
                                                "," + std::to_string(v) + ")");
        const std::string& sign = (*toks)[2];
        if (sign != "+" && sign != "-")
            throw ParseError(reader.line(), "edge sign must be '+' or '-'");
        double w = 1.0;
        if (toks->size() == 4) {
            w = parse_double((*toks)[3], reader.line(), "weight");
            if (w < 0.0) throw ParseError(reader.line(), "weight must be nonnegative");
        }
        edges.push_back({u, v, w, sign == "+" ? Sign::positive : Sign::negative});
    }
    if (reader.next())
        throw ParseError(reader.line(), "unexpected content after edge list");
    return SignedGraph(n, std::move(edges), false);
}

SignedGraph parse_signed(const std::string& text) {
    std::istringstream in(text);
    return parse_signed(in);
}

void write_signed(std::ostream& out, const SignedGraph& g) {
    if (g.complete()) {
        out << "sgc " << g.n() << "\n";
        for (const auto& e : g.edges())
            if (e.sign == Sign::negative) out << e.u << " " << e.v << "\n";
        return;
    }
    out << "sg " << g.n() << " " << g.edges().size() << "\n";
    for (const auto& e : g.edges())
        out << e.u << " " << e.v << (e.sign == Sign::positive ? " + " : " - ")
            << format_weight(e.weight) << "\n";
}

std::string write_signed(const SignedGraph& g) {
    std::ostringstream out;
    write_signed(out, g);
    return out.str();
}

MulticutInstance parse_mc(std::istream& in) {
    LineReader reader(in);
    auto header = reader.next();
    if (!header) throw ParseError(reader.line(), "missing header");
    const auto& h = *header;
    if (h[0] != "mc" || h.size() != 4)
        throw ParseError(reader.line(), "expected 'mc <n> <m> <T>' header");
    const int n = parse_int(h[1], reader.line(), "n");
    const int m = parse_int(h[2], reader.line(), "m");
    const int T = parse_int(h[3], reader.line(), "T");
    if (n <= 0) throw ParseError(reader.line(), "n must be positive");
    if (m < 0 || T < 0) throw ParseError(reader.line(), "counts must be nonnegative");
    std::vector<MulticutInstance::Edge> edges;
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < m; ++i) {
        auto toks = reader.next();
        if (!toks) throw ParseError(reader.line(), "missing edge line");
        if (toks->size() != 3)
            throw ParseError(reader.line(), "expected '<u> <v> <w>' edge line");
        const int u = parse_int((*toks)[0], reader.line(), "u");
        const int v = parse_int((*toks)[1], reader.line(), "v");
        check_id(u, n, reader.line());
        check_id(v, n, reader.line());
        if (u == v) throw ParseError(reader.line(), "self-loop edge");
        if (!seen.insert(std::minmax(u, v)).second)
            throw ParseError(reader.line(), "duplicate edge");
        const double w = parse_double((*toks)[2], reader.line(), "weight");
        if (w < 0.0) throw ParseError(reader.line(), "weight must be nonnegative");
        edges.push_back({u, v, w});
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < T; ++i) {
        auto toks = reader.next();
        if (!toks) throw ParseError(reader.line(), "missing pair line");
        if (toks->size() != 2)
            throw ParseError(reader.line(), "expected '<s> <t>' pair line");
        const int s = parse_int((*toks)[0], reader.line(), "s");
        const int t = parse_int((*toks)[1], reader.line(), "t");
        check_id(s, n, reader.line());
        check_id(t, n, reader.line());
        if (s == t) throw ParseError(reader.line(), "pair with s == t");
        pairs.push_back({s, t});
    }
    if (reader.next())
        throw ParseError(reader.line(), "unexpected content after pair list");
    return MulticutInstance(n, std::move(edges), std::move(pairs));
}

MulticutInstance parse_mc(const std::string& text) {
    std::istringstream in(text);
    return parse_mc(in);
}

void write_mc(std::ostream& out, const MulticutInstance& mc) {
    out << "mc " << mc.n() << " " << mc.edges().size() << " " << mc.pairs().size()
        << "\n";
    for (const auto& e : mc.edges())
        out << e.u << " " << e.v << " " << format_weight(e.weight) << "\n";
    for (const auto& [s, t] : mc.pairs()) out << s << " " << t << "\n";
}

std::string write_mc(const MulticutInstance& mc) {
    std::ostringstream out;
    write_mc(out, mc);
    return out.str();
}

SolutionFile parse_solution(std::istream& in) {
    SolutionFile sol;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = split_ws(line);
        if (!toks.empty() && toks[0] == "#") {
            if (toks.size() == 3 && toks[1] == "max_cost")
                sol.max_cost = parse_double(toks[2], line_no, "max_cost");
            continue;
        }
        if (comment_or_blank(line)) continue;
        std::vector<int> part;
        for (const auto& tok : toks)
            part.push_back(parse_int(tok, line_no, "vertex id"));
        sol.partition.parts.push_back(std::move(part));
    }
    return sol;
}

SolutionFile parse_solution(const std::string& text) {
    std::istringstream in(text);
    return parse_solution(in);
}

void write_solution(std::ostream& out, const Partition& p, double max_cost) {
    for (const auto& part : p.parts) {
        for (std::size_t i = 0; i < part.size(); ++i)
            out << (i ? " " : "") << part[i];
        out << "\n";
    }
    out << "# max_cost " << format_weight(max_cost) << "\n";
}

SignedGraph gen_random_signed(int n, double p, std::uint64_t seed) {
    if (n <= 0) throw std::invalid_argument("gen_random_signed: n must be positive");
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("gen_random_signed: p must lie in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> negatives;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform01(rng) < p) negatives.push_back({u, v});
    return SignedGraph::complete_from_negative_pairs(n, negatives);
}

SignedGraph gen_planted(int n, int k, double flip, std::uint64_t seed) {
    if (n <= 0 || k <= 0 || k > n)
        throw std::invalid_argument("gen_planted: need 1 <= k <= n");
    if (flip < 0.0 || flip > 1.0)
        throw std::invalid_argument("gen_planted: flip must lie in [0,1]");
    std::mt19937_64 rng(seed);
    // Balanced contiguous ground-truth blocks.
    auto block = [&](int v) { return static_cast<int>((static_cast<long>(v) * k) / n); };
    std::vector<std::pair<int, int>> negatives;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool negative = block(u) != block(v);
            if (uniform01(rng) < flip) negative = !negative;
            if (negative) negatives.push_back({u, v});
        }
    }
    return SignedGraph::complete_from_negative_pairs(n, negatives);
}

MulticutInstance gen_grid_mc(int rows, int cols, int npairs, std::uint64_t seed) {
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("gen_grid_mc: grid dimensions must be positive");
    const int n = rows * cols;
    const long max_pairs = static_cast<long>(n) * (n - 1) / 2;
    if (npairs < 0 || npairs > max_pairs)
        throw std::invalid_argument("gen_grid_mc: npairs out of range");
    std::vector<MulticutInstance::Edge> edges;
    auto id = [&](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), 1.0});
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), 1.0});
        }
    }
    std::mt19937_64 rng(seed);
    std::set<std::pair<int, int>> chosen;
    std::vector<std::pair<int, int>> pairs;
    while (static_cast<int>(pairs.size()) < npairs) {
        const int s = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
        const int t = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
        if (s == t) continue;
        if (!chosen.insert(std::minmax(s, t)).second) continue;
        pairs.push_back({s, t});
    }
    return MulticutInstance(n, std::move(edges), std::move(pairs));
}

}  // namespace mmcc
