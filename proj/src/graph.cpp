#include "mmcc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace mmcc {

namespace {

void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw std::invalid_argument(std::string(what) + ": vertex id " +
                                    std::to_string(v) + " out of range [0," +
                                    std::to_string(n) + ")");
}

}  // namespace

SignedGraph::SignedGraph(int n, std::vector<SignedEdge> edges, bool complete)
    : n_(n), edges_(std::move(edges)), complete_(complete) {
    if (n_ < 0) throw std::invalid_argument("SignedGraph: negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (auto& e : edges_) {
        check_vertex(e.u, n_, "SignedGraph");
        check_vertex(e.v, n_, "SignedGraph");
        if (e.u == e.v)
            throw std::invalid_argument("SignedGraph: self-loop at vertex " +
                                        std::to_string(e.u));
        if (e.weight < 0.0)
            throw std::invalid_argument("SignedGraph: negative edge weight");
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second)
            throw std::invalid_argument("SignedGraph: duplicate edge (" +
                                        std::to_string(key.first) + "," +
                                        std::to_string(key.second) + ")");
        if (e.sign == Sign::negative) ++negative_count_;
    }
    if (complete_) {
        const std::size_t want =
            static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1) / 2;
        if (edges_.size() != want)
            throw std::invalid_argument(
                "SignedGraph: complete flag requires one edge per pair");
        for (const auto& e : edges_)
            if (e.weight != 1.0)
                throw std::invalid_argument(
                    "SignedGraph: complete graphs must be unit-weight");
    }
}

SignedGraph SignedGraph::complete_from_negative_pairs(
    int n, const std::vector<std::pair<int, int>>& negative_pairs) {
    std::set<std::pair<int, int>> neg;
    for (auto [u, v] : negative_pairs) {
        check_vertex(u, n, "SignedGraph");
        check_vertex(v, n, "SignedGraph");
        if (u == v) throw std::invalid_argument("SignedGraph: self-loop pair");
        neg.insert(std::minmax(u, v));
    }
    std::vector<SignedEdge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.push_back({u, v, 1.0,
                             neg.count({u, v}) ? Sign::negative : Sign::positive});
    return SignedGraph(n, std::move(edges), true);
}

MulticutInstance::MulticutInstance(int n, std::vector<Edge> edges,
                                   std::vector<std::pair<int, int>> pairs)
    : n_(n), edges_(std::move(edges)), pairs_(std::move(pairs)) {
    if (n_ < 0) throw std::invalid_argument("MulticutInstance: negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges_) {
        check_vertex(e.u, n_, "MulticutInstance");
        check_vertex(e.v, n_, "MulticutInstance");
        if (e.u == e.v)
            throw std::invalid_argument("MulticutInstance: self-loop edge");
        if (e.weight < 0.0)
            throw std::invalid_argument("MulticutInstance: negative edge weight");
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second)
            throw std::invalid_argument("MulticutInstance: duplicate edge");
    }
    for (const auto& [s, t] : pairs_) {
        check_vertex(s, n_, "MulticutInstance");
        check_vertex(t, n_, "MulticutInstance");
        if (s == t)
            throw std::invalid_argument("MulticutInstance: pair with s == t");
    }
}

Partition canonical_partition(const Partition& p) {
    Partition out;
    out.parts.reserve(p.parts.size());
    for (const auto& part : p.parts) {
        if (part.empty()) continue;
        auto sorted = part;
        std::sort(sorted.begin(), sorted.end());
        out.parts.push_back(std::move(sorted));
    }
    std::sort(out.parts.begin(), out.parts.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

Measure Measure::uniform(int n) {
    if (n <= 0) throw std::invalid_argument("Measure: need at least one vertex");
    Measure m;
    m.eta.assign(static_cast<std::size_t>(n), 1.0 / n);
    return m;
}

Measure Measure::normalized(std::vector<double> weights) {
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0 || !std::isfinite(w))
            throw std::invalid_argument("Measure: weights must be nonnegative");
        total += w;
    }
    if (total <= 0.0)
        throw std::invalid_argument("Measure: total weight must be positive");
    Measure m;
    m.eta = std::move(weights);
    for (double& w : m.eta) w /= total;
    return m;
}

double Measure::mass(const std::vector<int>& vertices) const {
    double total = 0.0;
    for (int v : vertices) total += eta.at(static_cast<std::size_t>(v));
    return total;
}

std::vector<char> member_flags(int n, const std::vector<int>& s) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int v : s) {
        check_vertex(v, n, "vertex set");
        in[static_cast<std::size_t>(v)] = 1;
    }
    return in;
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

double cluster_cost(const SignedGraph& g, const Partition& c, int part_index) {
    if (part_index < 0 || static_cast<std::size_t>(part_index) >= c.parts.size())
        throw std::invalid_argument("cluster_cost: part index out of range");
    return set_disagreement(g, c.parts[static_cast<std::size_t>(part_index)]);
}

double set_disagreement(const SignedGraph& g, const std::vector<int>& s) {
    const auto in = member_flags(g.n(), s);
    double cost = 0.0;
    for (const auto& e : g.edges()) {
        const bool iu = in[static_cast<std::size_t>(e.u)];
        const bool iv = in[static_cast<std::size_t>(e.v)];
        if (e.sign == Sign::negative) {
            if (iu && iv) cost += e.weight;
        } else {
            if (iu != iv) cost += e.weight;
        }
    }
    return cost;
}

double max_disagreement(const SignedGraph& g, const Partition& c) {
    double worst = 0.0;
    for (std::size_t i = 0; i < c.parts.size(); ++i)
        worst = std::max(worst, cluster_cost(g, c, static_cast<int>(i)));
    return worst;
}

double boundary(const MulticutInstance& mc, const std::vector<int>& s) {
    const auto in = member_flags(mc.n(), s);
    double total = 0.0;
    for (const auto& e : mc.edges())
        if (in[static_cast<std::size_t>(e.u)] != in[static_cast<std::size_t>(e.v)])
            total += e.weight;
    return total;
}

int vio(const MulticutInstance& mc, const std::vector<int>& s) {
    const auto in = member_flags(mc.n(), s);
    int count = 0;
    for (const auto& [a, b] : mc.pairs())
        if (in[static_cast<std::size_t>(a)] && in[static_cast<std::size_t>(b)])
            ++count;
    return count;
}

int max_demand(const MulticutInstance& mc) {
    std::vector<int> demand(static_cast<std::size_t>(mc.n()), 0);
    for (const auto& [a, b] : mc.pairs()) {
        ++demand[static_cast<std::size_t>(a)];
        ++demand[static_cast<std::size_t>(b)];
    }
    int worst = 0;
    for (int d : demand) worst = std::max(worst, d);
    return worst;
}

bool separates_all_pairs(const MulticutInstance& mc, const Partition& p) {
    for (const auto& part : p.parts)
        if (vio(mc, part) > 0) return false;
    return true;
}

std::vector<std::string> validate_partition(int n, const Partition& p) {
    std::vector<std::string> errors;
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (const auto& part : p.parts) {
        if (part.empty()) errors.push_back("empty part");
        for (int v : part) {
            if (v < 0 || v >= n) {
                errors.push_back("vertex " + std::to_string(v) + " out of range");
                continue;
            }
            ++count[static_cast<std::size_t>(v)];
        }
    }
    for (int v = 0; v < n; ++v) {
        if (count[static_cast<std::size_t>(v)] == 0)
            errors.push_back("vertex " + std::to_string(v) + " missing");
        else if (count[static_cast<std::size_t>(v)] > 1)
            errors.push_back("vertex " + std::to_string(v) + " appears " +
                             std::to_string(count[static_cast<std::size_t>(v)]) +
                             " times");
    }
    return errors;
}

}  // namespace mmcc
