#pragma once

// Instance and solution types for min-max correlation clustering and
// min-max multicut, plus all cost accounting (disagreement, cut weight,
// pair violations, demand). Everything here is an immutable value after
// construction and safe to share across threads read-only.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mmcc {

// Single absolute tolerance for all cost comparisons in the library.
inline constexpr double kCostTol = 1e-9;

enum class Sign : std::uint8_t { positive, negative };

struct SignedEdge {
    int u = 0;
    int v = 0;
    double weight = 1.0;
    Sign sign = Sign::positive;
};

// Vertices 0..n-1 with +/- labeled weighted edges. `complete` means every
// unordered pair carries exactly one unit-weight edge.
class SignedGraph {
public:
    SignedGraph(int n, std::vector<SignedEdge> edges, bool complete = false);

    // Builds the complete unit-weight graph on n vertices where exactly the
    // listed pairs are negative and every other pair is positive.
    static SignedGraph complete_from_negative_pairs(
        int n, const std::vector<std::pair<int, int>>& negative_pairs);

    int n() const { return n_; }
    const std::vector<SignedEdge>& edges() const { return edges_; }
    bool complete() const { return complete_; }
    int negative_count() const { return negative_count_; }

private:
    int n_ = 0;
    std::vector<SignedEdge> edges_;
    bool complete_ = false;
    int negative_count_ = 0;
};

class MulticutInstance {
public:
    struct Edge {
        int u = 0;
        int v = 0;
        double weight = 1.0;
    };

    MulticutInstance(int n, std::vector<Edge> edges,
                     std::vector<std::pair<int, int>> pairs);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::pair<int, int>> pairs_;
};

// A family of disjoint nonempty vertex sets covering V. Parts keep their
// construction order; vertices inside a part are sorted ascending.
struct Partition {
    std::vector<std::vector<int>> parts;
};

// Canonical form: vertices sorted inside parts, parts ordered by smallest
// member. Used for comparisons and text output.
Partition canonical_partition(const Partition& p);

// Per-vertex nonnegative weights with total mass 1.
struct Measure {
    std::vector<double> eta;

    static Measure uniform(int n);
    // Scales nonnegative weights to total 1; rejects negatives and zero sum.
    static Measure normalized(std::vector<double> weights);

    double mass(const std::vector<int>& vertices) const;
};

// Multiset of vertex subsets; members may overlap across the family.
struct SetFamily {
    std::vector<std::vector<int>> sets;
};

// --- cost accounting ------------------------------------------------------

// Disagreement of part `part_index` of clustering `c`: weight of negative
// edges inside the part plus positive edges with exactly one endpoint in it.
double cluster_cost(const SignedGraph& g, const Partition& c, int part_index);

// Same disagreement for a standalone vertex set (independent of how the
// remaining vertices are grouped).
double set_disagreement(const SignedGraph& g, const std::vector<int>& s);

double max_disagreement(const SignedGraph& g, const Partition& c);

// Total weight of edges with exactly one endpoint in s.
double boundary(const MulticutInstance& mc, const std::vector<int>& s);

// Number of source-sink pairs with both endpoints in s.
int vio(const MulticutInstance& mc, const std::vector<int>& s);

// Maximum over vertices of the number of pairs containing the vertex.
int max_demand(const MulticutInstance& mc);

// True when no part of p contains both endpoints of any pair.
bool separates_all_pairs(const MulticutInstance& mc, const Partition& p);

// Empty result means p is a valid partition of {0..n-1}; otherwise one
// message per missing, duplicated, or out-of-range vertex.
std::vector<std::string> validate_partition(int n, const Partition& p);

// --- small shared helpers -------------------------------------------------

// Membership flags for a vertex set. Throws on out-of-range ids.
std::vector<char> member_flags(int n, const std::vector<int>& s);

std::vector<int> sorted_unique(std::vector<int> v);

}  // namespace mmcc
