#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "mmcc/oracle.hpp"
#include "mmcc/reduce.hpp"

using namespace mmcc;

namespace {

SignedGraph k3_one_negative() {
    return SignedGraph::complete_from_negative_pairs(3, {{1, 2}});
}

double max_delta(const MulticutInstance& mc, const Partition& p) {
    double worst = 0.0;
    for (const auto& part : p.parts) worst = std::max(worst, boundary(mc, part));
    return worst;
}

SignedGraph graph_from_mask(int n, std::uint32_t mask) {
    std::vector<std::pair<int, int>> neg;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask & (1u << bit)) neg.push_back({u, v});
    return SignedGraph::complete_from_negative_pairs(n, neg);
}

}  // namespace

TEST_CASE("reduction construction") {
    // all-positive graphs map to themselves with no pairs
    const auto all_pos = SignedGraph::complete_from_negative_pairs(3, {});
    auto [mc0, rm0] = cc_to_multicut(all_pos);
    CHECK(mc0.n() == 3);
    CHECK(mc0.pairs().empty());
    CHECK(mc0.edges().size() == 3);

    // single negative edge becomes an attached vertex plus one pair
    const SignedGraph single(2, {{0, 1, 1.0, Sign::negative}});
    auto [mc1, rm1] = cc_to_multicut(single);
    CHECK(mc1.n() == 3);
    REQUIRE(mc1.edges().size() == 1);
    CHECK(mc1.edges()[0].u == 0);
    CHECK(mc1.edges()[0].v == 2);
    REQUIRE(mc1.pairs().size() == 1);
    CHECK(mc1.pairs()[0] == std::pair<int, int>{1, 2});

    const auto k3 = k3_one_negative();
    auto [mc2, rm2] = cc_to_multicut(k3);
    CHECK(mc2.n() == 4);
    CHECK(mc2.pairs().size() == 1);
    CHECK(mc2.pairs()[0] == std::pair<int, int>{2, 3});
    CHECK(exact_multicut(mc2).value == doctest::Approx(exact_cc(k3).value));
}

TEST_CASE("partition_to_clustering restriction") {
    const auto k3 = k3_one_negative();
    auto [mc, rm] = cc_to_multicut(k3);
    const auto c = partition_to_clustering(rm, Partition{{{0, 1, 3}, {2}}});
    REQUIRE(c.parts.size() == 2);
    CHECK(c.parts[0] == std::vector<int>{0, 1});
    CHECK(c.parts[1] == std::vector<int>{2});
    // all singletons restrict to original singletons
    const auto s = partition_to_clustering(rm, Partition{{{0}, {1}, {2}, {3}}});
    CHECK(s.parts.size() == 3);
}

TEST_CASE("clustering_to_partition mirrors the construction") {
    const auto k3 = k3_one_negative();
    auto [mc, rm] = cc_to_multicut(k3);
    // crossing negative edge: the auxiliary vertex follows endpoint u = 1
    auto p = clustering_to_partition(k3, rm, Partition{{{0, 1}, {2}}});
    CHECK(canonical_partition(p).parts == Partition{{{0, 1, 3}, {2}}}.parts);
    // interior negative edge: the auxiliary vertex stays a singleton
    p = clustering_to_partition(k3, rm, Partition{{{0, 1, 2}}});
    CHECK(canonical_partition(p).parts == Partition{{{0, 1, 2}, {3}}}.parts);
    // all-positive graphs map through unchanged
    const auto all_pos = SignedGraph::complete_from_negative_pairs(3, {});
    auto [mcp, rmp] = cc_to_multicut(all_pos);
    p = clustering_to_partition(all_pos, rmp, Partition{{{0, 2}, {1}}});
    CHECK(canonical_partition(p).parts == Partition{{{0, 2}, {1}}}.parts);
}

TEST_CASE("lifted partitions always separate the pairs and preserve cost") {
    // every clustering of every n=4 sign pattern lifts to a partition with
    // the same max cost and all pairs separated
    for (std::uint32_t mask = 0; mask < 64; mask += 5) {
        const auto g = graph_from_mask(4, mask);
        auto [mc, rm] = cc_to_multicut(g);
        enumerate_partitions(4, [&](const Partition& c) {
            const auto p = clustering_to_partition(g, rm, c);
            CHECK(validate_partition(mc.n(), p).empty());
            CHECK(separates_all_pairs(mc, p));
            CHECK(max_delta(mc, p) == doctest::Approx(max_disagreement(g, c)));
            return true;
        });
    }
}

TEST_CASE("restricted clusters never cost more than their parts") {
    // Every pair-separating partition of the reduced instance restricts to a
    // clustering whose per-cluster cost is bounded by the part boundary.
    const auto g = graph_from_mask(4, 0b001011);
    auto [mc, rm] = cc_to_multicut(g);
    enumerate_partitions(mc.n(), [&](const Partition& p) {
        if (!separates_all_pairs(mc, p)) return true;
        for (const auto& part : p.parts) {
            std::vector<int> original;
            for (int v : part)
                if (v < rm.original_n) original.push_back(v);
            if (original.empty()) continue;
            CHECK(set_disagreement(g, original) <= boundary(mc, part) + 1e-9);
        }
        return true;
    });
}

TEST_CASE("objective equality on small instances") {
    for (std::uint32_t mask : {0u, 1u, 7u, 21u, 42u, 63u}) {
        const auto g = graph_from_mask(4, mask);
        auto [mc, rm] = cc_to_multicut(g);
        CHECK(exact_cc(g).value == doctest::Approx(exact_multicut(mc).value));
    }
    // a five-vertex case with few negative edges keeps the oracle in range
    const auto g5 = SignedGraph::complete_from_negative_pairs(5, {{0, 4}, {1, 3}});
    auto [mc5, rm5] = cc_to_multicut(g5);
    CHECK(exact_cc(g5).value == doctest::Approx(exact_multicut(mc5).value));
}
