#include "mmcc/reduce.hpp"

#include <stdexcept>

namespace mmcc {

std::pair<MulticutInstance, ReductionMap> cc_to_multicut(const SignedGraph& g) {
    ReductionMap rm;
    rm.original_n = g.n();
    std::vector<MulticutInstance::Edge> edges;
    std::vector<std::pair<int, int>> pairs;
    int next = g.n();
    for (const auto& e : g.edges()) {
        if (e.sign == Sign::positive) {
            edges.push_back({e.u, e.v, e.weight});
        } else {
            const int aux = next++;
            edges.push_back({e.u, aux, e.weight});
            pairs.push_back({e.v, aux});
            rm.added.push_back({e.u, e.v, aux, e.weight});
        }
    }
    return {MulticutInstance(next, std::move(edges), std::move(pairs)),
            std::move(rm)};
}

Partition partition_to_clustering(const ReductionMap& rm, const Partition& p) {
    Partition out;
    for (const auto& part : p.parts) {
        std::vector<int> kept;
        for (int v : part)
            if (v < rm.original_n) kept.push_back(v);
        if (!kept.empty()) out.parts.push_back(std::move(kept));
    }
    return out;
}

Partition clustering_to_partition(const SignedGraph& g, const ReductionMap& rm,
                                  const Partition& c) {
    const auto errors = validate_partition(g.n(), c);
    if (!errors.empty())
        throw std::invalid_argument("clustering_to_partition: " + errors.front());

    std::vector<int> cluster_of(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < c.parts.size(); ++i)
        for (int v : c.parts[i]) cluster_of[static_cast<std::size_t>(v)] = static_cast<int>(i);

    Partition out;
    out.parts = c.parts;
    for (const auto& a : rm.added) {
        const int cu = cluster_of[static_cast<std::size_t>(a.u)];
        const int cv = cluster_of[static_cast<std::size_t>(a.v)];
        if (cu == cv) {
            // Interior negative edge: the auxiliary vertex stays a singleton,
            // which cuts (u, aux) on both sides and keeps the pair separated.
            out.parts.push_back({a.aux});
        } else {
            // Crossing negative edge: aux joins u's part, so (u, aux) is not
            // cut and the pair (v, aux) stays separated.
            out.parts[static_cast<std::size_t>(cu)].push_back(a.aux);
        }
    }
    return canonical_partition(out);
}

}  // namespace mmcc
