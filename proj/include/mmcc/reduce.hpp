#pragma once

// Reduction from correlation clustering to multicut and both solution
// mappings. Every negative edge (u,v) becomes a fresh vertex `uv` attached
// to u, with (v, uv) as a source-sink pair; positive edges are copied.

#include <utility>

#include "mmcc/graph.hpp"

namespace mmcc {

struct ReductionMap {
    struct AddedVertex {
        int u = 0;     // endpoint the auxiliary vertex is wired to
        int v = 0;     // endpoint paired with the auxiliary vertex
        int aux = 0;   // id of the new vertex in the multicut instance
        double weight = 1.0;
    };
    int original_n = 0;
    std::vector<AddedVertex> added;  // one entry per negative edge, input order
};

std::pair<MulticutInstance, ReductionMap> cc_to_multicut(const SignedGraph& g);

// Restriction of a multicut partition to the original vertices, dropping
// parts that become empty.
Partition partition_to_clustering(const ReductionMap& rm, const Partition& p);

// Lifts a clustering of the original graph to a partition of the reduced
// instance with equal max cost: auxiliary vertices of crossing negative
// edges join the part of their wired endpoint, the rest stay singletons.
Partition clustering_to_partition(const SignedGraph& g, const ReductionMap& rm,
                                  const Partition& c);

}  // namespace mmcc
