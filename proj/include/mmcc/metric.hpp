#pragma once

// Helpers for LPs whose variables include one entry per unordered vertex
// pair (metric blocks): index arithmetic, triangle separation, and a pool
// that remembers lazily generated rows so later solves on the same instance
// start from them instead of rediscovering.

#include <set>
#include <tuple>

#include "mmcc/lp.hpp"

namespace mmcc {

inline int pair_count(int n) { return n * (n - 1) / 2; }

// Index of unordered pair {u,v} (u != v) among the C(n,2) pairs, ordered
// lexicographically by (min, max).
inline int pair_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

// Keyed lazy rows: family tag plus up to three ids. Pools are sets of keys;
// the module owning the LP layout materializes them into constraints.
struct RowKey {
    int family = 0;
    int a = 0, b = 0, c = 0;
    auto operator<=>(const RowKey&) const = default;
};

using RowPool = std::set<RowKey>;

inline constexpr int kRowTriangle = 1;  // a<b long side, c apex

// Emits violated triangle rows d(a,c) + d(c,b) >= d(a,b) for the pair block
// starting at var offset `base`. Records every emitted key into `pool` when
// given one, so subsequent solves can pre-seed the rows.
std::vector<SeparatedConstraint> separate_triangles(const std::vector<double>& values,
                                                    int n, int base,
                                                    RowPool* pool = nullptr);

// Materializes a triangle row for the given key and pair block offset.
LpConstraint triangle_row(int n, int base, const RowKey& key);

}  // namespace mmcc
