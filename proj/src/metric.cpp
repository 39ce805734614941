#include "mmcc/metric.hpp"

namespace mmcc {

LpConstraint triangle_row(int n, int base, const RowKey& key) {
    const int long_side = base + pair_index(n, key.a, key.b);
    const int leg1 = base + pair_index(n, key.a, key.c);
    const int leg2 = base + pair_index(n, key.c, key.b);
    return {{{leg1, 1.0}, {leg2, 1.0}, {long_side, -1.0}}, Relation::ge, 0.0};
}

std::vector<SeparatedConstraint> separate_triangles(const std::vector<double>& values,
                                                    int n, int base, RowPool* pool) {
    std::vector<SeparatedConstraint> out;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double duv = values[static_cast<std::size_t>(base + pair_index(n, u, v))];
            for (int w = 0; w < n; ++w) {
                if (w == u || w == v) continue;
                const double lhs =
                    values[static_cast<std::size_t>(base + pair_index(n, u, w))] +
                    values[static_cast<std::size_t>(base + pair_index(n, w, v))];
                const double violation = duv - lhs;
                if (violation > 1e-6) {
                    const RowKey key{kRowTriangle, u, v, w};
                    out.push_back({triangle_row(n, base, key), violation});
                    if (pool) pool->insert(key);
                }
            }
        }
    }
    return out;
}

}  // namespace mmcc
