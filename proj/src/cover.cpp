#include "mmcc/cover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mmcc/rng.hpp"

namespace mmcc {

namespace {

int default_round_cap(int k, int n) {
    if (n <= 1) return 4;
    const double cap = 17.0 * k * std::log2(static_cast<double>(n));
    return static_cast<int>(std::ceil(cap)) + 4;
}

}  // namespace

SetFamily covering(int n, const CoveringConfig& cfg, CoveringStats* stats) {
    if (n <= 0) throw std::invalid_argument("covering: need at least one vertex");
    if (cfg.k < 1) throw std::invalid_argument("covering: k must be >= 1");
    const double H = 1.0 / cfg.k;
    const int cap = cfg.max_rounds > 0 ? cfg.max_rounds : default_round_cap(cfg.k, n);

    SetFamily family;
    std::vector<double> y(static_cast<std::size_t>(n), 1.0);
    double total = static_cast<double>(n);
    int rounds = 0;
    const double stop = 1.0 / n;

    while (total > stop) {
        if (rounds >= cap)
            throw std::runtime_error(
                "covering: round cap " + std::to_string(cap) +
                " exceeded (finder violated its mass contract); total weight " +
                std::to_string(total));
        ++rounds;
        Measure eta = Measure::normalized(y);
        SetFamily found = cfg.finder(eta, H);
        if (found.sets.empty())
            throw std::runtime_error("covering: finder returned an empty family");

        std::vector<char> covered(static_cast<std::size_t>(n), 0);
        int covered_count = 0;
        for (const auto& s : found.sets) {
            if (s.empty())
                throw std::runtime_error("covering: finder returned an empty set");
            for (int v : s) {
                if (v < 0 || v >= n)
                    throw std::runtime_error("covering: finder returned vertex out of range");
                if (!covered[static_cast<std::size_t>(v)]) {
                    covered[static_cast<std::size_t>(v)] = 1;
                    ++covered_count;
                }
            }
        }
        for (auto& s : found.sets) family.sets.push_back(std::move(s));

        if (cfg.stationary_finder && covered_count == n) {
            // Halving every weight leaves the normalized measure unchanged,
            // so each remaining round repeats this one exactly.
            total /= 2.0;
            int extra = 0;
            double t = total;
            while (t > stop) {
                t /= 2.0;
                ++extra;
            }
            if (rounds + extra > cap)
                throw std::runtime_error("covering: round cap exceeded");
            const std::size_t batch = found.sets.size();
            const std::size_t base = family.sets.size() - batch;
            for (int r = 0; r < extra; ++r)
                for (std::size_t i = 0; i < batch; ++i)
                    family.sets.push_back(family.sets[base + i]);
            rounds += extra;
            break;
        }

        for (int v = 0; v < n; ++v)
            if (covered[static_cast<std::size_t>(v)])
                y[static_cast<std::size_t>(v)] /= 2.0;
        total = 0.0;
        for (double w : y) total += w;
    }

    if (stats) {
        stats->rounds = rounds;
        stats->rounds_bound = 1.0 + 16.0 * cfg.k * std::log(static_cast<double>(n));
        stats->min_coverage = 1.0;
        if (!family.sets.empty()) {
            for (int v = 0; v < n; ++v)
                stats->min_coverage =
                    std::min(stats->min_coverage, coverage_fraction(family, v));
        }
    }
    return family;
}

double coverage_fraction(const SetFamily& family, int v) {
    if (family.sets.empty())
        throw std::invalid_argument("coverage_fraction: empty family");
    std::size_t count = 0;
    for (const auto& s : family.sets)
        count += std::count(s.begin(), s.end(), v) > 0 ? 1 : 0;
    return static_cast<double>(count) / static_cast<double>(family.sets.size());
}

Partition aggregate(int n, const SetFamily& family, double B,
                    const SetCostFn& cost_fn, std::uint64_t seed,
                    AggregateStats* stats) {
    return aggregate_ordered(n, family, shuffled_indices(family.sets.size(), seed), B,
                             cost_fn, stats);
}

Partition aggregate_ordered(int n, const SetFamily& family,
                            const std::vector<int>& order, double B,
                            const SetCostFn& cost_fn, AggregateStats* stats) {
    const std::size_t count = family.sets.size();
    if (order.size() != count)
        throw std::invalid_argument("aggregate: order size mismatch");

    std::vector<std::vector<char>> member(count);
    for (std::size_t i = 0; i < count; ++i) {
        member[i] = member_flags(n, family.sets[static_cast<std::size_t>(order[i])]);
        if (cost_fn(family.sets[static_cast<std::size_t>(order[i])]) > B + kCostTol)
            throw std::invalid_argument("aggregate: family member costs more than B");
    }

    // Step 1: P_i = S_i minus everything claimed by earlier sets.
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < count; ++i)
        for (int v = 0; v < n; ++v)
            if (member[i][static_cast<std::size_t>(v)] &&
                owner[static_cast<std::size_t>(v)] < 0)
                owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
    for (int v = 0; v < n; ++v)
        if (owner[static_cast<std::size_t>(v)] < 0)
            throw std::invalid_argument("aggregate: vertex " + std::to_string(v) +
                                        " not covered by the family");

    auto part_of = [&](std::size_t i) {
        std::vector<int> part;
        for (int v = 0; v < n; ++v)
            if (owner[static_cast<std::size_t>(v)] == static_cast<int>(i))
                part.push_back(v);
        return part;
    };
    auto total_cost = [&]() {
        double total = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            auto part = part_of(i);
            if (!part.empty()) total += cost_fn(part);
        }
        return total;
    };

    if (stats) {
        stats->step2_iterations = 0;
        stats->potential.clear();
        stats->potential.push_back(total_cost());
    }

    // Step 2: while some nonempty part costs more than 2B, reset it to its
    // full originating set and carve that set out of every other part.
    const double start_total = stats ? stats->potential.front() : total_cost();
    const double denom = B > kCostTol ? B : 1.0;
    const long cap = static_cast<long>(count) * 10L *
                         (1L + static_cast<long>(std::ceil(start_total / denom))) +
                     16L;
    long iterations = 0;
    while (true) {
        int violator = -1;
        for (std::size_t i = 0; i < count; ++i) {
            auto part = part_of(i);
            if (part.empty()) continue;
            if (cost_fn(part) > 2.0 * B + kCostTol) {
                violator = static_cast<int>(i);
                break;
            }
        }
        if (violator < 0) break;
        if (++iterations > cap)
            throw std::runtime_error(
                "aggregate: repair iteration cap exceeded (potential not decreasing)");
        const auto& grab = member[static_cast<std::size_t>(violator)];
        for (int v = 0; v < n; ++v)
            if (grab[static_cast<std::size_t>(v)])
                owner[static_cast<std::size_t>(v)] = violator;
        if (stats) {
            ++stats->step2_iterations;
            stats->potential.push_back(total_cost());
        }
    }

    Partition out;
    for (std::size_t i = 0; i < count; ++i) {
        auto part = part_of(i);
        if (!part.empty()) out.parts.push_back(std::move(part));
    }
    return out;
}

}  // namespace mmcc
