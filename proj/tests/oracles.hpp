// Test-side oracles, deliberately independent of the library's
// enumeration path: plain odometer over all colorings, direct edge scans,
// textbook closed forms.
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "monoclt/graph.hpp"

namespace oracles {

// pmf of Y over all c^V colorings of the whole graph, naive count per state.
inline std::map<std::uint64_t, double> brute_force_pmf(const monoclt::Graph& g, std::uint32_t c) {
    const std::uint32_t n = g.vertex_count();
    std::vector<std::uint32_t> colors(n, 0);
    std::map<std::uint64_t, std::uint64_t> counts;
    std::uint64_t states = 0;
    while (true) {
        std::uint64_t y = 0;
        for (const monoclt::Edge& e : g.edges())
            y += colors[e.u] == colors[e.v];
        ++counts[y];
        ++states;
        std::uint32_t pos = 0;
        while (pos < n && ++colors[pos] == c) {
            colors[pos] = 0;
            ++pos;
        }
        if (pos == n)
            break;
    }
    std::map<std::uint64_t, double> pmf;
    for (const auto& [y, cnt] : counts)
        pmf[y] = static_cast<double>(cnt) / static_cast<double>(states);
    return pmf;
}

inline double binomial_pmf(std::uint32_t n, std::uint32_t k, double p) {
    const double log_choose = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    return std::exp(log_choose + k * std::log(p) + (n - k) * std::log1p(-p));
}

// E T and E T^2 for T = sum_i sum_{j in N_i \ {i}} X_i X_j, by averaging
// T over every coloring of the whole graph.
inline std::pair<double, double> brute_force_pair_sum(const monoclt::Graph& g, std::uint32_t c) {
    const std::uint32_t n = g.vertex_count();
    const double p = 1.0 / c;
    const double sigma = std::sqrt(static_cast<double>(g.edge_count()) * p * (1.0 - p));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        for (std::size_t j : monoclt::neighborhood(g, i))
            if (j != i)
                pairs.emplace_back(i, j);
    std::vector<std::uint32_t> colors(n, 0);
    long double sum_t = 0.0L, sum_t2 = 0.0L;
    std::uint64_t states = 0;
    while (true) {
        long double t = 0.0L;
        for (const auto& [i, j] : pairs) {
            const monoclt::Edge& ei = g.edge(i);
            const monoclt::Edge& ej = g.edge(j);
            const long double xi = ((colors[ei.u] == colors[ei.v] ? 1.0L : 0.0L) - p) / sigma;
            const long double xj = ((colors[ej.u] == colors[ej.v] ? 1.0L : 0.0L) - p) / sigma;
            t += xi * xj;
        }
        sum_t += t;
        sum_t2 += t * t;
        ++states;
        std::uint32_t pos = 0;
        while (pos < n && ++colors[pos] == c) {
            colors[pos] = 0;
            ++pos;
        }
        if (pos == n)
            break;
    }
    return {static_cast<double>(sum_t / states), static_cast<double>(sum_t2 / states)};
}

// E[X_i X_j^2 X_k] over the c^3 corner colorings of one triangle.
inline double brute_force_triangle_moment(std::uint32_t c, std::uint64_t m) {
    const double p = 1.0 / c;
    const double sigma = std::sqrt(static_cast<double>(m) * p * (1.0 - p));
    long double sum = 0.0L;
    for (std::uint32_t x = 0; x < c; ++x)
        for (std::uint32_t y = 0; y < c; ++y)
            for (std::uint32_t z = 0; z < c; ++z) {
                const long double xi = ((x == y ? 1.0L : 0.0L) - p) / sigma;
                const long double xj = ((y == z ? 1.0L : 0.0L) - p) / sigma;
                const long double xk = ((x == z ? 1.0L : 0.0L) - p) / sigma;
                sum += xi * xj * xj * xk;
            }
    return static_cast<double>(sum / (static_cast<long double>(c) * c * c));
}

}  // namespace oracles
