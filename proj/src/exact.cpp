#include "monoclt/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "monoclt/coloring.hpp"

namespace monoclt {

namespace {

double neumaier_total(const std::vector<double>& terms) {
    double sum = 0.0, comp = 0.0;
    for (double term : terms) {
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

// c^k if it stays <= cap, otherwise nullopt.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp,
                                         std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (r > cap / base)
            return std::nullopt;
        r *= base;
    }
    return r;
}

// Enumerates all c^k colorings of a small vertex set (mixed-radix counter)
// and accumulates fn(colors). Used by the covariance oracles.
template <typename Fn>
void for_each_coloring(std::uint32_t c, std::uint32_t k, Fn&& fn) {
    std::vector<std::uint32_t> colors(k, 0);
    while (true) {
        fn(colors);
        std::uint32_t pos = 0;
        while (pos < k && ++colors[pos] == c) {
            colors[pos] = 0;
            ++pos;
        }
        if (pos == k)
            break;
    }
}

// Full-enumeration histogram of the monochromatic count of a connected
// graph: depth-first color assignment in BFS vertex order with an
// incrementally maintained count, so each added vertex only inspects its
// already-colored neighbors.
std::vector<std::uint64_t> enumerate_counts_impl(const Graph& g, std::uint32_t c) {
    const std::uint32_t k = g.vertex_count();
    std::vector<std::uint32_t> order;
    std::vector<std::uint32_t> position(k, static_cast<std::uint32_t>(-1));
    {
        std::vector<VertexId> queue;
        std::vector<bool> seen(k, false);
        for (VertexId s = 0; s < k; ++s) {
            if (seen[s])
                continue;
            seen[s] = true;
            queue.push_back(s);
            std::size_t head = queue.size() - 1;
            while (head < queue.size()) {
                const VertexId v = queue[head++];
                for (VertexId w : g.neighbors(v)) {
                    if (!seen[w]) {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        order.assign(queue.begin(), queue.end());
        for (std::uint32_t pos = 0; pos < k; ++pos)
            position[order[pos]] = pos;
    }
    std::vector<std::vector<std::uint32_t>> earlier(k);
    for (const Edge& e : g.edges()) {
        const std::uint32_t pu = position[e.u], pv = position[e.v];
        earlier[std::max(pu, pv)].push_back(std::min(pu, pv));
    }

    std::vector<std::uint64_t> counts(g.edge_count() + 1, 0);
    std::vector<std::uint32_t> colors(k, 0);

    // Iterative DFS over positions; mono[pos] = count among first pos+1.
    struct Frame {
        std::uint32_t color;
        std::uint64_t mono;
    };
    std::vector<Frame> stack(k + 1);
    if (k == 0) {
        counts[0] = 1;
        return counts;
    }
    std::uint32_t depth = 0;
    stack[0] = {0, 0};
    while (true) {
        Frame& f = stack[depth];
        if (f.color == c) {
            if (depth == 0)
                break;
            --depth;
            ++stack[depth].color;
            continue;
        }
        colors[depth] = f.color;
        std::uint64_t add = 0;
        for (std::uint32_t ep : earlier[depth])
            add += colors[ep] == f.color;
        f.mono = (depth == 0 ? 0 : stack[depth - 1].mono) + add;
        if (depth + 1 == k) {
            ++counts[f.mono];
            ++f.color;
        } else {
            ++depth;
            stack[depth] = {0, 0};
        }
    }
    return counts;
}

// Local relabeling of one component for enumeration and memoization.
struct LocalComponent {
    Graph graph;
    std::string signature;
};

LocalComponent induced_component(const Graph& g, const std::vector<VertexId>& block,
                                 const ComponentPartition& parts, std::size_t block_id) {
    std::map<VertexId, VertexId> local;
    for (std::size_t i = 0; i < block.size(); ++i)
        local[block[i]] = static_cast<VertexId>(i);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (parts.edge_component[e] != block_id)
            continue;
        const Edge& ed = g.edge(e);
        pairs.emplace_back(local.at(ed.u), local.at(ed.v));
    }
    std::sort(pairs.begin(), pairs.end());
    std::ostringstream sig;
    sig << block.size() << ":";
    for (const auto& [u, v] : pairs)
        sig << u << "-" << v << ";";
    return {Graph::from_edge_list(pairs, static_cast<VertexId>(block.size())), sig.str()};
}

std::vector<double> counts_to_probs(const std::vector<std::uint64_t>& counts,
                                    std::uint64_t total) {
    std::vector<double> probs(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i)
        probs[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
    return probs;
}

// E[prod over edges of (I_e - p)^power_e] on an explicit vertex set,
// by enumeration of the c^k colorings. Edges given as local index pairs.
double centered_product_expectation(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                                    const std::vector<int>& powers, std::uint32_t n_vertices,
                                    std::uint32_t c) {
    const double p = 1.0 / c;
    long double sum = 0.0L;
    for_each_coloring(c, n_vertices, [&](const std::vector<std::uint32_t>& colors) {
        long double term = 1.0L;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const long double centered =
                (colors[edges[e].first] == colors[edges[e].second] ? 1.0L : 0.0L) - p;
            for (int q = 0; q < powers[e]; ++q)
                term *= centered;
        }
        sum += term;
    });
    long double states = 1.0L;
    for (std::uint32_t i = 0; i < n_vertices; ++i)
        states *= c;
    return static_cast<double>(sum / states);
}

}  // namespace

void DiscreteDistribution::validate() const {
    if (support.size() != probs.size())
        throw std::invalid_argument("support/probs size mismatch");
    if (support.empty())
        throw std::invalid_argument("empty distribution");
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (!(probs[i] > 0.0))
            throw std::invalid_argument("non-positive probability at atom " + std::to_string(i));
        if (i > 0 && !(support[i - 1] < support[i]))
            throw std::invalid_argument("support not strictly increasing");
    }
    const double total = neumaier_total(probs);
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("probabilities sum to " + std::to_string(total));
}

DiscreteDistribution make_distribution(std::vector<std::pair<double, double>> atoms) {
    std::sort(atoms.begin(), atoms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    DiscreteDistribution d;
    double total = 0.0;
    for (const auto& [value, weight] : atoms)
        total += weight;
    if (!(total > 0.0))
        throw std::invalid_argument("distribution needs positive total weight");
    for (const auto& [value, weight] : atoms) {
        if (weight == 0.0)
            continue;
        if (!d.support.empty() && d.support.back() == value)
            d.probs.back() += weight / total;
        else {
            d.support.push_back(value);
            d.probs.push_back(weight / total);
        }
    }
    d.validate();
    return d;
}

DiscreteDistribution exact_pmf_component(const Graph& g, std::uint32_t c, std::uint64_t cap) {
    if (c < 2)
        throw std::invalid_argument("exact pmf needs c >= 2");
    if (g.edge_count() == 0) {
        DiscreteDistribution d;
        d.support = {0.0};
        d.probs = {1.0};
        return d;
    }
    const auto states = checked_pow(c, g.vertex_count(), cap);
    if (!states)
        throw InfeasibleError("enumeration needs " + std::to_string(c) + "^" +
                              std::to_string(g.vertex_count()) + " states, cap " +
                              std::to_string(cap));
    const std::vector<std::uint64_t> counts = enumerate_counts_impl(g, c);
    std::vector<std::pair<double, double>> atoms;
    const std::vector<double> probs = counts_to_probs(counts, *states);
    for (std::size_t y = 0; y < probs.size(); ++y)
        if (probs[y] > 0.0)
            atoms.emplace_back(static_cast<double>(y), probs[y]);
    return make_distribution(std::move(atoms));
}

DiscreteDistribution exact_pmf(const Graph& g, std::uint32_t c, std::uint64_t cap) {
    if (c < 2)
        throw std::invalid_argument("exact pmf needs c >= 2");
    const ComponentPartition parts = connected_components(g);

    // Dense pmf over y = 0..m, built by convolving per-component pmfs.
    std::vector<double> dense{1.0};
    std::map<std::string, std::vector<double>> memo;  // identical components enumerate once
    for (std::size_t b = 0; b < parts.blocks.size(); ++b) {
        const LocalComponent comp = induced_component(g, parts.blocks[b], parts, b);
        if (comp.graph.edge_count() == 0)
            continue;
        auto it = memo.find(comp.signature);
        if (it == memo.end()) {
            const auto states = checked_pow(c, comp.graph.vertex_count(), cap);
            if (!states)
                throw InfeasibleError("component with " +
                                      std::to_string(comp.graph.vertex_count()) +
                                      " vertices exceeds enumeration cap " + std::to_string(cap));
            it = memo.emplace(comp.signature,
                              counts_to_probs(enumerate_counts_impl(comp.graph, c), *states))
                     .first;
        }
        const std::vector<double>& part = it->second;
        std::vector<double> next(dense.size() + part.size() - 1, 0.0);
        for (std::size_t a = 0; a < dense.size(); ++a) {
            if (dense[a] == 0.0)
                continue;
            for (std::size_t y = 0; y < part.size(); ++y)
                next[a + y] += dense[a] * part[y];
        }
        dense.swap(next);
    }
    std::vector<std::pair<double, double>> atoms;
    for (std::size_t y = 0; y < dense.size(); ++y)
        if (dense[y] > 0.0)
            atoms.emplace_back(static_cast<double>(y), dense[y]);
    return make_distribution(std::move(atoms));
}

Moments exact_moments(const DiscreteDistribution& d) {
    d.validate();
    std::vector<double> terms(d.support.size());
    for (std::size_t i = 0; i < d.support.size(); ++i)
        terms[i] = d.support[i] * d.probs[i];
    const double mean = neumaier_total(terms);
    for (std::size_t i = 0; i < d.support.size(); ++i) {
        const double dev = d.support[i] - mean;
        terms[i] = dev * dev * d.probs[i];
    }
    return {mean, neumaier_total(terms)};
}

DiscreteDistribution standardize_distribution(const DiscreteDistribution& d, std::uint64_t m,
                                              std::uint32_t c) {
    DiscreteDistribution out;
    out.support.reserve(d.support.size());
    for (double y : d.support)
        out.support.push_back(standardize(y, m, c));
    out.probs = d.probs;
    out.scale = DiscreteDistribution::Scale{m, c};
    out.validate();
    return out;
}

std::string pmf_csv(const DiscreteDistribution& d) {
    std::ostringstream out;
    out << "y,prob\n";
    char buf[40];
    for (std::size_t i = 0; i < d.support.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", d.probs[i]);
        out << static_cast<long long>(d.support[i]) << "," << buf << "\n";
    }
    return out.str();
}

bool IndicatorMoments::within_bounds(double eps) const {
    return abs_first <= abs_first_bound + eps && std::abs(second - second_expected) <= eps &&
           abs_third <= abs_third_bound + eps;
}

IndicatorMoments edge_indicator_moments(std::uint64_t m, std::uint32_t c) {
    if (m < 1)
        throw std::invalid_argument("edge_indicator_moments needs m >= 1");
    if (c < 2)
        throw std::invalid_argument("edge_indicator_moments needs c >= 2");
    const double p = 1.0 / c;
    const double q = 1.0 - p;
    const double sigma = std::sqrt(static_cast<double>(m) * p * q);
    IndicatorMoments im;
    im.abs_first = 2.0 * p * q / sigma;
    im.second = p * q / (sigma * sigma);
    im.abs_third = (p * q * q * q + q * p * p * p) / (sigma * sigma * sigma);
    im.abs_first_bound = 2.0 / std::sqrt(static_cast<double>(m) * c);
    im.second_expected = 1.0 / static_cast<double>(m);
    im.abs_third_bound = std::sqrt(static_cast<double>(c)) / std::pow(static_cast<double>(m), 1.5);
    return im;
}

double pair_covariance(const Graph& g, std::uint32_t c, std::size_t i, std::size_t j) {
    if (c < 2)
        throw std::invalid_argument("pair_covariance needs c >= 2");
    const Edge& ei = g.edge(i);
    const Edge& ej = g.edge(j);
    std::vector<VertexId> verts{ei.u, ei.v, ej.u, ej.v};
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    auto local = [&](VertexId v) {
        return static_cast<std::uint32_t>(
            std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> edges{
        {local(ei.u), local(ei.v)}, {local(ej.u), local(ej.v)}};
    const double e_centered = centered_product_expectation(
        edges, {1, 1}, static_cast<std::uint32_t>(verts.size()), c);
    const double p = 1.0 / c;
    const double sigma2 = static_cast<double>(g.edge_count()) * p * (1.0 - p);
    return e_centered / sigma2;
}

double triangle_mixed_moment(std::uint32_t c, std::uint64_t m) {
    if (c < 2 || m < 1)
        throw std::invalid_argument("triangle_mixed_moment needs c >= 2, m >= 1");
    // Triangle on local vertices {0,1,2}: i = (0,1), j = (1,2), k = (0,2).
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> edges{{0, 1}, {1, 2}, {0, 2}};
    const double e_centered = centered_product_expectation(edges, {1, 2, 1}, 3, c);
    const double p = 1.0 / c;
    const double sigma2 = static_cast<double>(m) * p * (1.0 - p);
    const double value = e_centered / (sigma2 * sigma2);
    const double bound = 1.0 / (static_cast<double>(m) * static_cast<double>(m));
    if (value > bound * (1.0 + 1e-9) + 1e-15)
        throw std::logic_error("triangle mixed moment exceeds 1/m^2");
    return value;
}

double pair_sum_variance(const Graph& g, std::uint32_t c, std::uint64_t term_cap) {
    if (c < 2)
        throw std::invalid_argument("pair_sum_variance needs c >= 2");
    const std::uint64_t m = g.edge_count();
    if (m == 0)
        return 0.0;
    // Ordered pairs (i, j) with j in N_i \ {i}.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j : neighborhood(g, i))
            if (j != i)
                pairs.emplace_back(i, j);
    if (pairs.empty())
        return 0.0;
    const std::uint64_t n_terms =
        static_cast<std::uint64_t>(pairs.size()) * static_cast<std::uint64_t>(pairs.size());
    if (n_terms > term_cap)
        throw InfeasibleError("pair_sum_variance needs " + std::to_string(n_terms) +
                              " covariance terms, cap " + std::to_string(term_cap));

    const double p = 1.0 / c;
    const double sigma2 = static_cast<double>(m) * p * (1.0 - p);
    // E of each product XiXj = 0 (uncorrelated), so Var(T) = E T^2 =
    // sum over pairs-of-pairs of E[Xi Xj Xk Xl].
    std::vector<double> terms;
    terms.reserve(pairs.size() * pairs.size());
    for (const auto& [i, j] : pairs) {
        for (const auto& [k, l] : pairs) {
            // Vertex-disjoint pairs factor into E[XiXj] E[XkXl] = 0.
            const Edge &eia = g.edge(i), &eja = g.edge(j);
            const Edge &eka = g.edge(k), &ela = g.edge(l);
            auto touches = [](const Edge& a, const Edge& b) {
                return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
            };
            if (!touches(eia, eka) && !touches(eia, ela) && !touches(eja, eka) &&
                !touches(eja, ela))
                continue;
            std::vector<VertexId> verts;
            std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
            std::vector<int> powers;
            auto add_edge = [&](std::size_t e) {
                const Edge& ed = g.edge(e);
                verts.push_back(ed.u);
                verts.push_back(ed.v);
            };
            add_edge(i);
            add_edge(j);
            add_edge(k);
            add_edge(l);
            std::sort(verts.begin(), verts.end());
            verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
            auto local = [&](VertexId v) {
                return static_cast<std::uint32_t>(
                    std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
            };
            // Combine repeated edges into powers (e.g. j == k gives X_j^2).
            std::map<std::size_t, int> edge_powers;
            ++edge_powers[i];
            ++edge_powers[j];
            ++edge_powers[k];
            ++edge_powers[l];
            for (const auto& [e, power] : edge_powers) {
                const Edge& ed = g.edge(e);
                edges.emplace_back(local(ed.u), local(ed.v));
                powers.push_back(power);
            }
            const double e4 = centered_product_expectation(
                edges, powers, static_cast<std::uint32_t>(verts.size()), c);
            terms.push_back(e4 / (sigma2 * sigma2));
        }
    }
    return neumaier_total(terms);
}

PairSumVarianceCheck pair_sum_variance_check(const Graph& g, std::uint32_t c,
                                             std::uint64_t term_cap) {
    PairSumVarianceCheck check;
    check.variance = pair_sum_variance(g, c, term_cap);
    if (g.edge_count() == 0)
        return check;
    const double md = static_cast<double>(g.edge_count());
    std::uint64_t pairs = 0;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        pairs += neighborhood(g, i).size() - 1;
    const EdgeStats stats = edge_stats(g);
    check.pair_triangle_bound =
        (2.0 * static_cast<double>(pairs) + 6.0 * static_cast<double>(stats.triangle_count)) /
        (md * md);
    check.envelope = 4.0 * std::numbers::sqrt2 / std::sqrt(md);
    check.chain_holds = check.variance <= check.pair_triangle_bound * (1.0 + 1e-9) + 1e-15 &&
                        check.pair_triangle_bound <= check.envelope * (1.0 + 1e-9) + 1e-15;
    return check;
}

}  // namespace monoclt
