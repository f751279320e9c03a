#include "monoclt/coloring.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace monoclt {

namespace {

constexpr std::uint64_t kColoringDomain = 0x434F4C4F52494E47ull;

void check_colors(std::uint32_t c) {
    if (c < 2)
        throw std::invalid_argument("color count must be >= 2, got " + std::to_string(c));
}

// Histogram moments with Neumaier-compensated accumulation.
void histogram_moments(const std::map<std::uint64_t, std::uint64_t>& hist, std::uint64_t n,
                       double& mean, double& variance) {
    auto neumaier_sum = [](auto&& term_at, const auto& hist_ref) {
        double sum = 0.0, comp = 0.0;
        for (const auto& [y, cnt] : hist_ref) {
            const double term = term_at(y, cnt);
            const double t = sum + term;
            if (std::abs(sum) >= std::abs(term))
                comp += (sum - t) + term;
            else
                comp += (term - t) + sum;
            sum = t;
        }
        return sum + comp;
    };
    if (n == 0) {
        mean = variance = 0.0;
        return;
    }
    const double nd = static_cast<double>(n);
    mean = neumaier_sum([nd](std::uint64_t y, std::uint64_t c) {
        return static_cast<double>(y) * (static_cast<double>(c) / nd);
    }, hist);
    const double mu = mean;
    variance = neumaier_sum([nd, mu](std::uint64_t y, std::uint64_t c) {
        const double d = static_cast<double>(y) - mu;
        return d * d * (static_cast<double>(c) / nd);
    }, hist);
}

}  // namespace

ColorSampler::ColorSampler(const ColoringConfig& cfg)
    : key_(derive_key(cfg.seed, kColoringDomain)), stream_id_(cfg.stream_id), colors_(cfg.colors) {
    check_colors(cfg.colors);
}

// One Philox block addresses the vertex pair (2k, 2k+1): counter words are
// (sample_lo, sample_hi, k, stream), the low/high 64-bit halves of the
// output feed the even/odd vertex. color() and fill() evaluate the same
// function, so single draws match bulk fills bit for bit.
std::uint32_t ColorSampler::color(std::uint64_t sample_index, std::uint32_t vertex_index) const {
    const philox::Counter ctr = {static_cast<std::uint32_t>(sample_index),
                                 static_cast<std::uint32_t>(sample_index >> 32),
                                 vertex_index >> 1, stream_id_};
    const philox::Counter out = philox::block(ctr, key_);
    const std::uint64_t word =
        (vertex_index & 1)
            ? static_cast<std::uint64_t>(out[2]) | (static_cast<std::uint64_t>(out[3]) << 32)
            : static_cast<std::uint64_t>(out[0]) | (static_cast<std::uint64_t>(out[1]) << 32);
    return bounded(word, colors_);
}

void ColorSampler::fill(std::uint64_t sample_index, std::span<std::uint32_t> out) const {
    const auto lo = static_cast<std::uint32_t>(sample_index);
    const auto hi = static_cast<std::uint32_t>(sample_index >> 32);
    const std::uint32_t n = static_cast<std::uint32_t>(out.size());
    for (std::uint32_t v = 0; v < n; v += 2) {
        const philox::Counter words = philox::block({lo, hi, v >> 1, stream_id_}, key_);
        out[v] = bounded(
            static_cast<std::uint64_t>(words[0]) | (static_cast<std::uint64_t>(words[1]) << 32),
            colors_);
        if (v + 1 < n)
            out[v + 1] = bounded(
                static_cast<std::uint64_t>(words[2]) | (static_cast<std::uint64_t>(words[3]) << 32),
                colors_);
    }
}

std::vector<std::uint32_t> sample_coloring(const Graph& g, const ColoringConfig& cfg,
                                           std::uint64_t sample_index) {
    const ColorSampler sampler(cfg);
    std::vector<std::uint32_t> coloring(g.vertex_count());
    sampler.fill(sample_index, coloring);
    return coloring;
}

std::uint64_t monochromatic_count(const Graph& g, std::span<const std::uint32_t> coloring,
                                  std::optional<std::uint32_t> c) {
    if (coloring.size() != g.vertex_count())
        throw std::invalid_argument("coloring length " + std::to_string(coloring.size()) +
                                    " != vertex count " + std::to_string(g.vertex_count()));
    if (c)
        for (std::uint32_t color : coloring)
            if (color >= *c)
                throw std::invalid_argument("color " + std::to_string(color) +
                                            " out of range [0, " + std::to_string(*c) + ")");
    std::uint64_t y = 0;
    for (const Edge& e : g.edges())
        y += coloring[e.u] == coloring[e.v];
    return y;
}

double standardize(double y, std::uint64_t m, std::uint32_t c) {
    if (m == 0)
        throw std::invalid_argument("standardize requires m >= 1");
    check_colors(c);
    const double p = 1.0 / c;
    const double mean = static_cast<double>(m) * p;
    const double sd = std::sqrt(mean * (1.0 - p));
    return (y - mean) / sd;
}

SampleSummary simulate_range(const Graph& g, const ColoringConfig& cfg,
                             std::uint64_t first_sample, std::uint64_t count) {
    const ColorSampler sampler(cfg);
    SampleSummary s;
    s.seed = cfg.seed;
    s.stream_id = cfg.stream_id;
    s.n_samples = count;
    std::vector<std::uint32_t> coloring(g.vertex_count());
    for (std::uint64_t k = 0; k < count; ++k) {
        sampler.fill(first_sample + k, coloring);
        std::uint64_t y = 0;
        for (const Edge& e : g.edges())
            y += coloring[e.u] == coloring[e.v];
        ++s.histogram[y];
    }
    histogram_moments(s.histogram, s.n_samples, s.mean, s.variance);
    return s;
}

SampleSummary merge_summaries(const SampleSummary& a, const SampleSummary& b) {
    SampleSummary s;
    s.seed = a.seed;
    s.stream_id = a.stream_id;
    s.stream_count = a.stream_count + b.stream_count;
    s.n_samples = a.n_samples + b.n_samples;
    s.histogram = a.histogram;
    for (const auto& [y, cnt] : b.histogram)
        s.histogram[y] += cnt;
    histogram_moments(s.histogram, s.n_samples, s.mean, s.variance);
    return s;
}

SampleSummary simulate(const Graph& g, const ColoringConfig& cfg, std::uint64_t n_samples,
                       unsigned threads) {
    if (n_samples < 1)
        throw std::invalid_argument("n_samples must be >= 1");
    if (threads < 1)
        threads = 1;
    const unsigned parts = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, n_samples));
    if (parts == 1) {
        SampleSummary s = simulate_range(g, cfg, 0, n_samples);
        s.stream_count = 1;
        return s;
    }
    std::vector<SampleSummary> partial(parts);
    std::vector<std::thread> workers;
    workers.reserve(parts);
    const std::uint64_t chunk = n_samples / parts, extra = n_samples % parts;
    std::uint64_t first = 0;
    for (unsigned t = 0; t < parts; ++t) {
        const std::uint64_t count = chunk + (t < extra ? 1 : 0);
        workers.emplace_back([&, t, first, count] {
            partial[t] = simulate_range(g, cfg, first, count);
        });
        first += count;
    }
    for (auto& w : workers)
        w.join();
    // Merge in fixed partition order; addition makes the result
    // independent of which thread finished first.
    SampleSummary s = partial[0];
    for (unsigned t = 1; t < parts; ++t)
        s = merge_summaries(s, partial[t]);
    s.stream_count = parts;
    return s;
}

std::string sample_csv(const SampleSummary& s) {
    std::ostringstream out;
    out << "y,count\n";
    for (const auto& [y, cnt] : s.histogram)
        out << y << "," << cnt << "\n";
    return out.str();
}

}  // namespace monoclt
