#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monoclt/graph.hpp"
#include "monoclt/rng.hpp"

namespace monoclt {

struct ColoringConfig {
    std::uint32_t colors = 2;  // c >= 2
    std::uint64_t seed = 0;
    std::uint32_t stream_id = 0;
};

// Addressable uniform colors: the color of (sample, vertex) is a pure
// function of (seed, stream_id, sample_index, vertex_index), so parallel
// schedules that partition the sample range always agree.
class ColorSampler {
public:
    explicit ColorSampler(const ColoringConfig& cfg);

    std::uint32_t colors() const { return colors_; }
    std::uint32_t color(std::uint64_t sample_index, std::uint32_t vertex_index) const;
    void fill(std::uint64_t sample_index, std::span<std::uint32_t> out) const;

private:
    philox::Key key_;
    std::uint32_t stream_id_;
    std::uint32_t colors_;
};

std::vector<std::uint32_t> sample_coloring(const Graph& g, const ColoringConfig& cfg,
                                           std::uint64_t sample_index);

// Y = number of edges whose endpoints share a color. When `c` is given,
// entries are validated against [0, c).
std::uint64_t monochromatic_count(const Graph& g, std::span<const std::uint32_t> coloring,
                                  std::optional<std::uint32_t> c = std::nullopt);

// W = (y - m/c) / sqrt((m/c)(1 - 1/c)).
double standardize(double y, std::uint64_t m, std::uint32_t c);

struct SampleSummary {
    std::uint64_t n_samples = 0;
    std::map<std::uint64_t, std::uint64_t> histogram;  // Y -> count
    double mean = 0.0;
    double variance = 0.0;  // population variance of the histogram
    std::uint64_t seed = 0;
    std::uint32_t stream_id = 0;
    std::uint32_t stream_count = 1;  // provenance: partitions used
};

// Samples [first_sample, first_sample + count); composable by sample range.
SampleSummary simulate_range(const Graph& g, const ColoringConfig& cfg,
                             std::uint64_t first_sample, std::uint64_t count);

SampleSummary merge_summaries(const SampleSummary& a, const SampleSummary& b);

// Full simulation; `threads` only partitions work, never changes output.
SampleSummary simulate(const Graph& g, const ColoringConfig& cfg, std::uint64_t n_samples,
                       unsigned threads = 1);

// CSV "y,count" sorted by y.
std::string sample_csv(const SampleSummary& s);

}  // namespace monoclt
