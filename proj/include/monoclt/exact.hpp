#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monoclt/graph.hpp"

namespace monoclt {

// Raised when an exact computation would exceed its state cap; callers
// are expected to fall back to Monte Carlo explicitly.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

// Finite pmf with strictly increasing support and positive probabilities.
// Holds either integer Y values or their affine W images; `scale` is set
// on the standardized view.
struct DiscreteDistribution {
    std::vector<double> support;
    std::vector<double> probs;
    struct Scale {
        std::uint64_t m;
        std::uint32_t c;
    };
    std::optional<Scale> scale;

    void validate() const;
};

// Builds a distribution from (value, weight) pairs: merges duplicate
// values, drops zero weights, normalizes by the total weight.
DiscreteDistribution make_distribution(std::vector<std::pair<double, double>> atoms);

// Exact pmf of the monochromatic count of a connected graph by full
// enumeration of the c^|V| colorings. Requires c^|V| <= cap.
DiscreteDistribution exact_pmf_component(const Graph& g, std::uint32_t c,
                                         std::uint64_t cap = kDefaultEnumerationCap);

// Exact pmf of Y for an arbitrary graph: per-component enumeration followed
// by convolution (counts on disjoint components are independent).
DiscreteDistribution exact_pmf(const Graph& g, std::uint32_t c,
                               std::uint64_t cap = kDefaultEnumerationCap);

struct Moments {
    double mean;
    double variance;
};

Moments exact_moments(const DiscreteDistribution& d);

// Affine image under standardize(); sets `scale` metadata.
DiscreteDistribution standardize_distribution(const DiscreteDistribution& d, std::uint64_t m,
                                              std::uint32_t c);

// CSV "y,prob" with 17 significant digits, rows sorted by y.
std::string pmf_csv(const DiscreteDistribution& d);

// Closed-form moments of a single standardized edge indicator
// X = (I - 1/c) / sqrt((m/c)(1 - 1/c)), with the moment bounds
// E|X| <= 2/sqrt(mc), E X^2 = 1/m, E|X|^3 <= sqrt(c)/m^(3/2).
struct IndicatorMoments {
    double abs_first;
    double second;
    double abs_third;
    double abs_first_bound;
    double second_expected;
    double abs_third_bound;

    bool within_bounds(double eps = 1e-12) const;
};

IndicatorMoments edge_indicator_moments(std::uint64_t m, std::uint32_t c);

// Exact Cov(X_i, X_j) by enumeration over the colors of the involved
// vertices. Zero for i != j; 1/m on the diagonal.
double pair_covariance(const Graph& g, std::uint32_t c, std::size_t i, std::size_t j);

// Exact E[X_i X_j^2 X_k] for a triangle of edges inside a graph with m
// edges, by enumeration of the c^3 colorings of its corners. Always
// <= 1/m^2.
double triangle_mixed_moment(std::uint32_t c, std::uint64_t m);

// Exact Var(sum_i sum_{j in N_i \ {i}} X_i X_j), accumulated term by term
// over ordered pairs with each expectation enumerated on the involved
// vertex set.
double pair_sum_variance(const Graph& g, std::uint32_t c,
                         std::uint64_t term_cap = 10'000'000);

// The claimed bound chain for that variance,
//   Var <= 2 P / m^2 + 6 #triangles / m^2 <= (2 * 2^(1/4) / m^(1/4))^2
// with P the number of ordered pairs. The chain does NOT hold on every
// graph: pairs anchored at opposite corners of a 4-cycle contribute
// Cov(X_i X_j, X_k X_l) = p^3 (1-p) / sigma^4 > 0, a case absent from the
// classification behind the bound (counterexamples: the 4-cycle at c = 2,
// K_{2,18} at c = 2 against the final envelope). `chain_holds` reports
// whether this graph satisfies it.
struct PairSumVarianceCheck {
    double variance = 0.0;
    double pair_triangle_bound = 0.0;  // 2 P / m^2 + 6 #triangles / m^2
    double envelope = 0.0;             // 4 sqrt(2) / sqrt(m)
    bool chain_holds = false;
};

PairSumVarianceCheck pair_sum_variance_check(const Graph& g, std::uint32_t c,
                                             std::uint64_t term_cap = 10'000'000);

}  // namespace monoclt
