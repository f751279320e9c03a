#pragma once

#include <cstdint>
#include <vector>

#include "monoclt/exact.hpp"

namespace monoclt {

// Standard normal reference. cdf goes through erfc (max observed error a
// few ulp, well under the 1e-12 budget on [-10, 10]); quantile is the
// AS 241 rational approximation (Wichura 1988).
namespace normal {

double pdf(double x);
double cdf(double x);
double survival(double x);
double quantile(double p);
// Antiderivative of the cdf: G(t) = t Phi(t) + phi(t), G(-inf) = 0.
double cdf_antiderivative(double t);

}  // namespace normal

// Exact W1 distance between a finite distribution and N(0,1):
// integral of |F - Phi|, evaluated segment by segment with the closed-form
// antiderivative, splitting at the crossing point Phi^-1(F) when it falls
// inside a segment; tails are analytic.
double wasserstein_to_normal(const DiscreteDistribution& d);

// W1 between the empirical measure of the samples (mass 1/n each, equal
// values merged) and N(0,1).
double empirical_wasserstein(std::vector<double> samples);

struct PoissonReference {
    double lambda;

    double pmf(std::uint64_t k) const;
    double log_pmf(std::uint64_t k) const;
    // Smallest k whose upper tail P(X > k) is below `tail`.
    std::uint64_t upper_quantile(double tail) const;
};

// Total variation distance between a pmf on nonnegative integers and
// Poi(lambda). The Poisson tail beyond the scanned range enters as
// half its mass.
double tv_to_poisson(const DiscreteDistribution& d, double lambda);

}  // namespace monoclt
