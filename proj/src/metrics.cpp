#include "monoclt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace monoclt {

namespace normal {

double pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double cdf(double x) {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double survival(double x) {
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

// AS 241 (PPND16): relative error below 1e-15 away from the endpoints.
double quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("normal quantile needs p in (0, 1)");
    const double q = p - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                     6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
                   1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
                 1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
               (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                     3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
                   5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
                 4.2313330701600911252e1) * r + 1.0);
    }
    double r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double value;
    if (r <= 5.0) {
        r -= 1.6;
        value = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                      2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
                    3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
                  4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
                (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                      1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                    6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
                  2.05319162663775882187e0) * r + 1.0);
    } else {
        r -= 5.0;
        value = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                      1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                    2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
                  5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
                (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                      1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                    1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
                  5.99832206555887937690e-1) * r + 1.0);
    }
    return q < 0.0 ? -value : value;
}

double cdf_antiderivative(double t) {
    return t * cdf(t) + pdf(t);
}

}  // namespace normal

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

// Integral of |k - Phi(t)| over [a, b] for constant k in [0, 1].
double segment_abs_integral(double k, double a, double b) {
    const double ga = normal::cdf_antiderivative(a);
    const double gb = normal::cdf_antiderivative(b);
    auto above = [&](double lo, double hi, double glo, double ghi) {
        // Phi >= k on [lo, hi]
        return (ghi - glo) - k * (hi - lo);
    };
    auto below = [&](double lo, double hi, double glo, double ghi) {
        // Phi <= k on [lo, hi]
        return k * (hi - lo) - (ghi - glo);
    };
    if (k <= 0.0)
        return above(a, b, ga, gb);
    if (k >= 1.0)
        return below(a, b, ga, gb);
    const double t_star = normal::quantile(k);
    if (t_star <= a)
        return above(a, b, ga, gb);
    if (t_star >= b)
        return below(a, b, ga, gb);
    const double gs = normal::cdf_antiderivative(t_star);
    return below(a, t_star, ga, gs) + above(t_star, b, gs, gb);
}

}  // namespace

double wasserstein_to_normal(const DiscreteDistribution& d) {
    d.validate();
    const std::size_t n = d.support.size();
    std::vector<double> pieces;
    pieces.reserve(n + 1);
    // Left tail: integral of Phi up to the first atom.
    pieces.push_back(normal::cdf_antiderivative(d.support.front()));
    double cumulative = 0.0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        cumulative += d.probs[j];
        const double k = std::min(1.0, std::max(0.0, cumulative));
        pieces.push_back(segment_abs_integral(k, d.support[j], d.support[j + 1]));
    }
    // Right tail: integral of 1 - Phi from the last atom.
    const double w = d.support.back();
    pieces.push_back(normal::pdf(w) - w * normal::survival(w));
    return neumaier_total(pieces);
}

double empirical_wasserstein(std::vector<double> samples) {
    if (samples.empty())
        throw std::invalid_argument("empirical_wasserstein needs at least one sample");
    std::sort(samples.begin(), samples.end());
    std::vector<std::pair<double, double>> atoms;
    for (double x : samples) {
        if (!atoms.empty() && atoms.back().first == x)
            atoms.back().second += 1.0;
        else
            atoms.emplace_back(x, 1.0);
    }
    return wasserstein_to_normal(make_distribution(std::move(atoms)));
}

double PoissonReference::log_pmf(std::uint64_t k) const {
    return static_cast<double>(k) * std::log(lambda) - lambda -
           std::lgamma(static_cast<double>(k) + 1.0);
}

double PoissonReference::pmf(std::uint64_t k) const {
    return std::exp(log_pmf(k));
}

std::uint64_t PoissonReference::upper_quantile(double tail) const {
    // Past k >= 2 lambda the pmf ratio lambda/(k+1) is at most 1/2, so the
    // remaining mass beyond k is below pmf(k). No summed-cdf test: that
    // saturates at the rounding floor long before 1e-15.
    std::uint64_t k = static_cast<std::uint64_t>(std::ceil(2.0 * lambda));
    while (pmf(k) > tail) {
        ++k;
        if (k > 1'000'000'000ull)
            throw std::logic_error("poisson quantile scan ran away");
    }
    return k;
}

double tv_to_poisson(const DiscreteDistribution& d, double lambda) {
    d.validate();
    if (!(lambda > 0.0))
        throw std::invalid_argument("tv_to_poisson needs lambda > 0");
    for (double y : d.support)
        if (y < 0.0 || y != std::floor(y))
            throw std::invalid_argument("tv_to_poisson needs nonnegative integer support");
    const PoissonReference poi{lambda};
    const std::uint64_t k_poi = poi.upper_quantile(1e-15);
    const std::uint64_t k_max =
        std::max<std::uint64_t>(k_poi, static_cast<std::uint64_t>(d.support.back()));
    std::vector<double> diffs;
    std::vector<double> seen;
    diffs.reserve(k_max + 2);
    seen.reserve(k_max + 1);
    std::size_t idx = 0;
    for (std::uint64_t k = 0; k <= k_max; ++k) {
        double pk = 0.0;
        if (idx < d.support.size() && static_cast<std::uint64_t>(d.support[idx]) == k)
            pk = d.probs[idx++];
        const double qk = poi.pmf(k);
        seen.push_back(qk);
        diffs.push_back(std::abs(pk - qk));
    }
    // Poisson mass beyond the scan, matched against zero pmf mass.
    diffs.push_back(std::max(0.0, 1.0 - neumaier_total(seen)));
    return 0.5 * neumaier_total(diffs);
}

}  // namespace monoclt
