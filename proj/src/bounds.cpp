#include "monoclt/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace monoclt {

namespace {

void check_domain(std::uint64_t m, std::uint32_t c) {
    if (m < 1)
        throw std::invalid_argument("bound needs m >= 1");
    if (c < 2)
        throw std::invalid_argument("bound needs c >= 2");
}

}  // namespace

double wasserstein_bound(std::uint64_t m, std::uint32_t c) {
    check_domain(m, c);
    const double md = static_cast<double>(m);
    const double cd = static_cast<double>(c);
    return 1.5 * std::sqrt(cd / md) + 5.0 * std::numbers::sqrt2 / std::sqrt(cd) +
           std::pow(2.0, 1.75) / (std::sqrt(std::numbers::pi) * std::pow(md, 0.25));
}

double poisson_tv_bound(std::uint64_t m, std::uint32_t c) {
    check_domain(m, c);
    return std::sqrt(8.0 * static_cast<double>(m)) / static_cast<double>(c);
}

double remark_rate(std::uint64_t m, std::uint32_t c, std::uint64_t k_m, double c0) {
    check_domain(m, c);
    if (!(c0 > 0.0))
        throw std::invalid_argument("remark_rate needs C0 > 0");
    const double md = static_cast<double>(m);
    const double cd = static_cast<double>(c);
    return c0 * (std::sqrt(cd / md) +
                 static_cast<double>(k_m) / (std::sqrt(cd) * std::pow(md, 1.5)) +
                 1.0 / std::pow(md, 0.25));
}

double w1_vacuity_cap() {
    return 1.0 + std::sqrt(2.0 / std::numbers::pi);
}

const char* regime_name(RegimeHint r) {
    switch (r) {
        case RegimeHint::poisson_favored: return "poisson-favored";
        case RegimeHint::normal_favored: return "normal-favored";
        case RegimeHint::both_vacuous: return "both-vacuous";
    }
    return "?";
}

BoundReport make_bound_report(std::uint64_t m, std::uint32_t c,
                              std::optional<std::uint64_t> k_m, double c0,
                              const RegimeConfig& regime) {
    BoundReport r;
    r.m = m;
    r.c = c;
    r.wasserstein_bound = wasserstein_bound(m, c);
    r.poisson_tv_bound = poisson_tv_bound(m, c);
    r.k_m = k_m;
    r.c0 = c0;
    r.remark_rate = k_m ? remark_rate(m, c, *k_m, c0) : 0.0;
    r.tv_vacuous = r.poisson_tv_bound >= kTvVacuityThreshold;  // TV <= 1 always
    r.w1_vacuous = r.wasserstein_bound > w1_vacuity_cap();
    const double mean = static_cast<double>(m) / c;
    if (!r.tv_vacuous && mean <= regime.poisson_mean_max)
        r.regime_hint = RegimeHint::poisson_favored;
    else if (!r.w1_vacuous)
        r.regime_hint = RegimeHint::normal_favored;
    else
        r.regime_hint = RegimeHint::both_vacuous;
    return r;
}

LemmaCheck lemma2_check(const EdgeStats& stats) {
    LemmaCheck c;
    c.name = "lemma2_min_degree_sum";
    c.value = static_cast<double>(stats.k_m);
    c.bound = std::numbers::sqrt2 * std::pow(static_cast<double>(stats.m), 1.5);
    c.slack = c.bound - c.value;
    c.pass = c.value <= c.bound * (1.0 + 1e-12);
    return c;
}

LemmaCheck lemma3_check(const EdgeStats& stats) {
    LemmaCheck c;
    c.name = "lemma3_triangles_corrected_exponent";
    c.value = static_cast<double>(stats.triangle_count);
    c.bound = std::numbers::sqrt2 / 3.0 * std::pow(static_cast<double>(stats.m), 1.5);
    c.slack = c.bound - c.value;
    c.pass = c.value <= c.bound * (1.0 + 1e-12);
    return c;
}

}  // namespace monoclt
