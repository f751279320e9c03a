#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "monoclt/graph.hpp"

namespace monoclt {

// (3/2) sqrt(c/m) + 5 sqrt(2)/sqrt(c) + (1/sqrt(pi)) 2^(7/4) / m^(1/4).
double wasserstein_bound(std::uint64_t m, std::uint32_t c);

// sqrt(8 m) / c.
double poisson_tv_bound(std::uint64_t m, std::uint32_t c);

// C0 * (sqrt(c/m) + K_m / (sqrt(c) m^(3/2)) + 1/m^(1/4)); C0 is a caller
// knob because no explicit constant is available for it.
double remark_rate(std::uint64_t m, std::uint32_t c, std::uint64_t k_m, double c0 = 1.0);

// TV bounds at or above 1 say nothing; W1 bounds above the coupling cap
// E|W| + E|Z| <= 1 + sqrt(2/pi) say nothing either.
inline constexpr double kTvVacuityThreshold = 1.0;
double w1_vacuity_cap();

enum class RegimeHint { poisson_favored, normal_favored, both_vacuous };
const char* regime_name(RegimeHint r);

// Heuristic finite-sample cutoffs for the regime hint; not claims, just
// presentation defaults.
struct RegimeConfig {
    double poisson_mean_max = 8.0;  // m/c at or below this leans Poisson
};

struct BoundReport {
    std::uint64_t m = 0;
    std::uint32_t c = 0;
    double wasserstein_bound = 0.0;
    double poisson_tv_bound = 0.0;
    double remark_rate = 0.0;
    double c0 = 1.0;
    std::optional<std::uint64_t> k_m;
    bool tv_vacuous = false;
    bool w1_vacuous = false;
    RegimeHint regime_hint = RegimeHint::both_vacuous;
};

BoundReport make_bound_report(std::uint64_t m, std::uint32_t c,
                              std::optional<std::uint64_t> k_m = std::nullopt, double c0 = 1.0,
                              const RegimeConfig& regime = {});

struct LemmaCheck {
    std::string name;
    double value = 0.0;
    double bound = 0.0;
    double slack = 0.0;  // bound - value
    bool pass = false;
};

// K_m <= sqrt(2) m^(3/2).
LemmaCheck lemma2_check(const EdgeStats& stats);

// #(triangles) <= (sqrt(2)/3) m^(3/2); exponent 3/2 (the 2/3 in print is a
// typo, falsified already by K4).
LemmaCheck lemma3_check(const EdgeStats& stats);

}  // namespace monoclt
