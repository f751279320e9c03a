#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoclt/bounds.hpp"
#include "monoclt/coloring.hpp"
#include "monoclt/exact.hpp"
#include "monoclt/graph.hpp"

namespace monoclt {

inline constexpr const char* kReportSchema = "mono-clt/1";

enum class Method { exact, monte_carlo };
const char* method_name(Method m);
std::optional<Method> parse_method(const std::string& name);

struct VerifyOptions {
    Method method = Method::exact;
    std::uint64_t cap = kDefaultEnumerationCap;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    std::uint32_t stream_id = 0;
    unsigned threads = 1;
    double c0 = 1.0;
};

// Additive Monte Carlo tolerance; 0.01 at n = 10^6 (pilot-calibrated),
// scaled by the usual root-n rate.
double statistical_tolerance(std::uint64_t n_samples);

struct ClaimResult {
    std::string claim;
    double measured = 0.0;
    double bound = 0.0;
    double slack = 0.0;  // bound - measured (+ tolerance when Monte Carlo)
    bool pass = false;
};

struct VerificationReport {
    std::string descriptor;
    std::string graph_hash;
    std::uint64_t m = 0;
    std::uint32_t c = 0;
    Method method = Method::exact;
    std::optional<double> measured_wasserstein;
    std::optional<double> measured_tv_poisson;
    BoundReport bounds;
    std::vector<LemmaCheck> lemma_results;
    std::optional<double> statistical_tolerance;  // Monte Carlo only
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> seed;
    std::vector<ClaimResult> claims;
    bool all_pass = false;
};

// Measures the distances of L(W) to N(0,1) and of L(Y) to Poi(m/c) by the
// requested method and compares them with the theoretical bounds.
// Monte Carlo verdicts subtract the statistical tolerance so noise cannot
// fake a bound violation.
VerificationReport verify_graph(const Graph& g, std::uint32_t c, const VerifyOptions& options,
                                const std::string& descriptor = "graph");

std::string report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const std::string& json_text);

struct CRule {
    enum class Kind { fixed, ceil_sqrt_m, times_m } kind = Kind::ceil_sqrt_m;
    double value = 0.0;

    std::uint32_t apply(std::uint64_t m) const;
    static std::optional<CRule> parse(const std::string& text);
    std::string to_string() const;
};

struct SweepSpec {
    GraphFamily family = GraphFamily::cycle;
    std::vector<std::uint32_t> sizes;  // family n parameter per row
    CRule c_rule;
    VerifyOptions options;
    std::optional<std::uint64_t> graph_seed;  // erdos_renyi only
    double er_probability = 0.0;              // erdos_renyi only
};

struct SweepRow {
    std::string family;
    std::uint32_t n = 0;
    std::uint64_t m = 0;
    std::uint32_t c = 0;
    std::uint64_t k_m = 0;
    std::uint64_t triangles = 0;
    Method method = Method::exact;
    double w1 = 0.0;
    double w1_bound = 0.0;
    double tv = 0.0;
    double tv_bound = 0.0;
    double remark_rate = 0.0;
    bool pass = false;
};

std::vector<SweepRow> sweep(const SweepSpec& spec);

inline constexpr const char* kSweepCsvHeader =
    "family,n,m,c,K_m,triangles,method,w1,w1_bound,tv,tv_bound,remark_rate,verdict";

std::string sweep_csv(const std::vector<SweepRow>& rows);

// The frozen verification surface: named graphs with the color counts that
// are exact-feasible under the default cap.
struct TestSetEntry {
    std::string name;
    Graph graph;
    std::vector<std::uint32_t> color_counts;
};

std::vector<TestSetEntry> standard_test_set(std::uint64_t cap = kDefaultEnumerationCap);

// TSV manifest (name, vertices, m, color counts, hash) of the test set;
// kept under version control and compared byte-for-byte in acceptance.
std::string test_set_manifest(std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace monoclt
