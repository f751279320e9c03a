#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "monoclt/metrics.hpp"
#include "monoclt/verify.hpp"

using namespace monoclt;

namespace {

GenParams sized(std::uint32_t n) {
    GenParams p;
    p.n = n;
    return p;
}

}  // namespace

TEST_CASE("exact verification of K3 at c=2") {
    const Graph k3 = Graph::from_edge_list({{0, 1}, {1, 2}, {0, 2}}, 3);
    VerifyOptions options;
    options.method = Method::exact;
    const VerificationReport r = verify_graph(k3, 2, options, "k3");
    CHECK(r.all_pass);
    CHECK(r.method == Method::exact);
    CHECK(!r.statistical_tolerance.has_value());
    REQUIRE(r.measured_wasserstein.has_value());
    CHECK(*r.measured_wasserstein == doctest::Approx(0.61422669529415634067).epsilon(1e-12));
    CHECK(r.bounds.wasserstein_bound == doctest::Approx(7.66668504697325).epsilon(1e-12));
    REQUIRE(r.measured_tv_poisson.has_value());
    CHECK(*r.measured_tv_poisson == doctest::Approx(0.53979404469386347783).epsilon(1e-12));
    // TV claim compares against min(1, bound)
    CHECK(r.claims[1].bound == 1.0);
    CHECK(r.lemma_results.size() == 5);
    for (const LemmaCheck& l : r.lemma_results)
        CHECK(l.pass);
}

TEST_CASE("exact verification of the large matching poisson case") {
    const Graph matching = generate(GraphFamily::matching, sized(1000));
    VerifyOptions options;
    options.method = Method::exact;
    const VerificationReport r = verify_graph(matching, 2000, options, "matching-1000");
    CHECK(r.all_pass);
    CHECK(*r.measured_tv_poisson <= 0.001);
    CHECK(r.bounds.poisson_tv_bound == doctest::Approx(0.0447213595499958).epsilon(1e-12));
    CHECK(*r.measured_tv_poisson <= r.bounds.poisson_tv_bound);
}

TEST_CASE("monte carlo verification tracks the exact distances") {
    const Graph k4 = generate(GraphFamily::complete, sized(4));
    VerifyOptions exact_options;
    exact_options.method = Method::exact;
    const VerificationReport exact_report = verify_graph(k4, 2, exact_options, "k4");

    VerifyOptions mc;
    mc.method = Method::monte_carlo;
    mc.samples = 200'000;
    mc.seed = 5;
    const VerificationReport mc_report = verify_graph(k4, 2, mc, "k4");
    REQUIRE(mc_report.statistical_tolerance.has_value());
    CHECK(*mc_report.statistical_tolerance == doctest::Approx(statistical_tolerance(200'000)));
    CHECK(std::abs(*mc_report.measured_wasserstein - *exact_report.measured_wasserstein) <=
          *mc_report.statistical_tolerance);
    CHECK(std::abs(*mc_report.measured_tv_poisson - *exact_report.measured_tv_poisson) <=
          *mc_report.statistical_tolerance);
    CHECK(mc_report.all_pass);
}

TEST_CASE("statistical tolerance follows the root-n pilot calibration") {
    CHECK(statistical_tolerance(1'000'000) == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(statistical_tolerance(250'000) == doctest::Approx(0.02).epsilon(1e-12));
    CHECK_THROWS_AS(statistical_tolerance(0), std::invalid_argument);
}

TEST_CASE("verification errors") {
    const Graph empty = Graph::from_edge_list({}, 3);
    VerifyOptions options;
    CHECK_THROWS_AS(verify_graph(empty, 2, options), std::invalid_argument);

    const Graph k5 = generate(GraphFamily::complete, sized(5));
    options.cap = 16;
    CHECK_THROWS_AS(verify_graph(k5, 2, options), InfeasibleError);

    options.cap = kDefaultEnumerationCap;
    options.method = Method::monte_carlo;
    options.samples = 0;
    CHECK_THROWS_AS(verify_graph(k5, 2, options), std::invalid_argument);
}

TEST_CASE("report json round trip preserves verdicts and fields") {
    const Graph k3 = Graph::from_edge_list({{0, 1}, {1, 2}, {0, 2}}, 3);
    VerifyOptions options;
    options.method = Method::monte_carlo;
    options.samples = 50'000;
    options.seed = 17;
    const VerificationReport r = verify_graph(k3, 2, options, "k3");
    const std::string json_text = report_to_json(r);
    CHECK(json_text.find("\"mono-clt/1\"") != std::string::npos);
    const VerificationReport back = report_from_json(json_text);
    CHECK(back.all_pass == r.all_pass);
    CHECK(back.descriptor == r.descriptor);
    CHECK(back.graph_hash == r.graph_hash);
    CHECK(back.m == r.m);
    CHECK(back.c == r.c);
    CHECK(back.method == r.method);
    CHECK(*back.measured_wasserstein == *r.measured_wasserstein);
    CHECK(*back.measured_tv_poisson == *r.measured_tv_poisson);
    CHECK(*back.statistical_tolerance == *r.statistical_tolerance);
    REQUIRE(back.claims.size() == r.claims.size());
    for (std::size_t i = 0; i < r.claims.size(); ++i) {
        CHECK(back.claims[i].claim == r.claims[i].claim);
        CHECK(back.claims[i].pass == r.claims[i].pass);
        CHECK(back.claims[i].measured == r.claims[i].measured);
    }
    REQUIRE(back.lemma_results.size() == r.lemma_results.size());
    for (std::size_t i = 0; i < r.lemma_results.size(); ++i)
        CHECK(back.lemma_results[i].pass == r.lemma_results[i].pass);

    CHECK_THROWS_AS(report_from_json("{\"schema\":\"other/9\"}"), std::invalid_argument);
}

TEST_CASE("c-rule parsing and application") {
    CHECK(CRule::parse("sqrt")->apply(100) == 10);
    CHECK(CRule::parse("sqrt")->apply(101) == 11);
    CHECK(CRule::parse("fixed:7")->apply(12345) == 7);
    CHECK(CRule::parse("times:10")->apply(50) == 500);
    CHECK(CRule::parse("fixed:1")->apply(9) == 2);  // clamped to the c >= 2 domain
    CHECK(!CRule::parse("nope").has_value());
    CHECK(!CRule::parse("fixed:x").has_value());
    CHECK(!CRule::parse("times:-1").has_value());
}

TEST_CASE("exact sweep over matchings shows the poisson-regime decay") {
    // realizes the m/c -> 0 schedule from the sweep examples with a family
    // whose exact law stays convolution-feasible at any size
    SweepSpec spec;
    spec.family = GraphFamily::matching;
    spec.sizes = {10, 100, 1000};
    spec.c_rule = *CRule::parse("times:10");
    spec.options.method = Method::exact;
    const std::vector<SweepRow> rows = sweep(spec);
    REQUIRE(rows.size() == 3);
    double prev_tv = 1e9;
    for (const SweepRow& row : rows) {
        CHECK(row.c == 10 * row.m);
        CHECK(row.tv < prev_tv);
        CHECK(row.pass);
        prev_tv = row.tv;
    }
    CHECK(rows.back().tv < 1e-4);

    const std::string csv = sweep_csv(rows);
    CHECK(csv.substr(0, csv.find('\n')) ==
          "family,n,m,c,K_m,triangles,method,w1,w1_bound,tv,tv_bound,remark_rate,verdict");
    CHECK(sweep_csv(sweep(spec)) == csv);  // deterministic
}

TEST_CASE("monte carlo sweep output is identical at any thread count") {
    SweepSpec spec;
    spec.family = GraphFamily::cycle;
    spec.sizes = {16, 64};
    spec.c_rule = *CRule::parse("sqrt");
    spec.options.method = Method::monte_carlo;
    spec.options.samples = 20'000;
    spec.options.seed = 9;
    spec.options.threads = 1;
    const std::string csv1 = sweep_csv(sweep(spec));
    spec.options.threads = 3;
    const std::string csv3 = sweep_csv(sweep(spec));
    CHECK(csv1 == csv3);
    for (const SweepRow& row : sweep(spec))
        CHECK(row.method == Method::monte_carlo);
}

TEST_CASE("standard test set composition and manifest stability") {
    const auto entries = standard_test_set();
    // 1023 five-vertex graphs + K6 + K7 + 3x3 named families + 3 matchings
    CHECK(entries.size() == 1023 + 2 + 9 + 3);
    std::set<std::string> names;
    for (const auto& e : entries) {
        CHECK(names.insert(e.name).second);  // unique names
        CHECK(!e.color_counts.empty());
        CHECK(e.graph.edge_count() >= 1);
        for (std::uint32_t c : e.color_counts)
            CHECK(c >= 2);
    }
    // K6/K7 restricted to c in {2,3}; size-16 single-component graphs lose c=4
    for (const auto& e : entries) {
        if (e.name == "complete:n=6" || e.name == "complete:n=7")
            CHECK(e.color_counts == std::vector<std::uint32_t>{2, 3});
        if (e.name == "cycle:n=16" || e.name == "star:n=16")
            CHECK(e.color_counts == std::vector<std::uint32_t>{2, 3});
        if (e.name == "matching:n=100")
            CHECK(e.color_counts == std::vector<std::uint32_t>{2, 3, 4});
    }
    CHECK(test_set_manifest() == test_set_manifest());
    CHECK(test_set_manifest().find("g5-0149") != std::string::npos);
}
