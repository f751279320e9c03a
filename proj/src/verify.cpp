#include "monoclt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "monoclt/metrics.hpp"

namespace monoclt {

namespace {

using nlohmann::json;

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

DiscreteDistribution summary_to_distribution(const SampleSummary& s) {
    std::vector<std::pair<double, double>> atoms;
    atoms.reserve(s.histogram.size());
    for (const auto& [y, cnt] : s.histogram)
        atoms.emplace_back(static_cast<double>(y), static_cast<double>(cnt));
    return make_distribution(std::move(atoms));
}

json bounds_to_json(const BoundReport& b) {
    json j{{"m", b.m},
           {"c", b.c},
           {"wasserstein_bound", b.wasserstein_bound},
           {"poisson_tv_bound", b.poisson_tv_bound},
           {"remark_rate", b.remark_rate},
           {"c0", b.c0},
           {"tv_vacuous", b.tv_vacuous},
           {"w1_vacuous", b.w1_vacuous},
           {"regime_hint", regime_name(b.regime_hint)}};
    if (b.k_m)
        j["k_m"] = *b.k_m;
    return j;
}

BoundReport bounds_from_json(const json& j) {
    BoundReport b;
    b.m = j.at("m").get<std::uint64_t>();
    b.c = j.at("c").get<std::uint32_t>();
    b.wasserstein_bound = j.at("wasserstein_bound").get<double>();
    b.poisson_tv_bound = j.at("poisson_tv_bound").get<double>();
    b.remark_rate = j.at("remark_rate").get<double>();
    b.c0 = j.at("c0").get<double>();
    b.tv_vacuous = j.at("tv_vacuous").get<bool>();
    b.w1_vacuous = j.at("w1_vacuous").get<bool>();
    const std::string regime = j.at("regime_hint").get<std::string>();
    for (RegimeHint r : {RegimeHint::poisson_favored, RegimeHint::normal_favored,
                         RegimeHint::both_vacuous})
        if (regime == regime_name(r))
            b.regime_hint = r;
    if (j.contains("k_m"))
        b.k_m = j.at("k_m").get<std::uint64_t>();
    return b;
}

}  // namespace

const char* method_name(Method m) {
    return m == Method::exact ? "exact" : "monte-carlo";
}

std::optional<Method> parse_method(const std::string& name) {
    if (name == "exact")
        return Method::exact;
    if (name == "monte-carlo" || name == "mc")
        return Method::monte_carlo;
    return std::nullopt;
}

double statistical_tolerance(std::uint64_t n_samples) {
    if (n_samples == 0)
        throw std::invalid_argument("statistical tolerance needs n >= 1");
    return 0.01 * std::sqrt(1e6 / static_cast<double>(n_samples));
}

VerificationReport verify_graph(const Graph& g, std::uint32_t c, const VerifyOptions& options,
                                const std::string& descriptor) {
    const std::uint64_t m = g.edge_count();
    if (m < 1)
        throw std::invalid_argument("verification needs a graph with at least one edge");
    if (c < 2)
        throw std::invalid_argument("verification needs c >= 2");

    VerificationReport report;
    report.descriptor = descriptor;
    report.graph_hash = g.hash_hex();
    report.m = m;
    report.c = c;
    report.method = options.method;

    const EdgeStats stats = edge_stats(g);
    report.bounds = make_bound_report(m, c, stats.k_m, options.c0);

    const IndicatorMoments im = edge_indicator_moments(m, c);
    report.lemma_results.push_back({"lemma1_abs_first_moment", im.abs_first, im.abs_first_bound,
                                    im.abs_first_bound - im.abs_first,
                                    im.abs_first <= im.abs_first_bound + 1e-12});
    report.lemma_results.push_back({"lemma1_second_moment", im.second, im.second_expected,
                                    im.second_expected - im.second,
                                    std::abs(im.second - im.second_expected) <= 1e-12});
    report.lemma_results.push_back({"lemma1_abs_third_moment", im.abs_third, im.abs_third_bound,
                                    im.abs_third_bound - im.abs_third,
                                    im.abs_third <= im.abs_third_bound + 1e-12});
    report.lemma_results.push_back(lemma2_check(stats));
    report.lemma_results.push_back(lemma3_check(stats));

    const double lambda = static_cast<double>(m) / c;
    double w1 = 0.0, tv = 0.0, tolerance = 0.0;
    if (options.method == Method::exact) {
        const DiscreteDistribution y_dist = exact_pmf(g, c, options.cap);
        const DiscreteDistribution w_dist = standardize_distribution(y_dist, m, c);
        w1 = wasserstein_to_normal(w_dist);
        tv = tv_to_poisson(y_dist, lambda);
    } else {
        if (options.samples < 1)
            throw std::invalid_argument("monte-carlo verification needs a sample budget");
        const ColoringConfig cfg{c, options.seed, options.stream_id};
        const SampleSummary summary = simulate(g, cfg, options.samples, options.threads);
        const DiscreteDistribution y_emp = summary_to_distribution(summary);
        const DiscreteDistribution w_emp = standardize_distribution(y_emp, m, c);
        w1 = wasserstein_to_normal(w_emp);
        tv = tv_to_poisson(y_emp, lambda);
        tolerance = statistical_tolerance(options.samples);
        report.statistical_tolerance = tolerance;
        report.samples = options.samples;
        report.seed = options.seed;
    }
    report.measured_wasserstein = w1;
    report.measured_tv_poisson = tv;

    // One-sided Monte Carlo verdicts: measured - tolerance <= bound.
    const double tv_bound_effective = std::min(kTvVacuityThreshold, report.bounds.poisson_tv_bound);
    ClaimResult w1_claim{"wasserstein_clt_bound", w1, report.bounds.wasserstein_bound,
                         report.bounds.wasserstein_bound - (w1 - tolerance),
                         w1 - tolerance <= report.bounds.wasserstein_bound};
    ClaimResult tv_claim{"poisson_tv_bound", tv, tv_bound_effective,
                         tv_bound_effective - (tv - tolerance),
                         tv - tolerance <= tv_bound_effective};
    report.claims = {w1_claim, tv_claim};

    report.all_pass = std::all_of(report.claims.begin(), report.claims.end(),
                                  [](const ClaimResult& r) { return r.pass; }) &&
                      std::all_of(report.lemma_results.begin(), report.lemma_results.end(),
                                  [](const LemmaCheck& r) { return r.pass; });
    return report;
}

std::string report_to_json(const VerificationReport& r) {
    json j;
    j["schema"] = kReportSchema;
    j["descriptor"] = r.descriptor;
    j["graph_hash"] = r.graph_hash;
    j["m"] = r.m;
    j["c"] = r.c;
    j["method"] = method_name(r.method);
    if (r.measured_wasserstein)
        j["measured_wasserstein"] = *r.measured_wasserstein;
    if (r.measured_tv_poisson)
        j["measured_tv_poisson"] = *r.measured_tv_poisson;
    j["bounds"] = bounds_to_json(r.bounds);
    j["lemma_results"] = json::array();
    for (const LemmaCheck& l : r.lemma_results)
        j["lemma_results"].push_back({{"name", l.name},
                                      {"value", l.value},
                                      {"bound", l.bound},
                                      {"slack", l.slack},
                                      {"pass", l.pass}});
    if (r.statistical_tolerance)
        j["statistical_tolerance"] = *r.statistical_tolerance;
    if (r.samples)
        j["samples"] = *r.samples;
    if (r.seed)
        j["seed"] = *r.seed;
    j["claims"] = json::array();
    for (const ClaimResult& c : r.claims)
        j["claims"].push_back({{"claim", c.claim},
                               {"measured", c.measured},
                               {"bound", c.bound},
                               {"slack", c.slack},
                               {"pass", c.pass}});
    j["verdict"] = r.all_pass ? "pass" : "fail";
    return j.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& json_text) {
    const json j = json::parse(json_text);
    if (j.at("schema").get<std::string>() != kReportSchema)
        throw std::invalid_argument("unsupported report schema");
    VerificationReport r;
    r.descriptor = j.at("descriptor").get<std::string>();
    r.graph_hash = j.at("graph_hash").get<std::string>();
    r.m = j.at("m").get<std::uint64_t>();
    r.c = j.at("c").get<std::uint32_t>();
    const auto method = parse_method(j.at("method").get<std::string>());
    if (!method)
        throw std::invalid_argument("unknown method in report");
    r.method = *method;
    if (j.contains("measured_wasserstein"))
        r.measured_wasserstein = j.at("measured_wasserstein").get<double>();
    if (j.contains("measured_tv_poisson"))
        r.measured_tv_poisson = j.at("measured_tv_poisson").get<double>();
    r.bounds = bounds_from_json(j.at("bounds"));
    for (const json& l : j.at("lemma_results"))
        r.lemma_results.push_back({l.at("name").get<std::string>(), l.at("value").get<double>(),
                                   l.at("bound").get<double>(), l.at("slack").get<double>(),
                                   l.at("pass").get<bool>()});
    if (j.contains("statistical_tolerance"))
        r.statistical_tolerance = j.at("statistical_tolerance").get<double>();
    if (j.contains("samples"))
        r.samples = j.at("samples").get<std::uint64_t>();
    if (j.contains("seed"))
        r.seed = j.at("seed").get<std::uint64_t>();
    for (const json& c : j.at("claims"))
        r.claims.push_back({c.at("claim").get<std::string>(), c.at("measured").get<double>(),
                            c.at("bound").get<double>(), c.at("slack").get<double>(),
                            c.at("pass").get<bool>()});
    r.all_pass = j.at("verdict").get<std::string>() == "pass";
    return r;
}

std::uint32_t CRule::apply(std::uint64_t m) const {
    double c = 0.0;
    switch (kind) {
        case Kind::fixed: c = value; break;
        case Kind::ceil_sqrt_m: c = std::ceil(std::sqrt(static_cast<double>(m))); break;
        case Kind::times_m: c = value * static_cast<double>(m); break;
    }
    const auto rounded = static_cast<std::uint32_t>(std::llround(std::ceil(c)));
    return std::max<std::uint32_t>(2, rounded);
}

std::optional<CRule> CRule::parse(const std::string& text) {
    if (text == "sqrt")
        return CRule{Kind::ceil_sqrt_m, 0.0};
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        return std::nullopt;
    const std::string head = text.substr(0, colon);
    double value = 0.0;
    try {
        value = std::stod(text.substr(colon + 1));
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (value <= 0.0)
        return std::nullopt;
    if (head == "fixed")
        return CRule{Kind::fixed, value};
    if (head == "times")
        return CRule{Kind::times_m, value};
    return std::nullopt;
}

std::string CRule::to_string() const {
    switch (kind) {
        case Kind::fixed: return "fixed:" + std::to_string(value);
        case Kind::ceil_sqrt_m: return "sqrt";
        case Kind::times_m: return "times:" + std::to_string(value);
    }
    return "?";
}

std::vector<SweepRow> sweep(const SweepSpec& spec) {
    std::vector<SweepRow> rows;
    rows.reserve(spec.sizes.size());
    for (std::uint32_t n : spec.sizes) {
        GenParams params;
        params.n = n;
        if (spec.family == GraphFamily::erdos_renyi) {
            params.p = spec.er_probability;
            params.seed = spec.graph_seed;
        }
        const Graph g = generate(spec.family, params);
        const EdgeStats stats = edge_stats(g);
        const std::uint32_t c = spec.c_rule.apply(g.edge_count());
        VerifyOptions options = spec.options;
        const VerificationReport report =
            verify_graph(g, c, options, std::string(family_name(spec.family)) + ":n=" +
                                             std::to_string(n));
        SweepRow row;
        row.family = family_name(spec.family);
        row.n = n;
        row.m = report.m;
        row.c = c;
        row.k_m = stats.k_m;
        row.triangles = stats.triangle_count;
        row.method = spec.options.method;
        row.w1 = *report.measured_wasserstein;
        row.w1_bound = report.bounds.wasserstein_bound;
        row.tv = *report.measured_tv_poisson;
        row.tv_bound = report.bounds.poisson_tv_bound;
        row.remark_rate = report.bounds.remark_rate;
        row.pass = report.all_pass;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << kSweepCsvHeader << "\n";
    for (const SweepRow& r : rows) {
        out << r.family << "," << r.n << "," << r.m << "," << r.c << "," << r.k_m << ","
            << r.triangles << "," << method_name(r.method) << "," << fmt17(r.w1) << ","
            << fmt17(r.w1_bound) << "," << fmt17(r.tv) << "," << fmt17(r.tv_bound) << ","
            << fmt17(r.remark_rate) << "," << (r.pass ? "pass" : "fail") << "\n";
    }
    return out.str();
}

std::vector<TestSetEntry> standard_test_set(std::uint64_t cap) {
    std::vector<TestSetEntry> entries;

    auto feasible_colors = [cap](const Graph& g, std::initializer_list<std::uint32_t> cs) {
        const ComponentPartition parts = connected_components(g);
        std::size_t largest = 0;
        for (const auto& block : parts.blocks)
            largest = std::max(largest, block.size());
        std::vector<std::uint32_t> ok;
        for (std::uint32_t c : cs) {
            std::uint64_t states = 1;
            bool fits = true;
            for (std::size_t i = 0; i < largest; ++i) {
                if (states > cap / c) {
                    fits = false;
                    break;
                }
                states *= c;
            }
            if (fits)
                ok.push_back(c);
        }
        return ok;
    };

    // Every labeled graph on 5 vertices with at least one edge, keyed by the
    // bitmask over the 10 vertex pairs in lexicographic order.
    std::vector<std::pair<VertexId, VertexId>> all_pairs;
    for (VertexId u = 0; u < 5; ++u)
        for (VertexId v = u + 1; v < 5; ++v)
            all_pairs.emplace_back(u, v);
    for (std::uint32_t mask = 1; mask < (1u << 10); ++mask) {
        std::vector<std::pair<VertexId, VertexId>> pairs;
        for (std::uint32_t bit = 0; bit < 10; ++bit)
            if (mask & (1u << bit))
                pairs.push_back(all_pairs[bit]);
        Graph g = Graph::from_edge_list(pairs, 5);
        char name[16];
        std::snprintf(name, sizeof name, "g5-%04u", mask);
        std::vector<std::uint32_t> cs = feasible_colors(g, {2, 3, 4});
        entries.push_back({name, std::move(g), std::move(cs)});
    }

    auto add = [&](const std::string& name, Graph g, std::initializer_list<std::uint32_t> cs) {
        auto ok = feasible_colors(g, cs);
        if (!ok.empty())
            entries.push_back({name, std::move(g), std::move(ok)});
    };

    auto sized = [](std::uint32_t n) {
        GenParams p;
        p.n = n;
        return p;
    };
    add("complete:n=6", generate(GraphFamily::complete, sized(6)), {2, 3});
    add("complete:n=7", generate(GraphFamily::complete, sized(7)), {2, 3});
    for (std::uint32_t n : {6u, 10u, 16u}) {
        add("cycle:n=" + std::to_string(n), generate(GraphFamily::cycle, sized(n)), {2, 3, 4});
        add("path:n=" + std::to_string(n), generate(GraphFamily::path, sized(n)), {2, 3, 4});
        add("star:n=" + std::to_string(n), generate(GraphFamily::star, sized(n)), {2, 3, 4});
    }
    for (std::uint32_t k : {5u, 10u, 100u})
        add("matching:n=" + std::to_string(k), generate(GraphFamily::matching, sized(k)),
            {2, 3, 4});
    return entries;
}

std::string test_set_manifest(std::uint64_t cap) {
    std::ostringstream out;
    out << "# name\tvertices\tm\tcolors\thash\n";
    for (const TestSetEntry& e : standard_test_set(cap)) {
        out << e.name << "\t" << e.graph.vertex_count() << "\t" << e.graph.edge_count() << "\t";
        for (std::size_t i = 0; i < e.color_counts.size(); ++i)
            out << (i ? "," : "") << e.color_counts[i];
        out << "\t" << e.graph.hash_hex() << "\n";
    }
    return out.str();
}

}  // namespace monoclt
