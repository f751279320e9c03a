#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "monoclt/graph.hpp"

using namespace monoclt;

namespace {

Graph make(std::vector<std::pair<VertexId, VertexId>> pairs, VertexId n) {
    return Graph::from_edge_list(pairs, n);
}

GenParams sized(std::uint32_t n) {
    GenParams p;
    p.n = n;
    return p;
}

// Naive triangle count over all vertex triples.
std::uint64_t brute_triangles(const Graph& g) {
    std::set<std::pair<VertexId, VertexId>> edges;
    for (const Edge& e : g.edges())
        edges.insert({e.u, e.v});
    auto has = [&](VertexId a, VertexId b) {
        return edges.count({std::min(a, b), std::max(a, b)}) > 0;
    };
    std::uint64_t t = 0;
    for (VertexId a = 0; a < g.vertex_count(); ++a)
        for (VertexId b = a + 1; b < g.vertex_count(); ++b)
            for (VertexId c = b + 1; c < g.vertex_count(); ++c)
                t += has(a, b) && has(b, c) && has(a, c);
    return t;
}

}  // namespace

TEST_CASE("from_edge_list canonicalizes and validates") {
    const Graph g = make({{0, 1}}, 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.edge(0).u == 0);
    CHECK(g.edge(0).v == 1);

    CHECK_THROWS_AS(make({{0, 1}, {1, 0}}, 2), std::invalid_argument);  // reversed duplicate
    CHECK_THROWS_AS(make({{1, 1}}, 2), std::invalid_argument);          // self loop
    CHECK_THROWS_AS(make({{0, 2}}, 2), std::invalid_argument);          // out of range

    const Graph k3 = make({{0, 1}, {1, 2}, {0, 2}}, 3);
    CHECK(k3.edge_count() == 3);
    CHECK(make({{1, 0}}, 2).edge(0).u == 0);  // canonical order
}

TEST_CASE("generators match the family sizes") {
    const Graph k4 = generate(GraphFamily::complete, sized(4));
    CHECK(k4.edge_count() == 6);

    const Graph star6 = generate(GraphFamily::star, sized(6));
    CHECK(star6.edge_count() == 5);
    CHECK(star6.degree(0) == 5);

    const Graph c5 = generate(GraphFamily::cycle, sized(5));
    CHECK(c5.edge_count() == 5);
    for (VertexId v = 0; v < 5; ++v)
        CHECK(c5.degree(v) == 2);

    const Graph p4 = generate(GraphFamily::path, sized(4));
    CHECK(p4.edge_count() == 3);

    const Graph m3 = generate(GraphFamily::matching, sized(3));
    CHECK(m3.edge_count() == 3);
    CHECK(m3.vertex_count() == 6);

    GenParams bip;
    bip.a = 2;
    bip.b = 3;
    const Graph k23 = generate(GraphFamily::complete_bipartite, bip);
    CHECK(k23.edge_count() == 6);
    CHECK(k23.vertex_count() == 5);

    CHECK_THROWS_AS(generate(GraphFamily::cycle, sized(1)), std::invalid_argument);
    CHECK_THROWS_AS(generate(GraphFamily::complete, sized(0)), std::invalid_argument);
}

TEST_CASE("erdos-renyi generation is seed-reproducible and validated") {
    GenParams p = sized(50);
    p.p = 0.1;
    CHECK_THROWS_AS(generate(GraphFamily::erdos_renyi, p), std::invalid_argument);  // no seed
    p.seed = 7;
    const Graph a = generate(GraphFamily::erdos_renyi, p);
    const Graph b = generate(GraphFamily::erdos_renyi, p);
    CHECK(a.hash() == b.hash());
    p.seed = 8;
    const Graph c = generate(GraphFamily::erdos_renyi, p);
    CHECK(a.hash() != c.hash());
    p.p = 1.5;
    CHECK_THROWS_AS(generate(GraphFamily::erdos_renyi, p), std::invalid_argument);

    // p = 1 gives the complete graph, p = 0 the empty one
    GenParams full = sized(6);
    full.p = 1.0;
    full.seed = 1;
    CHECK(generate(GraphFamily::erdos_renyi, full).edge_count() == 15);
    full.p = 0.0;
    CHECK(generate(GraphFamily::erdos_renyi, full).edge_count() == 0);
}

TEST_CASE("edge stats on the named examples") {
    const EdgeStats k4 = edge_stats(generate(GraphFamily::complete, sized(4)));
    CHECK(k4.triangle_count == 4);
    CHECK(k4.k_m == 18);

    const EdgeStats star = edge_stats(generate(GraphFamily::star, sized(6)));
    CHECK(star.m == 5);
    for (std::uint32_t d : star.min_degrees)
        CHECK(d == 1);
    CHECK(star.k_m == 5);
    CHECK(star.triangle_count == 0);

    const EdgeStats c6 = edge_stats(generate(GraphFamily::cycle, sized(6)));
    for (std::uint32_t d : c6.min_degrees)
        CHECK(d == 2);
    CHECK(c6.k_m == 12);
    CHECK(c6.triangle_count == 0);
}

TEST_CASE("degree sum, triangle brute force, and lemma bounds over random graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        GenParams p = sized(12);
        p.p = 0.1 + 0.07 * static_cast<double>(seed % 5);
        p.seed = seed;
        const Graph g = generate(GraphFamily::erdos_renyi, p);
        const EdgeStats s = edge_stats(g);
        std::uint64_t degree_sum = 0;
        for (std::uint32_t d : s.degrees)
            degree_sum += d;
        CHECK(degree_sum == 2 * s.m);
        CHECK(s.triangle_count == brute_triangles(g));
        const double m32 = std::pow(static_cast<double>(s.m), 1.5);
        CHECK(static_cast<double>(s.k_m) <= std::sqrt(2.0) * m32 + 1e-9);
        CHECK(static_cast<double>(s.triangle_count) <= std::sqrt(2.0) / 3.0 * m32 + 1e-9);
        if (s.m >= 1)
            for (std::uint32_t d : s.min_degrees)
                CHECK(d >= 1);
    }
}

TEST_CASE("complete graphs stress the lemma bounds at the documented order") {
    for (std::uint32_t n : {4u, 8u, 16u, 32u}) {
        const Graph g = generate(GraphFamily::complete, sized(n));
        const EdgeStats s = edge_stats(g);
        CHECK(s.k_m == s.m * (n - 1));
        CHECK(s.triangle_count ==
              static_cast<std::uint64_t>(n) * (n - 1) * (n - 2) / 6);
        const double m32 = std::pow(static_cast<double>(s.m), 1.5);
        CHECK(static_cast<double>(s.k_m) <= std::sqrt(2.0) * m32);
        // K_m / (sqrt(2) m^(3/2)) -> 1 from below as n grows
        CHECK(static_cast<double>(s.k_m) >= 0.9 * std::sqrt(2.0) * m32 * std::sqrt(1.0 - 2.0 / n));
    }
}

TEST_CASE("neighborhood anchors at the min-degree endpoint") {
    const Graph star = generate(GraphFamily::star, sized(6));
    for (std::size_t i = 0; i < star.edge_count(); ++i)
        CHECK(neighborhood(star, i) == std::vector<std::size_t>{i});

    const Graph k3 = make({{0, 1}, {1, 2}, {0, 2}}, 3);
    CHECK(neighborhood(k3, 0) == std::vector<std::size_t>{0, 2});  // anchor 0 by tie-break

    const Graph path = make({{0, 1}, {1, 2}}, 3);
    CHECK(neighborhood(path, 0) == std::vector<std::size_t>{0});  // deg(0)=1 < deg(1)=2

    CHECK_THROWS_AS(neighborhood(path, 2), std::out_of_range);
}

TEST_CASE("neighborhood size equals d_i and contains i") {
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        GenParams p = sized(15);
        p.p = 0.3;
        p.seed = seed;
        const Graph g = generate(GraphFamily::erdos_renyi, p);
        const EdgeStats s = edge_stats(g);
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            const auto n_i = neighborhood(g, i);
            CHECK(std::count(n_i.begin(), n_i.end(), i) == 1);
            const Edge& e = g.edge(i);
            if (g.degree(e.u) != g.degree(e.v))
                CHECK(n_i.size() == s.min_degrees[i]);
            else
                CHECK(n_i.size() == g.degree(e.u));
        }
    }
}

TEST_CASE("connected components partition vertices and edges") {
    const auto m3 = connected_components(generate(GraphFamily::matching, sized(3)));
    CHECK(m3.blocks.size() == 3);
    for (const auto& b : m3.blocks)
        CHECK(b.size() == 2);

    const auto k5 = connected_components(generate(GraphFamily::complete, sized(5)));
    CHECK(k5.blocks.size() == 1);

    const auto empty = connected_components(make({}, 4));
    CHECK(empty.blocks.size() == 4);

    const Graph two = make({{0, 1}, {2, 3}, {3, 4}}, 6);
    const auto parts = connected_components(two);
    CHECK(parts.blocks.size() == 3);  // {0,1}, {2,3,4}, {5}
    CHECK(parts.edge_component[0] == parts.component_of[0]);
    CHECK(parts.edge_component[1] == parts.component_of[2]);
    CHECK(parts.edge_component[2] == parts.component_of[2]);
}

TEST_CASE("edge-list text round trip") {
    const Graph g = generate(GraphFamily::complete, sized(5));
    std::ostringstream out;
    write_edge_list(out, g);
    CHECK(out.str().substr(0, 12) == "# vertices 5");
    std::istringstream in(out.str());
    const Graph back = read_edge_list(in);
    CHECK(back.hash() == g.hash());

    std::istringstream messy("# comment\n1 0\n# vertices ignored mid-file\n2 0\n");
    const Graph m = read_edge_list(messy);
    CHECK(m.vertex_count() == 3);
    CHECK(m.edge(0).u == 0);  // canonicalized on read
    CHECK(m.edge(0).v == 1);

    std::istringstream header_only("# vertices 7\n0 1\n");
    CHECK(read_edge_list(header_only).vertex_count() == 7);

    std::istringstream bad("0 x\n");
    CHECK_THROWS_AS(read_edge_list(bad), std::invalid_argument);
}

TEST_CASE("hash is label-order independent but structure sensitive") {
    const Graph a = make({{0, 1}, {1, 2}}, 3);
    const Graph b = make({{1, 2}, {0, 1}}, 3);
    CHECK(a.hash() == b.hash());
    const Graph c = make({{0, 1}, {0, 2}}, 3);
    CHECK(a.hash() != c.hash());
    CHECK(a.hash_hex().size() == 16);
}
