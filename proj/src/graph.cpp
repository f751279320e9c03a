#include "monoclt/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "monoclt/rng.hpp"

namespace monoclt {

namespace {

constexpr std::uint64_t kEdgeGenDomain = 0x4552444F53524E59ull;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

Graph Graph::from_edge_list(const std::vector<std::pair<VertexId, VertexId>>& pairs,
                            VertexId vertex_count) {
    Graph g;
    g.vertex_count_ = vertex_count;
    g.edges_.reserve(pairs.size());
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& [a, b] : pairs) {
        if (a == b)
            fail("self-loop at vertex " + std::to_string(a));
        if (a >= vertex_count || b >= vertex_count)
            fail("edge endpoint out of range: (" + std::to_string(a) + ", " +
                 std::to_string(b) + ") with " + std::to_string(vertex_count) + " vertices");
        const Edge e{std::min(a, b), std::max(a, b)};
        if (!seen.insert({e.u, e.v}).second)
            fail("duplicate edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
        g.edges_.push_back(e);
    }
    g.build_adjacency();
    return g;
}

void Graph::build_adjacency() {
    std::vector<std::uint32_t> deg(vertex_count_, 0);
    for (const Edge& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    adj_offsets_.assign(vertex_count_ + 1, 0);
    for (VertexId v = 0; v < vertex_count_; ++v)
        adj_offsets_[v + 1] = adj_offsets_[v] + deg[v];
    adj_vertices_.resize(2 * edges_.size());
    adj_edges_.resize(2 * edges_.size());
    std::vector<std::uint32_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        adj_vertices_[cursor[e.u]] = e.v;
        adj_edges_[cursor[e.u]++] = i;
        adj_vertices_[cursor[e.v]] = e.u;
        adj_edges_[cursor[e.v]++] = i;
    }
    // Sort each vertex's slice by neighbor id; keep edge indices aligned.
    for (VertexId v = 0; v < vertex_count_; ++v) {
        const std::uint32_t lo = adj_offsets_[v], hi = adj_offsets_[v + 1];
        std::vector<std::pair<VertexId, std::size_t>> slice;
        slice.reserve(hi - lo);
        for (std::uint32_t k = lo; k < hi; ++k)
            slice.emplace_back(adj_vertices_[k], adj_edges_[k]);
        std::sort(slice.begin(), slice.end());
        for (std::uint32_t k = lo; k < hi; ++k) {
            adj_vertices_[k] = slice[k - lo].first;
            adj_edges_[k] = slice[k - lo].second;
        }
    }
}

const Edge& Graph::edge(std::size_t i) const {
    if (i >= edges_.size())
        throw std::out_of_range("edge index " + std::to_string(i) + " out of range");
    return edges_[i];
}

std::uint32_t Graph::degree(VertexId v) const {
    return adj_offsets_[v + 1] - adj_offsets_[v];
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    return {adj_vertices_.data() + adj_offsets_[v], adj_vertices_.data() + adj_offsets_[v + 1]};
}

std::span<const std::size_t> Graph::incident_edges(VertexId v) const {
    return {adj_edges_.data() + adj_offsets_[v], adj_edges_.data() + adj_offsets_[v + 1]};
}

std::uint64_t Graph::hash() const {
    constexpr std::uint64_t kOffset = 0xcbf29ce484222325ull;
    constexpr std::uint64_t kPrime = 0x100000001b3ull;
    std::uint64_t h = kOffset;
    auto feed = [&h](std::uint64_t word) {
        for (int i = 0; i < 8; ++i) {
            h ^= (word >> (8 * i)) & 0xff;
            h *= kPrime;
        }
    };
    feed(vertex_count_);
    std::vector<Edge> sorted = edges_;
    std::sort(sorted.begin(), sorted.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (const Edge& e : sorted)
        feed((static_cast<std::uint64_t>(e.u) << 32) | e.v);
    return h;
}

std::string Graph::hash_hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
    return buf;
}

const char* family_name(GraphFamily f) {
    switch (f) {
        case GraphFamily::complete: return "complete";
        case GraphFamily::cycle: return "cycle";
        case GraphFamily::path: return "path";
        case GraphFamily::star: return "star";
        case GraphFamily::matching: return "matching";
        case GraphFamily::complete_bipartite: return "complete_bipartite";
        case GraphFamily::erdos_renyi: return "erdos_renyi";
    }
    return "?";
}

std::optional<GraphFamily> parse_family(const std::string& name) {
    for (GraphFamily f : {GraphFamily::complete, GraphFamily::cycle, GraphFamily::path,
                          GraphFamily::star, GraphFamily::matching,
                          GraphFamily::complete_bipartite, GraphFamily::erdos_renyi}) {
        if (name == family_name(f))
            return f;
    }
    return std::nullopt;
}

Graph generate(GraphFamily family, const GenParams& params) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    const std::uint32_t n = params.n;
    switch (family) {
        case GraphFamily::complete: {
            if (n < 1) fail("complete graph needs n >= 1");
            for (VertexId u = 0; u < n; ++u)
                for (VertexId v = u + 1; v < n; ++v)
                    pairs.emplace_back(u, v);
            return Graph::from_edge_list(pairs, n);
        }
        case GraphFamily::cycle: {
            if (n < 3) fail("cycle needs n >= 3");
            for (VertexId v = 0; v + 1 < n; ++v)
                pairs.emplace_back(v, v + 1);
            pairs.emplace_back(n - 1, 0);
            return Graph::from_edge_list(pairs, n);
        }
        case GraphFamily::path: {
            if (n < 1) fail("path needs n >= 1");
            for (VertexId v = 0; v + 1 < n; ++v)
                pairs.emplace_back(v, v + 1);
            return Graph::from_edge_list(pairs, n);
        }
        case GraphFamily::star: {
            if (n < 1) fail("star needs n >= 1");
            for (VertexId v = 1; v < n; ++v)
                pairs.emplace_back(0, v);
            return Graph::from_edge_list(pairs, n);
        }
        case GraphFamily::matching: {
            if (n < 1) fail("matching needs n >= 1 edges");
            for (VertexId k = 0; k < n; ++k)
                pairs.emplace_back(2 * k, 2 * k + 1);
            return Graph::from_edge_list(pairs, 2 * n);
        }
        case GraphFamily::complete_bipartite: {
            if (params.a < 1 || params.b < 1) fail("complete_bipartite needs a, b >= 1");
            for (VertexId u = 0; u < params.a; ++u)
                for (VertexId v = 0; v < params.b; ++v)
                    pairs.emplace_back(u, params.a + v);
            return Graph::from_edge_list(pairs, params.a + params.b);
        }
        case GraphFamily::erdos_renyi: {
            if (n < 1) fail("erdos_renyi needs n >= 1");
            if (!(params.p >= 0.0 && params.p <= 1.0)) fail("erdos_renyi needs p in [0, 1]");
            if (!params.seed) fail("erdos_renyi needs an explicit seed");
            const philox::Key key = derive_key(*params.seed, kEdgeGenDomain);
            std::uint64_t pair_index = 0;
            for (VertexId u = 0; u < n; ++u) {
                for (VertexId v = u + 1; v < n; ++v, ++pair_index) {
                    const double r = to_unit_double(draw_u64(key, pair_index, 0, 0));
                    if (r < params.p)
                        pairs.emplace_back(u, v);
                }
            }
            return Graph::from_edge_list(pairs, n);
        }
    }
    fail("unknown graph family");
}

EdgeStats edge_stats(const Graph& g) {
    EdgeStats s;
    s.m = g.edge_count();
    s.degrees.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        s.degrees[v] = g.degree(v);
    s.min_degrees.reserve(s.m);
    for (const Edge& e : g.edges()) {
        const std::uint32_t d = std::min(s.degrees[e.u], s.degrees[e.v]);
        s.min_degrees.push_back(d);
        s.k_m += d;
    }
    // Edge-iterator triangle count: for edge (u, v) with u < v, common
    // neighbors w > v identify each triangle exactly once.
    std::uint64_t triangles = 0;
    for (const Edge& e : g.edges()) {
        const auto nu = g.neighbors(e.u);
        const auto nv = g.neighbors(e.v);
        auto iu = std::lower_bound(nu.begin(), nu.end(), e.v + 1);
        auto iv = std::lower_bound(nv.begin(), nv.end(), e.v + 1);
        while (iu != nu.end() && iv != nv.end()) {
            if (*iu < *iv) ++iu;
            else if (*iv < *iu) ++iv;
            else { ++triangles; ++iu; ++iv; }
        }
    }
    s.triangle_count = triangles;
    const ComponentPartition parts = connected_components(g);
    s.component_sizes.reserve(parts.blocks.size());
    for (const auto& block : parts.blocks)
        s.component_sizes.push_back(block.size());
    return s;
}

VertexId anchor_vertex(const Graph& g, std::size_t i) {
    const Edge& e = g.edge(i);
    const std::uint32_t du = g.degree(e.u), dv = g.degree(e.v);
    if (du != dv)
        return du < dv ? e.u : e.v;
    return e.u;  // tie: smaller id (u < v by canonicalization)
}

std::vector<std::size_t> neighborhood(const Graph& g, std::size_t i) {
    const VertexId a = anchor_vertex(g, i);
    const auto inc = g.incident_edges(a);
    std::vector<std::size_t> out(inc.begin(), inc.end());
    std::sort(out.begin(), out.end());
    return out;
}

ComponentPartition connected_components(const Graph& g) {
    ComponentPartition parts;
    const VertexId n = g.vertex_count();
    parts.component_of.assign(n, static_cast<std::size_t>(-1));
    std::vector<VertexId> stack;
    for (VertexId start = 0; start < n; ++start) {
        if (parts.component_of[start] != static_cast<std::size_t>(-1))
            continue;
        const std::size_t id = parts.blocks.size();
        parts.blocks.emplace_back();
        stack.push_back(start);
        parts.component_of[start] = id;
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            parts.blocks[id].push_back(v);
            for (VertexId w : g.neighbors(v)) {
                if (parts.component_of[w] == static_cast<std::size_t>(-1)) {
                    parts.component_of[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(parts.blocks[id].begin(), parts.blocks[id].end());
    }
    parts.edge_component.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        parts.edge_component.push_back(parts.component_of[e.u]);
    return parts;
}

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::optional<VertexId> declared;
    VertexId max_seen = 0;
    bool any_edge = false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string word;
            if (hs >> word && word == "vertices") {
                long long nv = -1;
                if (hs >> nv && nv >= 0)
                    declared = static_cast<VertexId>(nv);
            }
            continue;
        }
        std::istringstream ls(line);
        long long a = -1, b = -1;
        if (!(ls >> a >> b) || a < 0 || b < 0)
            fail("malformed edge line: '" + line + "'");
        pairs.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
        max_seen = std::max(max_seen, static_cast<VertexId>(std::max(a, b)));
        any_edge = true;
    }
    const VertexId n = declared ? *declared : (any_edge ? max_seen + 1 : 0);
    return Graph::from_edge_list(pairs, n);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open edge list: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# vertices " << g.vertex_count() << "\n";
    std::vector<Edge> sorted = g.edges();
    std::sort(sorted.begin(), sorted.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (const Edge& e : sorted)
        out << e.u << " " << e.v << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    write_edge_list(out, g);
}

}  // namespace monoclt
