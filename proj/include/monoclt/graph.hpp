#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace monoclt {

using VertexId = std::uint32_t;

struct Edge {
    VertexId u;  // canonical: u < v
    VertexId v;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable simple graph: vertex count plus a canonicalized edge list.
// Edge labels follow input order after validation, so index-based
// constructions (neighborhoods, covariance pairs) are stable.
class Graph {
public:
    static Graph from_edge_list(const std::vector<std::pair<VertexId, VertexId>>& pairs,
                                VertexId vertex_count);

    VertexId vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const;

    std::uint32_t degree(VertexId v) const;
    // Sorted neighbor list of v.
    std::span<const VertexId> neighbors(VertexId v) const;
    // Sorted list of edge indices incident to v.
    std::span<const std::size_t> incident_edges(VertexId v) const;

    // FNV-1a over (vertex count, sorted edge list); stable across platforms.
    std::uint64_t hash() const;
    std::string hash_hex() const;

private:
    Graph() = default;
    void build_adjacency();

    VertexId vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> adj_offsets_;
    std::vector<VertexId> adj_vertices_;
    std::vector<std::size_t> adj_edges_;
};

enum class GraphFamily {
    complete,
    cycle,
    path,
    star,
    matching,
    complete_bipartite,
    erdos_renyi,
};

const char* family_name(GraphFamily f);
std::optional<GraphFamily> parse_family(const std::string& name);

struct GenParams {
    // complete/cycle/path/star: vertex count n.
    // matching: edge count n (2n vertices).
    // complete_bipartite: side sizes a, b.
    // erdos_renyi: n vertices, edge probability p, mandatory seed.
    std::uint32_t n = 0;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    double p = 0.0;
    std::optional<std::uint64_t> seed;
};

Graph generate(GraphFamily family, const GenParams& params);

// Per-edge d_i = min(deg(u), deg(v)), K_m = sum d_i, exact triangle count.
struct EdgeStats {
    std::size_t m = 0;
    std::vector<std::uint32_t> degrees;
    std::vector<std::uint32_t> min_degrees;
    std::uint64_t k_m = 0;
    std::uint64_t triangle_count = 0;
    std::vector<std::size_t> component_sizes;
};

EdgeStats edge_stats(const Graph& g);

// The lower-degree endpoint of edge i (ties broken toward the smaller
// vertex id), i.e. the vertex whose color X_i is resampled against.
VertexId anchor_vertex(const Graph& g, std::size_t i);

// Edge indices incident to the anchor vertex of edge i; contains i.
std::vector<std::size_t> neighborhood(const Graph& g, std::size_t i);

struct ComponentPartition {
    // Blocks ordered by smallest contained vertex; every vertex in exactly one.
    std::vector<std::vector<VertexId>> blocks;
    // component_of[v] = index into blocks.
    std::vector<std::size_t> component_of;
    // edge_component[i] = block index of edge i's endpoints.
    std::vector<std::size_t> edge_component;
};

ComponentPartition connected_components(const Graph& g);

// Edge-list text format: '#' starts a comment, an optional leading
// "# vertices N" header fixes the vertex count, then one "u v" pair per
// line. Without the header the vertex count is max endpoint + 1.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace monoclt
