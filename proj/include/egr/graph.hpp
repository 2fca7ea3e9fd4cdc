#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace egr {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Geometric identity of a vertex: kind is "point", "line", "plane" or a
// copy tag such as "point'"; coords are field-element indices or, for lines
// of a generalized quadrangle, the indices of the points on the line.
struct VertexLabel {
    std::string kind;
    std::vector<std::uint32_t> coords;

    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

/// Simple undirected graph with sorted adjacency lists.
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on loops, repeated edges or out-of-range
    // endpoints.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const { return edge_count_; }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
    bool has_edge(Vertex u, Vertex v) const;

    // Edges (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    const std::vector<VertexLabel>& labels() const { return labels_; }
    void set_labels(std::vector<VertexLabel> labels);

    // Adjacency equality; labels are ignored.
    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
    std::vector<VertexLabel> labels_;
};

Graph remove_edge(const Graph& g, Vertex u, Vertex v);

inline constexpr std::uint32_t kUnreachable = UINT32_MAX;

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex root);

struct DistanceLayers {
    Vertex root = 0;
    std::vector<std::vector<Vertex>> layers;
};

DistanceLayers distance_layers(const Graph& g, Vertex root);

bool is_connected(const Graph& g);
// Two-colouring, or nullopt if the graph has an odd cycle.
std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<std::uint32_t> girth(const Graph& g);

/// Number of g-cycles through the edge {u, v}.  Throws std::invalid_argument
/// if {u, v} is not an edge or g is not the girth of the graph.
std::uint64_t count_girth_cycles_through_edge(const Graph& graph, Vertex u, Vertex v, std::uint32_t g);

/// Number of distinct cycles of the given length through v.
std::uint64_t count_cycles_through_vertex(const Graph& graph, Vertex v, std::uint32_t length);

struct EgrSignature {
    std::uint64_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t g = 0;
    std::uint64_t lambda = 0;
    bool bipartite = false;

    friend bool operator==(const EgrSignature&, const EgrSignature&) = default;
};

enum class EgrFailureKind { empty, disconnected, not_regular, degree_too_small, acyclic, lambda_not_constant };

std::string to_string(EgrFailureKind kind);

struct EgrFailure {
    EgrFailureKind kind = EgrFailureKind::empty;
    std::string message;
    std::optional<Vertex> witness_vertex;
    std::optional<Edge> witness_edge;
    // Extremes of the per-edge girth-cycle counts, set for lambda_not_constant.
    std::uint64_t min_lambda = 0;
    std::uint64_t max_lambda = 0;
};

using EgrResult = std::variant<EgrSignature, EgrFailure>;

EgrResult verify_egr(const Graph& g);

}  // namespace egr
