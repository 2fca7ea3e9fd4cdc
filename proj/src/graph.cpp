#include "egr/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace egr {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.adj_.resize(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& a = g.adj_[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
            throw std::invalid_argument("parallel edge at vertex " + std::to_string(v));
        }
    }
    g.edge_count_ = edges.size();
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& a = adj_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
        for (auto v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

void Graph::set_labels(std::vector<VertexLabel> labels) {
    if (!labels.empty() && labels.size() != adj_.size()) throw std::invalid_argument("one label per vertex required");
    labels_ = std::move(labels);
}

Graph remove_edge(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("not an edge");
    auto edges = g.edges();
    std::erase(edges, Edge{std::min(u, v), std::max(u, v)});
    return Graph::from_edges(g.order(), edges);
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex root) {
    std::vector<std::uint32_t> dist(g.order(), kUnreachable);
    std::deque<Vertex> queue{root};
    dist.at(root) = 0;
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        for (auto y : g.neighbors(x)) {
            if (dist[y] == kUnreachable) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

DistanceLayers distance_layers(const Graph& g, Vertex root) {
    DistanceLayers out;
    out.root = root;
    const auto dist = bfs_distances(g, root);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (dist[v] == kUnreachable) continue;
        if (out.layers.size() <= dist[v]) out.layers.resize(dist[v] + 1);
        out.layers[dist[v]].push_back(v);
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    const auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreachable; });
}

std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g) {
    constexpr std::uint8_t kUnset = 2;
    std::vector<std::uint8_t> colour(g.order(), kUnset);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (colour[s] != kUnset) continue;
        colour[s] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop_front();
            for (auto y : g.neighbors(x)) {
                if (colour[y] == kUnset) {
                    colour[y] = colour[x] ^ 1;
                    queue.push_back(y);
                } else if (colour[y] == colour[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    return colour;
}

std::optional<std::uint32_t> girth(const Graph& g) {
    std::uint32_t best = kUnreachable;
    std::vector<std::uint32_t> dist(g.order());
    std::vector<Vertex> parent(g.order());
    std::deque<Vertex> queue;
    for (Vertex root = 0; root < g.order(); ++root) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        dist[root] = 0;
        parent[root] = root;
        queue.assign(1, root);
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop_front();
            if (2 * dist[x] + 1 >= best) break;
            for (auto y : g.neighbors(x)) {
                if (dist[y] == kUnreachable) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (y != parent[x]) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if (best == kUnreachable) return std::nullopt;
    return best;
}

namespace {

// Simple paths of exactly `length` edges from `from` to `to`, pruned by the
// BFS distance to `to`.
class PathCounter {
public:
    PathCounter(const Graph& g, Vertex to) : g_(g), to_(to), dist_(bfs_distances(g, to)), on_path_(g.order(), false) {}

    std::uint64_t count(Vertex from, std::uint32_t length) {
        if (dist_[from] > length) return 0;
        on_path_[from] = true;
        const auto total = extend(from, length);
        on_path_[from] = false;
        return total;
    }

private:
    std::uint64_t extend(Vertex x, std::uint32_t remaining) {
        std::uint64_t total = 0;
        for (auto y : g_.neighbors(x)) {
            if (y == to_) {
                if (remaining == 1) ++total;
                continue;
            }
            if (on_path_[y] || dist_[y] > remaining - 1) continue;
            on_path_[y] = true;
            total += extend(y, remaining - 1);
            on_path_[y] = false;
        }
        return total;
    }

    const Graph& g_;
    Vertex to_;
    std::vector<std::uint32_t> dist_;
    std::vector<bool> on_path_;
};

std::uint64_t girth_cycles_through_edge(const Graph& graph, Vertex u, Vertex v, std::uint32_t g) {
    const Vertex a = std::min(u, v);
    const Vertex b = std::max(u, v);
    PathCounter counter(graph, b);
    return counter.count(a, g - 1);
}

}  // namespace

std::uint64_t count_girth_cycles_through_edge(const Graph& graph, Vertex u, Vertex v, std::uint32_t g) {
    if (u >= graph.order() || v >= graph.order() || !graph.has_edge(u, v)) {
        throw std::invalid_argument("{" + std::to_string(u) + ", " + std::to_string(v) + "} is not an edge");
    }
    const auto actual = girth(graph);
    if (!actual || *actual != g) {
        throw std::invalid_argument("requested length " + std::to_string(g) + " is not the girth");
    }
    return girth_cycles_through_edge(graph, u, v, g);
}

std::uint64_t count_cycles_through_vertex(const Graph& graph, Vertex v, std::uint32_t length) {
    if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
    const auto dist = bfs_distances(graph, v);
    std::vector<bool> on_path(graph.order(), false);
    on_path[v] = true;
    Vertex second = v;
    std::uint64_t total = 0;

    // depth = number of edges walked so far from v
    auto walk = [&](auto&& self, Vertex x, std::uint32_t depth) -> void {
        if (depth == length - 1) {
            // close the cycle; fixing second < last counts each orientation once
            if (graph.has_edge(x, v) && second < x) ++total;
            return;
        }
        for (auto y : graph.neighbors(x)) {
            if (on_path[y] || dist[y] > length - depth - 1) continue;
            on_path[y] = true;
            if (depth == 0) second = y;
            self(self, y, depth + 1);
            on_path[y] = false;
        }
    };
    walk(walk, v, 0);
    return total;
}

std::string to_string(EgrFailureKind kind) {
    switch (kind) {
        case EgrFailureKind::empty: return "empty graph";
        case EgrFailureKind::disconnected: return "not connected";
        case EgrFailureKind::not_regular: return "not regular";
        case EgrFailureKind::degree_too_small: return "degree below 3";
        case EgrFailureKind::acyclic: return "acyclic";
        case EgrFailureKind::lambda_not_constant: return "girth-cycle count not constant";
    }
    return "unknown";
}

EgrResult verify_egr(const Graph& g) {
    auto fail = [](EgrFailureKind kind, std::string message) {
        EgrFailure f;
        f.kind = kind;
        f.message = std::move(message);
        return f;
    };
    if (g.order() == 0) return fail(EgrFailureKind::empty, "graph has no vertices");

    const auto dist = bfs_distances(g, 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (dist[v] == kUnreachable) {
            auto f = fail(EgrFailureKind::disconnected, "vertex " + std::to_string(v) + " is unreachable from vertex 0");
            f.witness_vertex = v;
            return f;
        }
    }

    std::size_t k = 0;
    for (Vertex v = 0; v < g.order(); ++v) k = std::max(k, g.degree(v));
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) != k) {
            auto f = fail(EgrFailureKind::not_regular, "vertex " + std::to_string(v) + " has degree " +
                                                           std::to_string(g.degree(v)) + ", maximum degree is " +
                                                           std::to_string(k));
            f.witness_vertex = v;
            return f;
        }
    }
    if (k < 3) {
        auto f = fail(EgrFailureKind::degree_too_small, "degree " + std::to_string(k) + " is below 3");
        f.witness_vertex = 0;
        return f;
    }

    const auto gi = girth(g);
    if (!gi) return fail(EgrFailureKind::acyclic, "graph has no cycles");

    std::optional<std::uint64_t> lambda;
    std::uint64_t lo = UINT64_MAX;
    std::uint64_t hi = 0;
    std::optional<Edge> deviant;
    for (auto [u, v] : g.edges()) {
        const auto c = girth_cycles_through_edge(g, u, v, *gi);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
        if (!lambda) {
            lambda = c;
        } else if (c != *lambda && !deviant) {
            deviant = Edge{u, v};
        }
    }
    if (deviant) {
        auto f = fail(EgrFailureKind::lambda_not_constant,
                      "edge {" + std::to_string(deviant->first) + ", " + std::to_string(deviant->second) +
                          "} lies on a different number of " + std::to_string(*gi) + "-cycles than the first edge");
        f.witness_edge = deviant;
        f.min_lambda = lo;
        f.max_lambda = hi;
        return f;
    }

    EgrSignature sig;
    sig.n = g.order();
    sig.k = static_cast<std::uint32_t>(k);
    sig.g = *gi;
    sig.lambda = *lambda;
    sig.bipartite = bipartition(g).has_value();
    return sig;
}

}  // namespace egr
