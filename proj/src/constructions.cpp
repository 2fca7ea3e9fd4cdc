#include "egr/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace egr {

namespace {

VertexLabel point_label(const ProjPoint& p, std::string kind = "point") {
    VertexLabel l{std::move(kind), {}};
    for (auto c : p.coords) l.coords.push_back(c.index);
    return l;
}

void require_at_least_three(const Field& field) {
    if (field.order() < 3) {
        throw std::invalid_argument("q = " + std::to_string(field.order()) + " gives degree below 3");
    }
}

// Parses "name(value)" and returns value, or nullopt if name does not match.
std::optional<std::uint32_t> parse_call(std::string_view text, std::string_view name) {
    if (text.size() < name.size() + 3 || text.substr(0, name.size()) != name || text[name.size()] != '(' ||
        text.back() != ')') {
        return std::nullopt;
    }
    const auto arg = text.substr(name.size() + 1, text.size() - name.size() - 2);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
    if (ec != std::errc{} || ptr != arg.data() + arg.size()) {
        throw std::invalid_argument("bad argument in \"" + std::string(text) + "\"");
    }
    return value;
}

Graph petersen() {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph::from_edges(10, e);
}

// Robertson's pentagons and pentagrams: P(h,j) = 5h+j, Q(i,j) = 25+5i+j.
Graph hoffman_singleton() {
    std::vector<Edge> e;
    for (Vertex h = 0; h < 5; ++h) {
        for (Vertex j = 0; j < 5; ++j) {
            e.emplace_back(5 * h + j, 5 * h + (j + 1) % 5);
            e.emplace_back(25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5);
            for (Vertex i = 0; i < 5; ++i) e.emplace_back(5 * h + j, 25 + 5 * i + (h * i + j) % 5);
        }
    }
    return Graph::from_edges(50, e);
}

Graph complete_bipartite(std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("complete_bipartite needs k >= 1");
    std::vector<Edge> e;
    for (Vertex a = 0; a < k; ++a)
        for (Vertex b = 0; b < k; ++b) e.emplace_back(a, k + b);
    return Graph::from_edges(2 * k, e);
}

Graph cycle(std::uint32_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph full_levi(const IncidenceGeometry& g) {
    return levi_graph(g, std::vector<bool>(g.points.size(), true), std::vector<bool>(g.blocks.size(), true));
}

}  // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::biaffine1: return "biaffine1";
        case Family::biaffine2: return "biaffine2";
        case Family::gq_truncation: return "gq_truncation";
        case Family::ovoid_spread: return "ovoid_spread";
        case Family::pencil: return "pencil";
        case Family::named: return "named";
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
    for (auto f : {Family::biaffine1, Family::biaffine2, Family::gq_truncation, Family::ovoid_spread, Family::pencil,
                   Family::named}) {
        if (to_string(f) == name) return f;
    }
    return std::nullopt;
}

Field field_of_order(std::uint32_t q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t e = 0;
    std::uint32_t r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return Field::make(p, e);
}

Graph levi_graph(const IncidenceGeometry& geom, const std::vector<bool>& keep_points,
                 const std::vector<bool>& keep_blocks) {
    std::vector<Vertex> point_vertex(geom.points.size(), kUnreachable);
    std::vector<VertexLabel> labels;
    Vertex next = 0;
    for (std::uint32_t p = 0; p < geom.points.size(); ++p) {
        if (!keep_points[p]) continue;
        point_vertex[p] = next++;
        labels.push_back(point_label(geom.points[p]));
    }
    std::vector<Edge> edges;
    for (std::uint32_t b = 0; b < geom.blocks.size(); ++b) {
        if (!keep_blocks[b]) continue;
        const Vertex bv = next++;
        if (!geom.block_coords.empty()) {
            labels.push_back(point_label(geom.block_coords[b], "line"));
        } else {
            labels.push_back({"line", geom.blocks[b]});
        }
        for (auto p : geom.blocks[b]) {
            if (point_vertex[p] != kUnreachable) edges.emplace_back(point_vertex[p], bv);
        }
    }
    auto g = Graph::from_edges(next, edges);
    g.set_labels(std::move(labels));
    return g;
}

Graph build_biaffine(const Field& field, int type) {
    if (type != 1 && type != 2) throw std::invalid_argument("biaffine type must be 1 or 2");
    require_at_least_three(field);
    const auto geom = pg2_geometry(field);
    const std::uint32_t p = 0;
    std::uint32_t line = 0;
    while (geom.incident(p, line) != (type == 1)) ++line;

    std::vector<bool> keep_points(geom.points.size(), true);
    std::vector<bool> keep_blocks(geom.blocks.size(), true);
    keep_points[p] = false;
    keep_blocks[line] = false;
    for (auto r : geom.blocks[line]) keep_points[r] = false;
    for (std::uint32_t b = 0; b < geom.blocks.size(); ++b) {
        if (geom.incident(p, b)) keep_blocks[b] = false;
    }
    return levi_graph(geom, keep_points, keep_blocks);
}

Graph build_gq_truncation(const Field& field) {
    require_at_least_three(field);
    const auto geom = symplectic_gq(field);
    const auto pb = geom.point_blocks();
    const std::uint32_t p = 0;
    const auto& lines_through_p = pb[p];

    std::vector<bool> keep_points(geom.points.size(), true);
    std::vector<bool> keep_blocks(geom.blocks.size(), true);
    keep_points[p] = false;
    for (auto l : lines_through_p) {
        for (auto r : geom.blocks[l]) keep_points[r] = false;
    }
    for (auto r : geom.blocks[lines_through_p.front()]) {
        for (auto l : pb[r]) keep_blocks[l] = false;
    }
    return levi_graph(geom, keep_points, keep_blocks);
}

Graph build_ovoid_spread(const Field& field) {
    const auto q = field.order();
    if (q == 2) throw std::invalid_argument("q = 2 gives degree below 3");
    if (q % 2 == 1) throw std::invalid_argument("ovoid does not exist for odd q");
    const auto geom = symplectic_gq(field);
    const auto ovoid = ovoid_search(geom);
    const auto spread = spread_search(geom);
    if (!ovoid) throw std::invalid_argument("ovoid does not exist");
    if (!spread) throw std::invalid_argument("spread does not exist");

    std::vector<bool> keep_points(geom.points.size(), true);
    std::vector<bool> keep_blocks(geom.blocks.size(), true);
    for (auto p : ovoid->points) keep_points[p] = false;
    for (auto l : spread->lines) keep_blocks[l] = false;
    return levi_graph(geom, keep_points, keep_blocks);
}

Graph build_pencil_graph(const Field& field) {
    const ProjectiveSpace space(field, 3);
    const auto pencil = singer_pencil(field);
    const auto n = static_cast<Vertex>(space.size());

    std::vector<Edge> edges;
    for (const auto& member : pencil) {
        for (auto p : member.points) {
            const auto plane = tangent_plane(space, member.points, p);
            for (auto r : space.hyperplane(space.index_of(plane.dual_coords))) edges.emplace_back(p, n + r);
        }
    }
    auto g = Graph::from_edges(2 * n, edges);
    std::vector<VertexLabel> labels;
    for (const auto& pt : space.points()) labels.push_back(point_label(pt));
    for (const auto& pt : space.points()) labels.push_back(point_label(pt, "point'"));
    g.set_labels(std::move(labels));
    return g;
}

Graph named_graph(std::string_view name) {
    if (name == "petersen") return petersen();
    if (name == "hoffman_singleton") return hoffman_singleton();
    if (name == "heawood") return full_levi(pg2_geometry(Field::make(2, 1)));
    if (name == "tutte_coxeter") return full_levi(symplectic_gq(Field::make(2, 1)));
    if (auto k = parse_call(name, "complete_bipartite")) return complete_bipartite(*k);
    if (auto n = parse_call(name, "cycle")) return cycle(*n);
    throw std::invalid_argument("unknown graph name \"" + std::string(name) + "\"");
}

Graph build(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::named: return named_graph(spec.name);
        case Family::biaffine1: return build_biaffine(field_of_order(spec.q), 1);
        case Family::biaffine2: return build_biaffine(field_of_order(spec.q), 2);
        case Family::gq_truncation: return build_gq_truncation(field_of_order(spec.q));
        case Family::ovoid_spread: return build_ovoid_spread(field_of_order(spec.q));
        case Family::pencil: return build_pencil_graph(field_of_order(spec.q));
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace egr
