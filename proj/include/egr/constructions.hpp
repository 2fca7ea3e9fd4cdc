#pragma once

#include "egr/galois.hpp"
#include "egr/geometry.hpp"
#include "egr/graph.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace egr {

enum class Family { biaffine1, biaffine2, gq_truncation, ovoid_spread, pencil, named };

std::string to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

struct FamilySpec {
    Family family = Family::named;
    std::uint32_t q = 0;
    // reference-graph identifier, used by Family::named
    std::string name;
};

// GF(q) for a prime power q; throws std::invalid_argument otherwise.
Field field_of_order(std::uint32_t q);

// Incidence graph of the geometry restricted to the kept points and blocks.
// Points come first, then blocks, each in ascending index order.
Graph levi_graph(const IncidenceGeometry& geom, const std::vector<bool>& keep_points,
                 const std::vector<bool>& keep_blocks);

/// Levi graph of a biaffine plane: PG(2,q) minus a point P, a line l, the
/// lines through P and the points on l.  Type 1 takes P on l, type 2 off l;
/// in both cases P is point 0 and l the first admissible line.
Graph build_biaffine(const Field& field, int type);

/// W(q) minus its smallest point P, every point on a line through P, and
/// every line meeting the first line through P.
Graph build_gq_truncation(const Field& field);

/// Levi graph of W(q) minus the lexicographically first ovoid and spread.
/// q must be even and at least 4.
Graph build_ovoid_spread(const Field& field);

/// Bipartite graph on two copies of PG(3,q): p ~ r' iff r lies on the
/// tangent plane at p of the Singer pencil member through p.
Graph build_pencil_graph(const Field& field);

/// petersen, hoffman_singleton, heawood, tutte_coxeter,
/// complete_bipartite(k), cycle(n).
Graph named_graph(std::string_view name);

Graph build(const FamilySpec& spec);

}  // namespace egr
