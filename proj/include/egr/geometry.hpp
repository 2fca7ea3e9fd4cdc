#pragma once

#include "egr/galois.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace egr {

// Homogeneous coordinates, first nonzero coordinate equal to one.
struct ProjPoint {
    std::vector<FieldElement> coords;

    friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

// Plane of PG(3,q) in dual coordinates; x lies on it iff sum a_i x_i = 0.
struct ProjPlane {
    std::array<FieldElement, 4> dual_coords{};

    friend auto operator<=>(const ProjPlane&, const ProjPlane&) = default;
};

/// Points of PG(dim, q) for dim in {2, 3}, sorted lexicographically by
/// coordinate indices, with a dense coordinate lookup table.  Hyperplanes
/// share the index space of points through their dual coordinates.
class ProjectiveSpace {
public:
    ProjectiveSpace(Field field, unsigned dim);

    const Field& field() const { return field_; }
    unsigned dimension() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<ProjPoint>& points() const { return points_; }
    const ProjPoint& point(std::uint32_t i) const { return points_.at(i); }

    // Throws std::invalid_argument for the zero vector or a length mismatch.
    ProjPoint normalize(std::span<const FieldElement> coords) const;
    std::uint32_t index_of(std::span<const FieldElement> coords) const;

    FieldElement dot(const ProjPoint& a, const ProjPoint& b) const;

    // Points on the hyperplane with the given dual index, ascending.
    std::vector<std::uint32_t> hyperplane(std::uint32_t dual_index) const;
    // Points on the line through two distinct points, ascending.
    std::vector<std::uint32_t> line_through(std::uint32_t a, std::uint32_t b) const;

private:
    std::uint64_t code(std::span<const FieldElement> coords) const;

    Field field_;
    unsigned dim_;
    std::vector<ProjPoint> points_;
    std::vector<std::uint32_t> lookup_;
};

std::vector<ProjPoint> pg_points(unsigned dim, const Field& field);

// Point-block incidence structure.  Blocks are ascending point-index lists.
struct IncidenceGeometry {
    std::vector<ProjPoint> points;
    std::vector<std::vector<std::uint32_t>> blocks;
    // Dual coordinates of each block when blocks are hyperplanes; empty otherwise.
    std::vector<ProjPoint> block_coords;

    std::vector<std::vector<std::uint32_t>> point_blocks() const;
    bool incident(std::uint32_t point, std::uint32_t block) const;
};

IncidenceGeometry pg2_geometry(const Field& field);

// W(q): points of PG(3,q) and the lines totally isotropic for
// <x,y> = x0 y1 - x1 y0 + x2 y3 - x3 y2, lines sorted by point lists.
IncidenceGeometry symplectic_gq(const Field& field);

// nullopt when the geometry satisfies the axioms, otherwise a description
// of the first violation.
std::optional<std::string> check_projective_plane(const IncidenceGeometry& g, std::uint32_t q);
std::optional<std::string> check_generalized_quadrangle(const IncidenceGeometry& g, std::uint32_t q);

struct Ovoid {
    std::vector<std::uint32_t> points;
};

struct Spread {
    std::vector<std::uint32_t> lines;
};

struct PencilMember {
    std::vector<std::uint32_t> points;
};

/// Partition of PG(3,q) into q+1 caps of size q^2+1: the orbits of the
/// order-(q^2+1) subgroup of the Singer group of GF(q^4)*/GF(q)*.  Point
/// indices refer to ProjectiveSpace(field, 3).  Throws std::logic_error if
/// a postcondition fails.
std::vector<PencilMember> singer_pencil(const Field& field);

// No three of the points collinear.
bool is_cap(const ProjectiveSpace& space, std::span<const std::uint32_t> points);

/// The unique plane meeting the ovoid only in p.  Throws
/// std::invalid_argument if p is not on the ovoid, std::runtime_error if
/// the number of tangent planes through p is not one.
ProjPlane tangent_plane(const ProjectiveSpace& space, std::span<const std::uint32_t> ovoid, std::uint32_t p);

// Lexicographically smallest ovoid / spread of a GQ of order (q,q), or
// nullopt when none exists.
std::optional<Ovoid> ovoid_search(const IncidenceGeometry& gq);
std::optional<Spread> spread_search(const IncidenceGeometry& gq);

// Lexicographically smallest set of candidate indices covering every
// element of [0, universe) exactly once; candidates are ascending lists.
std::optional<std::vector<std::uint32_t>> lex_first_exact_cover(std::size_t universe,
                                                                const std::vector<std::vector<std::uint32_t>>& candidates);

}  // namespace egr
