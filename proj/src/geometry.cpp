#include "egr/geometry.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace egr {

namespace {

constexpr std::uint32_t kNoPoint = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint64_t kMaxLookup = std::uint64_t{1} << 24;

std::vector<std::vector<bool>> collinearity(const IncidenceGeometry& g) {
    std::vector<std::vector<bool>> col(g.points.size(), std::vector<bool>(g.points.size(), false));
    for (const auto& block : g.blocks) {
        for (auto a : block)
            for (auto b : block) col[a][b] = true;
    }
    return col;
}

}  // namespace

ProjectiveSpace::ProjectiveSpace(Field field, unsigned dim) : field_(std::move(field)), dim_(dim) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("projective dimension must be 2 or 3");
    const std::uint64_t q = field_.order();
    std::uint64_t total = 1;
    for (unsigned i = 0; i <= dim; ++i) {
        total *= q;
        if (total > kMaxLookup) throw std::invalid_argument("projective space too large");
    }
    lookup_.assign(total, kNoPoint);
    std::vector<FieldElement> coords(dim + 1);
    // Increasing code order is lexicographic order, first coordinate most significant.
    for (std::uint64_t c = 1; c < total; ++c) {
        std::uint64_t v = c;
        for (unsigned i = dim + 1; i-- > 0;) {
            coords[i] = {static_cast<std::uint32_t>(v % q)};
            v /= q;
        }
        auto first = std::find_if(coords.begin(), coords.end(), [](FieldElement x) { return x.index != 0; });
        if (first->index != 1) continue;
        lookup_[c] = static_cast<std::uint32_t>(points_.size());
        points_.push_back({coords});
    }
}

std::uint64_t ProjectiveSpace::code(std::span<const FieldElement> coords) const {
    std::uint64_t c = 0;
    for (auto x : coords) c = c * field_.order() + x.index;
    return c;
}

ProjPoint ProjectiveSpace::normalize(std::span<const FieldElement> coords) const {
    if (coords.size() != dim_ + 1) throw std::invalid_argument("coordinate vector has wrong length");
    auto first = std::find_if(coords.begin(), coords.end(), [](FieldElement x) { return x.index != 0; });
    if (first == coords.end()) throw std::invalid_argument("zero vector is not a projective point");
    const FieldElement scale = field_.inv(*first);
    ProjPoint out;
    out.coords.reserve(coords.size());
    for (auto x : coords) out.coords.push_back(field_.mul(x, scale));
    return out;
}

std::uint32_t ProjectiveSpace::index_of(std::span<const FieldElement> coords) const {
    return lookup_[code(normalize(coords).coords)];
}

FieldElement ProjectiveSpace::dot(const ProjPoint& a, const ProjPoint& b) const {
    FieldElement s = field_.zero();
    for (std::size_t i = 0; i < a.coords.size(); ++i) s = field_.add(s, field_.mul(a.coords[i], b.coords[i]));
    return s;
}

std::vector<std::uint32_t> ProjectiveSpace::hyperplane(std::uint32_t dual_index) const {
    const auto& a = point(dual_index);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < points_.size(); ++i) {
        if (dot(a, points_[i]) == field_.zero()) out.push_back(i);
    }
    return out;
}

std::vector<std::uint32_t> ProjectiveSpace::line_through(std::uint32_t a, std::uint32_t b) const {
    if (a == b) throw std::invalid_argument("line needs two distinct points");
    const auto& pa = point(a).coords;
    const auto& pb = point(b).coords;
    std::vector<std::uint32_t> out{a};
    std::vector<FieldElement> v(dim_ + 1);
    for (std::uint32_t t = 0; t < field_.order(); ++t) {
        for (unsigned i = 0; i <= dim_; ++i) v[i] = field_.add(field_.mul({t}, pa[i]), pb[i]);
        out.push_back(index_of(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ProjPoint> pg_points(unsigned dim, const Field& field) { return ProjectiveSpace(field, dim).points(); }

std::vector<std::vector<std::uint32_t>> IncidenceGeometry::point_blocks() const {
    std::vector<std::vector<std::uint32_t>> out(points.size());
    for (std::uint32_t b = 0; b < blocks.size(); ++b) {
        for (auto p : blocks[b]) out[p].push_back(b);
    }
    return out;
}

bool IncidenceGeometry::incident(std::uint32_t point, std::uint32_t block) const {
    const auto& bl = blocks.at(block);
    return std::binary_search(bl.begin(), bl.end(), point);
}

IncidenceGeometry pg2_geometry(const Field& field) {
    ProjectiveSpace space(field, 2);
    IncidenceGeometry g;
    g.points = space.points();
    g.block_coords = space.points();
    for (std::uint32_t a = 0; a < space.size(); ++a) g.blocks.push_back(space.hyperplane(a));
    return g;
}

IncidenceGeometry symplectic_gq(const Field& field) {
    ProjectiveSpace space(field, 3);
    const auto& f = space.field();
    auto form = [&](const ProjPoint& x, const ProjPoint& y) {
        const auto& a = x.coords;
        const auto& b = y.coords;
        auto t1 = f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]));
        auto t2 = f.sub(f.mul(a[2], b[3]), f.mul(a[3], b[2]));
        return f.add(t1, t2);
    };
    std::set<std::vector<std::uint32_t>> lines;
    const auto n = static_cast<std::uint32_t>(space.size());
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = a + 1; b < n; ++b) {
            if (form(space.point(a), space.point(b)) == f.zero()) lines.insert(space.line_through(a, b));
        }
    }
    IncidenceGeometry g;
    g.points = space.points();
    g.blocks.assign(lines.begin(), lines.end());
    return g;
}

std::optional<std::string> check_projective_plane(const IncidenceGeometry& g, std::uint32_t q) {
    const std::size_t n = std::size_t{q} * q + q + 1;
    if (g.points.size() != n) return "wrong number of points";
    if (g.blocks.size() != n) return "wrong number of lines";
    for (std::size_t b = 0; b < n; ++b) {
        if (g.blocks[b].size() != q + 1) return "line " + std::to_string(b) + " does not have q+1 points";
    }
    auto pb = g.point_blocks();
    for (std::size_t p = 0; p < n; ++p) {
        if (pb[p].size() != q + 1) return "point " + std::to_string(p) + " is not on q+1 lines";
    }
    std::vector<std::vector<std::uint32_t>> common(n, std::vector<std::uint32_t>(n, 0));
    for (const auto& block : g.blocks) {
        for (auto a : block)
            for (auto b : block) ++common[a][b];
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (common[a][b] != 1) {
                return "points " + std::to_string(a) + " and " + std::to_string(b) + " lie on " +
                       std::to_string(common[a][b]) + " common lines";
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_generalized_quadrangle(const IncidenceGeometry& g, std::uint32_t q) {
    const std::size_t np = (std::size_t{q} + 1) * (std::size_t{q} * q + 1);
    if (g.points.size() != np) return "wrong number of points";
    if (g.blocks.size() != np) return "wrong number of lines";
    for (std::size_t b = 0; b < g.blocks.size(); ++b) {
        if (g.blocks[b].size() != q + 1) return "line " + std::to_string(b) + " does not have q+1 points";
    }
    auto pb = g.point_blocks();
    for (std::size_t p = 0; p < np; ++p) {
        if (pb[p].size() != q + 1) return "point " + std::to_string(p) + " is not on q+1 lines";
    }
    auto col = collinearity(g);
    for (std::uint32_t p = 0; p < np; ++p) {
        for (std::uint32_t l = 0; l < g.blocks.size(); ++l) {
            if (g.incident(p, l)) continue;
            std::size_t traces = 0;
            for (auto r : g.blocks[l]) {
                if (col[p][r]) ++traces;
            }
            if (traces != 1) {
                return "non-incident pair (" + std::to_string(p) + ", " + std::to_string(l) + ") has " +
                       std::to_string(traces) + " trace pairs";
            }
        }
    }
    return std::nullopt;
}

bool is_cap(const ProjectiveSpace& space, std::span<const std::uint32_t> points) {
    std::vector<bool> member(space.size(), false);
    for (auto p : points) member[p] = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            std::size_t on = 0;
            for (auto r : space.line_through(points[i], points[j])) {
                if (member[r]) ++on;
            }
            if (on > 2) return false;
        }
    }
    return true;
}

std::vector<PencilMember> singer_pencil(const Field& field) {
    ProjectiveSpace space(field, 3);
    const auto ext = Field::extension(field, 4);
    const std::uint64_t q = field.order();
    const std::uint64_t n = space.size();
    const std::uint64_t members = q + 1;

    std::vector<PencilMember> pencil(members);
    std::vector<bool> seen(n, false);
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto coords = ext.coordinates(ext.exp(i));
        const auto idx = space.index_of(coords);
        if (seen[idx]) throw std::logic_error("Singer powers repeat a point");
        seen[idx] = true;
        pencil[i % members].points.push_back(idx);
    }
    for (auto& m : pencil) {
        std::sort(m.points.begin(), m.points.end());
        if (m.points.size() != q * q + 1) throw std::logic_error("pencil member has wrong size");
        if (!is_cap(space, m.points)) throw std::logic_error("pencil member is not a cap");
    }
    return pencil;
}

ProjPlane tangent_plane(const ProjectiveSpace& space, std::span<const std::uint32_t> ovoid, std::uint32_t p) {
    if (space.dimension() != 3) throw std::invalid_argument("tangent planes need PG(3,q)");
    if (std::find(ovoid.begin(), ovoid.end(), p) == ovoid.end()) throw std::invalid_argument("point not on the ovoid");
    const auto& f = space.field();
    const auto& point = space.point(p);
    std::optional<std::uint32_t> found;
    std::size_t tangents = 0;
    for (std::uint32_t a = 0; a < space.size(); ++a) {
        const auto& plane = space.point(a);
        if (space.dot(plane, point) != f.zero()) continue;
        std::size_t meet = 0;
        for (auto r : ovoid) {
            if (space.dot(plane, space.point(r)) == f.zero()) ++meet;
        }
        if (meet == 1) {
            ++tangents;
            found = a;
        }
    }
    if (tangents != 1) {
        throw std::runtime_error("point " + std::to_string(p) + " has " + std::to_string(tangents) +
                                 " tangent planes; the set is not an ovoid");
    }
    ProjPlane out;
    const auto& c = space.point(*found).coords;
    std::copy(c.begin(), c.end(), out.dual_coords.begin());
    return out;
}

std::optional<std::vector<std::uint32_t>> lex_first_exact_cover(std::size_t universe,
                                                                const std::vector<std::vector<std::uint32_t>>& candidates) {
    const auto count = static_cast<std::uint32_t>(candidates.size());
    std::vector<std::vector<std::uint32_t>> containing(universe);
    for (std::uint32_t c = 0; c < count; ++c) {
        for (auto e : candidates[c]) containing.at(e).push_back(c);
    }
    std::vector<bool> covered(universe, false);
    std::size_t remaining = universe;
    std::vector<std::uint32_t> chosen;

    auto available = [&](std::uint32_t c) {
        return std::none_of(candidates[c].begin(), candidates[c].end(), [&](std::uint32_t e) { return covered[e]; });
    };
    auto set_cover = [&](std::uint32_t c, bool value) {
        for (auto e : candidates[c]) covered[e] = value;
        if (value) {
            remaining -= candidates[c].size();
        } else {
            remaining += candidates[c].size();
        }
    };

    // Chosen indices increase along a branch, so every uncovered element needs
    // an available candidate at or beyond `start`.
    auto search = [&](auto&& self, std::uint32_t start) -> bool {
        if (remaining == 0) return true;
        std::optional<std::uint32_t> limit;
        for (std::size_t e = 0; e < universe; ++e) {
            if (covered[e]) continue;
            std::optional<std::uint32_t> last;
            for (auto it = containing[e].rbegin(); it != containing[e].rend() && *it >= start; ++it) {
                if (available(*it)) {
                    last = *it;
                    break;
                }
            }
            if (!last) return false;
            if (!limit || *last < *limit) limit = last;
        }
        for (std::uint32_t c = start; c <= *limit; ++c) {
            if (!available(c)) continue;
            set_cover(c, true);
            chosen.push_back(c);
            if (self(self, c + 1)) return true;
            chosen.pop_back();
            set_cover(c, false);
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    return chosen;
}

std::optional<Ovoid> ovoid_search(const IncidenceGeometry& gq) {
    auto cover = lex_first_exact_cover(gq.blocks.size(), gq.point_blocks());
    if (!cover) return std::nullopt;
    return Ovoid{*cover};
}

std::optional<Spread> spread_search(const IncidenceGeometry& gq) {
    auto cover = lex_first_exact_cover(gq.points.size(), gq.blocks);
    if (!cover) return std::nullopt;
    return Spread{*cover};
}

}  // namespace egr
