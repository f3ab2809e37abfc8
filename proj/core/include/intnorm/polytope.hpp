#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace intnorm {

using Point = std::vector<std::int64_t>;

/// Integer-vertex polytope, stored as its extreme points in lexicographic
/// order.  Two polytopes are equal exactly when their vertex lists are
/// identical; all predicates use exact arithmetic.
class LatticePolytope {
public:
    static LatticePolytope convex_hull(int dim, std::vector<Point> points);

    int dim() const { return dim_; }
    const std::vector<Point>& vertices() const { return vertices_; }

    /// Support function: max of <v, a> over the vertices.
    std::int64_t support(const Point& a) const;

    /// Vertex set closed under negation.
    bool is_symmetric() const;
    /// All vertices pairwise congruent mod 2.
    bool parity_property() const;

    /// Vertices in counterclockwise boundary order (dim 2 only).
    std::vector<Point> boundary_ccw() const;

    bool operator==(const LatticePolytope&) const = default;

private:
    int dim_ = 0;
    std::vector<Point> vertices_;
};

/// Primitive direction and multiplicity of one zonotope segment; the
/// corresponding polygon edge is 2 * multiplicity * direction.
struct ZonotopeGenerator {
    std::array<std::int64_t, 2> direction{0, 0};
    std::int64_t multiplicity = 0;

    bool operator==(const ZonotopeGenerator&) const = default;
};

/// Writes a symmetric parity polygon as a Minkowski sum of segments
/// [-m*w, m*w], one generator per antipodal edge pair, in counterclockwise
/// edge order starting from the direction (1, 0).
std::vector<ZonotopeGenerator> zonotope_decompose_2d(const LatticePolytope& p);

/// Hull of the Minkowski sum of the generators' segments.
LatticePolytope zonotope_from_generators(const std::vector<ZonotopeGenerator>& gens);

}  // namespace intnorm
