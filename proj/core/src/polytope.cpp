#include "intnorm/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "intnorm/errors.hpp"

namespace intnorm {

namespace {

using Rat = boost::multiprecision::cpp_rational;

std::int64_t cross(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Counterclockwise hull of deduplicated, lex-sorted points, collinear
// points dropped.  Returns the boundary starting at the lex-smallest
// vertex.
std::vector<Point> monotone_chain(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    if (n <= 2) return pts;
    std::vector<Point> hull(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {  // lower hull
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (int i = n - 2, lower = k + 1; i >= 0; --i) {  // upper hull
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

// Feasibility of  sum(l_i * q_i) = p, sum(l_i) = 1, l_i >= 0  over the
// points with index != skip, by an exact phase-1 simplex with Bland's
// rule.
bool in_convex_hull_of_others(const std::vector<Point>& pts, int skip, int dim) {
    const Point& p = pts[skip];
    std::vector<int> cols;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i)
        if (i != skip) cols.push_back(i);
    const int n = static_cast<int>(cols.size());
    if (n == 0) return false;
    const int m = dim + 1;

    // tableau: n structural columns, m artificial columns, rhs
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(n + m + 1, 0));
    for (int r = 0; r < m; ++r) {
        for (int j = 0; j < n; ++j)
            t[r][j] = (r < dim) ? Rat(pts[cols[j]][r]) : Rat(1);
        t[r][n + m] = (r < dim) ? Rat(p[r]) : Rat(1);
        if (t[r][n + m] < 0)
            for (auto& x : t[r]) x = -x;
        t[r][n + r] = 1;
    }
    std::vector<int> basis(m);
    for (int r = 0; r < m; ++r) basis[r] = n + r;

    // reduced costs for minimizing the sum of artificials
    std::vector<Rat> cost(n + m + 1, 0);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n + m; ++j) cost[j] -= t[r][j];
    for (int r = 0; r < m; ++r) cost[n + r] = 0;

    while (true) {
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (cost[j] < 0) { enter = j; break; }  // Bland: smallest index
        if (enter < 0) break;
        int leave = -1;
        Rat best;
        for (int r = 0; r < m; ++r) {
            if (t[r][enter] <= 0) continue;
            Rat ratio = t[r][n + m] / t[r][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave < 0) return false;  // unbounded cannot happen here
        const Rat piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (int r = 0; r < m; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            const Rat f = t[r][enter];
            for (int j = 0; j <= n + m; ++j) t[r][j] -= f * t[leave][j];
        }
        const Rat f = cost[enter];
        if (f != 0)
            for (int j = 0; j <= n + m; ++j) cost[j] -= f * t[leave][j];
        basis[leave] = enter;
    }
    return -cost[n + m] == 0;  // objective value
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

}  // namespace

LatticePolytope LatticePolytope::convex_hull(int dim, std::vector<Point> points) {
    if (dim <= 0) throw DimensionMismatch("dimension must be positive");
    for (const auto& p : points)
        if (p.size() != static_cast<size_t>(dim))
            throw DimensionMismatch("point has wrong dimension");
    if (points.empty()) throw ValidationError("empty point set");

    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    LatticePolytope out;
    out.dim_ = dim;
    if (points.size() == 1) {
        out.vertices_ = std::move(points);
        return out;
    }
    if (dim == 2) {
        out.vertices_ = monotone_chain(points);
        std::sort(out.vertices_.begin(), out.vertices_.end());
        return out;
    }
    for (int i = 0; i < static_cast<int>(points.size()); ++i)
        if (!in_convex_hull_of_others(points, i, dim))
            out.vertices_.push_back(points[i]);
    return out;
}

std::int64_t LatticePolytope::support(const Point& a) const {
    if (a.size() != static_cast<size_t>(dim_))
        throw DimensionMismatch("direction has wrong dimension");
    bool first = true;
    std::int64_t best = 0;
    for (const auto& v : vertices_) {
        std::int64_t dot = 0;
        for (int i = 0; i < dim_; ++i) dot += v[i] * a[i];
        if (first || dot > best) best = dot, first = false;
    }
    return best;
}

bool LatticePolytope::is_symmetric() const {
    for (const auto& v : vertices_) {
        Point neg(v.size());
        for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        if (!std::binary_search(vertices_.begin(), vertices_.end(), neg)) return false;
    }
    return true;
}

bool LatticePolytope::parity_property() const {
    for (const auto& v : vertices_)
        for (int i = 0; i < dim_; ++i)
            if ((v[i] - vertices_[0][i]) % 2 != 0) return false;
    return true;
}

std::vector<Point> LatticePolytope::boundary_ccw() const {
    if (dim_ != 2) throw DimensionMismatch("boundary order is defined for dimension 2");
    return monotone_chain(vertices_);
}

std::vector<ZonotopeGenerator> zonotope_decompose_2d(const LatticePolytope& p) {
    if (p.dim() != 2) throw DimensionMismatch("zonotope decomposition needs dimension 2");
    if (!p.is_symmetric()) throw NotSymmetric("polygon is not symmetric about the origin");
    if (!p.parity_property()) throw ParityFailure("polygon vertices are not congruent mod 2");
    if (p.vertices().size() <= 2) throw Degenerate("polygon is a point or a segment");

    const std::vector<Point> ring = p.boundary_ccw();
    const int n = static_cast<int>(ring.size());
    std::vector<ZonotopeGenerator> gens;
    for (int i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        const std::int64_t ex = b[0] - a[0], ey = b[1] - a[1];
        // keep one edge per antipodal pair: direction in the upper half
        if (!(ey > 0 || (ey == 0 && ex > 0))) continue;
        if (ex % 2 != 0 || ey % 2 != 0)
            throw ParityFailure("polygon edge is not an even vector");
        const std::int64_t hx = ex / 2, hy = ey / 2;
        const std::int64_t g = gcd64(hx, hy);
        gens.push_back(ZonotopeGenerator{{hx / g, hy / g}, g});
    }

    // ccw order from direction (1, 0); all directions lie in the upper
    // half-plane, so the cross product orders them by angle
    std::sort(gens.begin(), gens.end(), [](const ZonotopeGenerator& a, const ZonotopeGenerator& b) {
        return a.direction[0] * b.direction[1] - a.direction[1] * b.direction[0] > 0;
    });
    if (zonotope_from_generators(gens) != p)
        throw std::logic_error("zonotope decomposition does not recompose to the input");
    return gens;
}

LatticePolytope zonotope_from_generators(const std::vector<ZonotopeGenerator>& gens) {
    if (gens.empty()) throw Degenerate("no generators");
    std::vector<Point> pts{Point{0, 0}};
    for (const auto& g : gens) {
        const std::int64_t wx = g.direction[0] * g.multiplicity;
        const std::int64_t wy = g.direction[1] * g.multiplicity;
        std::vector<Point> next;
        next.reserve(2 * pts.size());
        for (const auto& p : pts) {
            next.push_back(Point{p[0] + wx, p[1] + wy});
            next.push_back(Point{p[0] - wx, p[1] - wy});
        }
        pts = std::move(next);
    }
    return LatticePolytope::convex_hull(2, std::move(pts));
}

}  // namespace intnorm
