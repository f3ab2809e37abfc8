#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "intnorm/homology.hpp"
#include "intnorm/norm.hpp"
#include "intnorm/polytope.hpp"
#include "intnorm/ribbon.hpp"

namespace intnorm {

enum class Verdict {
    Realizable,
    InapplicableEvenNorm,
    TrivialGenusZero,
};

const char* verdict_name(Verdict v);

/// Everything the realization theorem needs about one collection: the dual
/// unit ball, a homological-nontriviality certificate when one exists, and
/// the resulting verdict.
struct CertificateReport {
    int genus = 0;
    int component_count = 0;
    std::optional<LatticePolytope> ball;          // absent when genus is 0
    std::optional<std::vector<int>> certificate;  // orientation per component
    bool ball_vertices_all_even = false;
    Verdict verdict = Verdict::TrivialGenusZero;
    std::string statement;
    std::vector<Chain> basis;  // dual-cycle basis, for re-deriving coordinates
};

CertificateReport certify(const RibbonGraph& g, const EnumerationLimits& limits = {});

/// Closed geodesic of slope (p, q) on the torus, gcd(p, q) = 1, taken with
/// a multiplicity; normalized so q > 0, or q = 0 and p > 0.
struct Geodesic {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t multiplicity = 1;

    bool operator==(const Geodesic&) const = default;
};

/// Realizes a symmetric parity polygon as the dual unit ball of the
/// intersection norm of a geodesic collection on the torus: each zonotope
/// generator (w, m) becomes the geodesic (-w_y, w_x) with multiplicity m.
std::vector<Geodesic> realize_torus_polygon(const LatticePolytope& p);

/// Dual unit ball of the collection's intersection norm on the torus:
/// the Minkowski sum of segments [-m*(q,-p), m*(q,-p)].
LatticePolytope torus_ball(const std::vector<Geodesic>& gc);

struct VerticalSurfaceReport {
    std::int64_t neg_euler = 0;
    std::string statement;
};

/// Complexity of the minimizing vertical surface over a class: its
/// negative Euler characteristic equals the norm of the class.
VerticalSurfaceReport vertical_surface_report(const LatticePolytope& ball,
                                              const ClassVector& a);

}  // namespace intnorm
