#pragma once

#include <cstdint>
#include <vector>

#include "intnorm/homology.hpp"
#include "intnorm/polytope.hpp"
#include "intnorm/ribbon.hpp"

namespace intnorm {

/// Transverse direction per edge; +1 is the framing-positive direction of
/// the dual arc.
using Coorientation = std::vector<int>;

struct EnumerationLimits {
    int max_edges = 24;
};

struct OracleLimits {
    int max_bound = 6;
};

/// Per-vertex balance: circling the crossing, the four signed incident
/// directions cancel (equivalently exactly two of the four agree with the
/// traversal).  Only closed coorientations pair with homology classes
/// independently of representatives.
bool is_closed(const RibbonGraph& g, const Coorientation& c);

/// All closed coorientations, by backtracking over edges with the
/// per-vertex balance as constraint propagation; lexicographic order with
/// +1 before -1.
std::vector<Coorientation> eulerian_coorientations(const RibbonGraph& g,
                                                   const EnumerationLimits& limits = {});

/// Evaluation of the closed coorientation against each basis cycle:
/// entry j is the sum over edges of c_e times the cycle's crossing count.
ClassVector coorientation_class(const HomologyModel& m, const Coorientation& c);

/// Convex hull of the classes of all closed coorientations.
LatticePolytope dual_unit_ball(const RibbonGraph& g, const HomologyModel& m,
                               const EnumerationLimits& limits = {});

/// The norm as the support function of the dual unit ball.
std::int64_t norm(const LatticePolytope& ball, const ClassVector& a);

/// Direct minimization of the crossing weight sum |f_e| over boundary-free
/// dual chains in the class of `a`, searched as the distinguished
/// representative plus 2-cell boundaries with potentials bounded by B,
/// deepening B until two consecutive bounds agree.
std::int64_t norm_oracle(const HomologyModel& m, const ClassVector& a,
                         const OracleLimits& limits = {});

}  // namespace intnorm
