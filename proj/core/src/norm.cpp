#include "intnorm/norm.hpp"

#include <algorithm>
#include <cstdlib>

#include "intnorm/errors.hpp"

namespace intnorm {

bool is_closed(const RibbonGraph& g, const Coorientation& c) {
    if (c.size() != static_cast<size_t>(g.edge_count())) return false;
    for (int x : c)
        if (x != 1 && x != -1) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int sum = 0;
        for (int s = 4 * v; s < 4 * v + 4; ++s)
            sum += ((s < g.mate(s)) ? 1 : -1) * c[g.edge_of(s)];
        if (sum != 0) return false;
    }
    return true;
}

std::vector<Coorientation> eulerian_coorientations(const RibbonGraph& g,
                                                   const EnumerationLimits& limits) {
    const int n_edges = g.edge_count();
    if (n_edges > limits.max_edges)
        throw ResourceLimit("enumeration over " + std::to_string(n_edges) +
                            " edges exceeds the cap of " + std::to_string(limits.max_edges));

    // per-edge effect on its endpoint vertices
    struct Effect {
        int vertex;
        int weight;  // sum of slot signs at that vertex
        int slots;   // slot count at that vertex (1 or 2)
    };
    std::vector<std::vector<Effect>> effects(n_edges);
    for (int e = 0; e < n_edges; ++e) {
        const auto [a, b] = g.edge_ends(e);
        if (g.vertex_of(a) == g.vertex_of(b)) {
            effects[e].push_back(Effect{g.vertex_of(a), 0, 2});  // loop: signs cancel
        } else {
            effects[e].push_back(Effect{g.vertex_of(a), 1, 1});
            effects[e].push_back(Effect{g.vertex_of(b), -1, 1});
        }
    }

    std::vector<int> sum(g.vertex_count(), 0);
    std::vector<int> remaining(g.vertex_count(), 4);
    std::vector<int> current(n_edges, 0);
    std::vector<Coorientation> out;

    auto feasible = [&](int v) { return std::abs(sum[v]) <= remaining[v]; };

    auto rec = [&](auto&& self, int e) -> void {
        if (e == n_edges) {
            out.push_back(current);
            return;
        }
        for (int value : {1, -1}) {
            current[e] = value;
            bool ok = true;
            for (const auto& f : effects[e]) {
                sum[f.vertex] += f.weight * value;
                remaining[f.vertex] -= f.slots;
                if (!feasible(f.vertex)) ok = false;
            }
            if (ok) self(self, e + 1);
            for (const auto& f : effects[e]) {
                sum[f.vertex] -= f.weight * value;
                remaining[f.vertex] += f.slots;
            }
        }
        current[e] = 0;
    };
    rec(rec, 0);
    return out;
}

ClassVector coorientation_class(const HomologyModel& m, const Coorientation& c) {
    if (!is_closed(m.graph(), c))
        throw NotClosed("coorientation fails the per-vertex balance");
    ClassVector out(m.rank(), 0);
    for (int j = 0; j < m.rank(); ++j)
        for (int e = 0; e < m.graph().edge_count(); ++e)
            out[j] += c[e] * m.crossing(e, j);
    return out;
}

LatticePolytope dual_unit_ball(const RibbonGraph& g, const HomologyModel& m,
                               const EnumerationLimits& limits) {
    if (g.genus() == 0)
        throw TrivialNorm("genus 0: trivial norm");
    std::vector<Point> classes;
    for (const auto& c : eulerian_coorientations(g, limits))
        classes.push_back(coorientation_class(m, c));
    return LatticePolytope::convex_hull(m.rank(), std::move(classes));
}

std::int64_t norm(const LatticePolytope& ball, const ClassVector& a) {
    return ball.support(a);
}

std::int64_t norm_oracle(const HomologyModel& m, const ClassVector& a,
                         const OracleLimits& limits) {
    if (limits.max_bound < 1)
        throw Unconverged("oracle bound cap must be at least 1");
    const Chain base = m.representative_chain(a);
    const int n_edges = m.graph().edge_count();
    const int n_vertices = m.graph().vertex_count();

    // edge e is fully determined once every vertex whose 2-cell touches it
    // has its potential assigned
    std::vector<int> decided_at(n_edges, 0);
    for (int v = 0; v < n_vertices; ++v)
        for (int e = 0; e < n_edges; ++e)
            if (m.vertex_relation(v)[e] != 0) decided_at[e] = std::max(decided_at[e], v);
    std::vector<std::vector<int>> decided_edges(n_vertices);
    for (int e = 0; e < n_edges; ++e) decided_edges[decided_at[e]].push_back(e);

    auto min_at_bound = [&](int bound) {
        std::int64_t best = 0;
        for (std::int64_t x : base) best += std::abs(x);
        Chain f = base;
        // potentials tried nearest zero first
        std::vector<std::int64_t> values;
        values.push_back(0);
        for (int b = 1; b <= bound; ++b) {
            values.push_back(b);
            values.push_back(-b);
        }
        auto rec = [&](auto&& self, int v, std::int64_t settled) -> void {
            if (v == n_vertices) {
                best = std::min(best, settled);
                return;
            }
            const Chain& q = m.vertex_relation(v);
            for (std::int64_t y : values) {
                if (y != 0)
                    for (int e = 0; e < n_edges; ++e) f[e] += y * q[e];
                std::int64_t cost = settled;
                for (int e : decided_edges[v]) cost += std::abs(f[e]);
                if (cost < best) self(self, v + 1, cost);
                if (y != 0)
                    for (int e = 0; e < n_edges; ++e) f[e] -= y * q[e];
            }
        };
        rec(rec, 0, 0);
        return best;
    };

    std::int64_t previous = min_at_bound(1);
    for (int bound = 2; bound <= limits.max_bound; ++bound) {
        const std::int64_t current = min_at_bound(bound);
        if (current == previous) return current;
        previous = current;
    }
    throw Unconverged("minimizer did not stabilize within bound cap " +
                      std::to_string(limits.max_bound));
}

}  // namespace intnorm
