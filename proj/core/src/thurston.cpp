#include "intnorm/thurston.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "intnorm/errors.hpp"

namespace intnorm {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Realizable: return "REALIZABLE";
        case Verdict::InapplicableEvenNorm: return "INAPPLICABLE_EVEN_NORM";
        case Verdict::TrivialGenusZero: return "TRIVIAL_GENUS_ZERO";
    }
    return "UNKNOWN";
}

namespace {

bool all_vertices_even(const LatticePolytope& p) {
    for (const auto& v : p.vertices())
        for (std::int64_t x : v)
            if (x % 2 != 0) return false;
    return true;
}

}  // namespace

CertificateReport certify(const RibbonGraph& g, const EnumerationLimits& limits) {
    CertificateReport report;
    report.genus = g.genus();
    report.component_count = static_cast<int>(g.components().size());

    if (g.genus() == 0) {
        report.verdict = Verdict::TrivialGenusZero;
        report.statement =
            "genus 0: first homology is trivial and the norm is identically zero.";
        return report;
    }

    const HomologyModel model = HomologyModel::build(g);
    for (int j = 0; j < model.rank(); ++j) report.basis.push_back(model.basis_chain(j));
    report.ball = dual_unit_ball(g, model, limits);
    if (!report.ball->is_symmetric() || !report.ball->parity_property())
        throw std::logic_error("dual unit ball violates symmetry or parity");
    report.ball_vertices_all_even = all_vertices_even(*report.ball);
    report.certificate = model.nontriviality_certificate();

    if (report.certificate) {
        report.verdict = Verdict::Realizable;
        report.statement =
            "realizable as the dual unit ball of a Thurston norm: x(a) = N(pi_*(a)) on the "
            "Euler-number-1 circle bundle over the filled genus-" + std::to_string(g.genus()) +
            " surface, with vertical surfaces over minimal-position curves as minimizers.";
    } else {
        if (!report.ball_vertices_all_even)
            throw std::logic_error("null-homologous collection with an odd ball vertex");
        report.verdict = Verdict::InapplicableEvenNorm;
        report.statement =
            "every orientation of the collection is null-homologous; the norm is even "
            "(all dual-ball vertices have even coordinates) and the realization criterion "
            "does not apply.";
    }
    return report;
}

std::vector<Geodesic> realize_torus_polygon(const LatticePolytope& p) {
    std::vector<Geodesic> out;
    for (const auto& gen : zonotope_decompose_2d(p)) {
        Geodesic geo;
        geo.p = -gen.direction[1];
        geo.q = gen.direction[0];
        geo.multiplicity = gen.multiplicity;
        if (geo.q < 0 || (geo.q == 0 && geo.p < 0)) {
            geo.p = -geo.p;
            geo.q = -geo.q;
        }
        out.push_back(geo);
    }
    if (out.size() < 2)
        throw Degenerate("a single slope cannot fill the torus");
    std::sort(out.begin(), out.end(), [](const Geodesic& a, const Geodesic& b) {
        return std::pair(a.p, a.q) < std::pair(b.p, b.q);
    });
    return out;
}

LatticePolytope torus_ball(const std::vector<Geodesic>& gc) {
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> slopes;
    for (const auto& geo : gc) {
        if (geo.multiplicity < 1)
            throw ValidationError("geodesic multiplicity must be at least 1");
        if (std::gcd(std::abs(geo.p), std::abs(geo.q)) != 1)
            throw ValidationError("geodesic slope must be primitive");
        std::int64_t p = geo.p, q = geo.q;
        if (q < 0 || (q == 0 && p < 0)) p = -p, q = -q;
        slopes[{p, q}] += geo.multiplicity;
    }
    if (slopes.size() < 2)
        throw SingleSlope("need at least two distinct slopes to fill the torus");

    std::vector<ZonotopeGenerator> gens;
    for (const auto& [slope, mult] : slopes) {
        std::int64_t wx = slope.second, wy = -slope.first;  // support direction of the slope
        if (wy < 0 || (wy == 0 && wx < 0)) wx = -wx, wy = -wy;
        gens.push_back(ZonotopeGenerator{{wx, wy}, mult});
    }
    return zonotope_from_generators(gens);
}

VerticalSurfaceReport vertical_surface_report(const LatticePolytope& ball,
                                              const ClassVector& a) {
    VerticalSurfaceReport report;
    report.neg_euler = norm(ball, a);
    const bool zero_class =
        std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
    if (zero_class) {
        report.statement = "the zero class is represented by the empty surface.";
    } else {
        report.statement =
            "a minimizing vertical representative is a torus with " +
            std::to_string(report.neg_euler) +
            " boundary components over a minimal-position transverse curve; its negative "
            "Euler characteristic equals the norm, and x(a) = N(pi_*(a)) on the "
            "Euler-number-1 circle bundle.";
    }
    return report;
}

}  // namespace intnorm
