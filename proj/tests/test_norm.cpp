#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "intnorm/corpus.hpp"
#include "intnorm/errors.hpp"
#include "intnorm/norm.hpp"
#include "helpers.hpp"

using namespace intnorm;

namespace {

const char* kT1 = "vertices 1\nvertex 0: 0 1 2 3\nedges\n0 2\n1 3\nend\n";
const char* kT0 = "vertices 1\nvertex 0: 0 1 2 3\nedges\n0 1\n2 3\nend\n";
const char* kThree =
    "vertices 2\nvertex 0: 0 1 2 3\nvertex 1: 4 5 6 7\n"
    "edges\n0 2\n1 7\n3 5\n4 6\nend\n";

// All sign assignments, filtered by the closedness predicate.
std::set<Coorientation> brute_force_closed(const RibbonGraph& g) {
    std::set<Coorientation> out;
    const int n = g.edge_count();
    REQUIRE(n <= 14);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Coorientation c(n);
        for (int e = 0; e < n; ++e) c[e] = (mask >> e) & 1 ? -1 : 1;
        if (is_closed(g, c)) out.insert(c);
    }
    return out;
}

void enumerate_classes(int rank, int radius, const std::function<void(const ClassVector&)>& f) {
    ClassVector a(rank, -radius);
    for (;;) {
        f(a);
        int i = 0;
        while (i < rank && a[i] == radius) a[i++] = -radius;
        if (i == rank) break;
        ++a[i];
    }
}

}  // namespace

TEST_CASE("torus pair: all four coorientations are closed") {
    const RibbonGraph g = RibbonGraph::parse(kT1);
    const auto all = eulerian_coorientations(g);
    CHECK(all.size() == 4);
    const HomologyModel m = HomologyModel::build(g);
    std::set<ClassVector> classes;
    for (const auto& c : all) classes.insert(coorientation_class(m, c));
    CHECK(classes == std::set<ClassVector>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
}

TEST_CASE("enumeration matches the brute-force filter and is negation-closed") {
    std::mt19937 rng(31);
    auto check_graph = [](const RibbonGraph& g) {
        const auto found = eulerian_coorientations(g);
        std::set<Coorientation> as_set(found.begin(), found.end());
        CHECK(as_set.size() == found.size());
        CHECK(as_set == brute_force_closed(g));
        for (const auto& c : found) {
            Coorientation neg(c.size());
            for (size_t e = 0; e < c.size(); ++e) neg[e] = -c[e];
            CHECK(as_set.count(neg) == 1);
        }
    };
    for (const auto& item : corpus()) check_graph(RibbonGraph::parse(item.text));
    for (int trial = 0; trial < 25; ++trial) check_graph(random_ribbon_graph(rng, 1 + trial % 3));
}

TEST_CASE("closedness really is what makes evaluation representative-independent") {
    const RibbonGraph g = RibbonGraph::parse(kThree);
    const HomologyModel m = HomologyModel::build(g);
    for (const auto& c : eulerian_coorientations(g)) {
        // adding any 2-cell boundary to a basis cycle cannot change the evaluation
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::int64_t delta = 0;
            for (int e = 0; e < g.edge_count(); ++e) delta += c[e] * m.vertex_relation(v)[e];
            CHECK(delta == 0);
        }
    }
    CHECK_THROWS_AS(coorientation_class(m, Coorientation{1, 1, 1, 1}), NotClosed);
}

TEST_CASE("coorientation classes negate with the coorientation") {
    const RibbonGraph g = RibbonGraph::parse(kThree);
    const HomologyModel m = HomologyModel::build(g);
    for (const auto& c : eulerian_coorientations(g)) {
        Coorientation neg(c.size());
        for (size_t e = 0; e < c.size(); ++e) neg[e] = -c[e];
        const auto u = coorientation_class(m, c);
        const auto w = coorientation_class(m, neg);
        for (size_t j = 0; j < u.size(); ++j) CHECK(u[j] == -w[j]);
    }
}

TEST_CASE("torus pair ball and norm anchor values") {
    const RibbonGraph g = RibbonGraph::parse(kT1);
    const HomologyModel m = HomologyModel::build(g);
    const LatticePolytope ball = dual_unit_ball(g, m);
    CHECK(ball.vertices() == std::vector<Point>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
    CHECK(norm(ball, {1, 0}) == 1);
    CHECK(norm(ball, {0, 1}) == 1);
    CHECK(norm(ball, {1, 1}) == 2);
    CHECK(norm(ball, {0, 0}) == 0);
    CHECK_THROWS_AS(norm(ball, {1, 0, 0}), DimensionMismatch);
}

TEST_CASE("parallel curves double the weight of one direction") {
    const RibbonGraph g = RibbonGraph::parse(kThree);
    const HomologyModel m = HomologyModel::build(g);
    const LatticePolytope ball = dual_unit_ball(g, m);
    CHECK(ball.vertices() == std::vector<Point>{{-1, -2}, {-1, 2}, {1, -2}, {1, 2}});
    CHECK(norm(ball, {1, 0}) == 1);
    CHECK(norm(ball, {0, 1}) == 2);
    CHECK(norm(ball, {1, 1}) == 3);
}

TEST_CASE("genus zero inputs have a trivial norm") {
    const RibbonGraph g = RibbonGraph::parse(kT0);
    const HomologyModel m = HomologyModel::build(g);
    CHECK_THROWS_AS(dual_unit_ball(g, m), TrivialNorm);
}

TEST_CASE("enumeration cap") {
    const RibbonGraph g = RibbonGraph::parse(kThree);
    CHECK_THROWS_AS(eulerian_coorientations(g, EnumerationLimits{2}), ResourceLimit);
    const HomologyModel m = HomologyModel::build(g);
    CHECK_THROWS_AS(dual_unit_ball(g, m, EnumerationLimits{2}), ResourceLimit);
}

TEST_CASE("every computed ball is symmetric with mod-2 congruent vertices") {
    std::mt19937 rng(37);
    auto check_graph = [](const RibbonGraph& g) {
        if (g.genus() == 0) return;
        const HomologyModel m = HomologyModel::build(g);
        const LatticePolytope ball = dual_unit_ball(g, m);
        CHECK(ball.is_symmetric());
        CHECK(ball.parity_property());
    };
    for (const auto& item : corpus()) check_graph(RibbonGraph::parse(item.text));
    for (int trial = 0; trial < 25; ++trial) check_graph(random_ribbon_graph(rng, 1 + trial % 4));
}

TEST_CASE("oracle agrees with the support function") {
    const RibbonGraph g = RibbonGraph::parse(kT1);
    const HomologyModel m = HomologyModel::build(g);
    const LatticePolytope ball = dual_unit_ball(g, m);
    CHECK(norm_oracle(m, {1, 1}) == 2);
    CHECK(norm_oracle(m, {1, 0}) == 1);
    CHECK(norm_oracle(m, {0, 0}) == 0);

    std::mt19937 rng(41);
    auto sweep = [](const RibbonGraph& graph) {
        if (graph.genus() == 0) return;
        const HomologyModel model = HomologyModel::build(graph);
        const LatticePolytope b = dual_unit_ball(graph, model);
        enumerate_classes(model.rank(), 1, [&](const ClassVector& a) {
            CHECK(norm(b, a) == norm_oracle(model, a));
        });
    };
    for (const auto& item : corpus()) sweep(RibbonGraph::parse(item.text));
    for (int trial = 0; trial < 10; ++trial) sweep(random_ribbon_graph(rng, 1 + trial % 3));
}

TEST_CASE("oracle deepening cap reports instead of truncating") {
    const RibbonGraph g = RibbonGraph::parse(kT1);
    const HomologyModel m = HomologyModel::build(g);
    CHECK_THROWS_AS(norm_oracle(m, {1, 1}, OracleLimits{1}), Unconverged);
    CHECK_THROWS_AS(norm_oracle(m, {1, 1}, OracleLimits{0}), Unconverged);
}

TEST_CASE("smoothing a crossing can change the norm") {
    // Deleting the double point removes an obstacle: a class that had to
    // cross both merged strands may afterwards run parallel to the merged
    // curve.  This is why norm invariance is a property of a smoothing,
    // not a theorem about all of them.
    const RibbonGraph g = RibbonGraph::parse(kThree);
    const HomologyModel before = HomologyModel::build(g);
    const LatticePolytope ball_before = dual_unit_ball(g, before);
    const AttachResult res = g.attach({1, 1, 1}, 0);
    const HomologyModel after = HomologyModel::build(res.graph);
    const LatticePolytope ball_after = dual_unit_ball(res.graph, after);

    const ClassVector a{1, 1};
    const Chain image = transport_chain(res, before.representative_chain(a));
    const ClassVector a_after = after.class_of_cycle(image);
    CHECK(norm(ball_before, a) == 3);
    CHECK(norm(ball_after, a_after) == 1);

    // the transported norm never increases
    for (std::int64_t x = -2; x <= 2; ++x)
        for (std::int64_t y = -2; y <= 2; ++y) {
            const ClassVector c{x, y};
            const Chain im = transport_chain(res, before.representative_chain(c));
            CHECK(norm(ball_after, after.class_of_cycle(im)) <= norm(ball_before, c));
        }
}

TEST_CASE("enumeration order is deterministic and lexicographic") {
    const RibbonGraph g = RibbonGraph::parse(kThree);
    const auto all = eulerian_coorientations(g);
    auto key = [](const Coorientation& c) {
        std::vector<int> k;
        for (int x : c) k.push_back(x == 1 ? 0 : 1);
        return k;
    };
    for (size_t i = 1; i < all.size(); ++i) CHECK(key(all[i - 1]) < key(all[i]));
    CHECK(eulerian_coorientations(g) == all);
}

TEST_CASE("homogeneity and subadditivity on sampled classes") {
    std::mt19937 rng(43);
    for (const auto& item : corpus()) {
        const RibbonGraph g = RibbonGraph::parse(item.text);
        if (g.genus() == 0) continue;
        const HomologyModel m = HomologyModel::build(g);
        const LatticePolytope ball = dual_unit_ball(g, m);
        for (int trial = 0; trial < 20; ++trial) {
            ClassVector a(m.rank()), b(m.rank());
            for (auto& x : a) x = static_cast<std::int64_t>(rng() % 9) - 4;
            for (auto& x : b) x = static_cast<std::int64_t>(rng() % 9) - 4;
            const std::int64_t na = norm(ball, a);
            CHECK(na >= 0);
            for (std::int64_t k = -3; k <= 3; ++k) {
                ClassVector ka(m.rank());
                for (int j = 0; j < m.rank(); ++j) ka[j] = k * a[j];
                CHECK(norm(ball, ka) == std::abs(k) * na);
            }
            ClassVector ab(m.rank());
            for (int j = 0; j < m.rank(); ++j) ab[j] = a[j] + b[j];
            CHECK(norm(ball, ab) <= na + norm(ball, b));
        }
    }
}
