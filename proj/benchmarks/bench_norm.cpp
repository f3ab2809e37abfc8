#include <benchmark/benchmark.h>

#include <random>

#include "intnorm/corpus.hpp"
#include "intnorm/norm.hpp"

using namespace intnorm;

namespace {

const CorpusItem& largest_item() {
    const CorpusItem* best = nullptr;
    for (const auto& item : corpus()) {
        const RibbonGraph g = RibbonGraph::parse(item.text);
        if (g.genus() == 0) continue;
        if (!best || RibbonGraph::parse(best->text).edge_count() < g.edge_count())
            best = &item;
    }
    return *best;
}

}  // namespace

static void BM_ParseAndModel(benchmark::State& state) {
    const CorpusItem& item = largest_item();
    for (auto _ : state) {
        const RibbonGraph g = RibbonGraph::parse(item.text);
        const HomologyModel m = HomologyModel::build(g);
        benchmark::DoNotOptimize(m.rank());
    }
}
BENCHMARK(BM_ParseAndModel);

static void BM_Enumeration(benchmark::State& state) {
    const RibbonGraph g = RibbonGraph::parse(largest_item().text);
    for (auto _ : state) {
        auto all = eulerian_coorientations(g);
        benchmark::DoNotOptimize(all.size());
    }
}
BENCHMARK(BM_Enumeration);

static void BM_DualUnitBall(benchmark::State& state) {
    const RibbonGraph g = RibbonGraph::parse(largest_item().text);
    const HomologyModel m = HomologyModel::build(g);
    for (auto _ : state) {
        auto ball = dual_unit_ball(g, m);
        benchmark::DoNotOptimize(ball.vertices().size());
    }
}
BENCHMARK(BM_DualUnitBall);

static void BM_NormOracle(benchmark::State& state) {
    const RibbonGraph g = RibbonGraph::parse(largest_item().text);
    const HomologyModel m = HomologyModel::build(g);
    ClassVector a(m.rank(), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(norm_oracle(m, a));
    }
}
BENCHMARK(BM_NormOracle);

static void BM_ConvexHull2D(benchmark::State& state) {
    std::mt19937 rng(1);
    std::vector<Point> pts;
    for (int i = 0; i < 200; ++i)
        pts.push_back({static_cast<std::int64_t>(rng() % 41) - 20,
                       static_cast<std::int64_t>(rng() % 41) - 20});
    for (auto _ : state) {
        auto hull = LatticePolytope::convex_hull(2, pts);
        benchmark::DoNotOptimize(hull.vertices().size());
    }
}
BENCHMARK(BM_ConvexHull2D);

BENCHMARK_MAIN();
