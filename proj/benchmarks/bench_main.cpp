#include <benchmark/benchmark.h>

#include "mpt/cube_models.hpp"
#include "mpt/reconstruction.hpp"

namespace {

struct CubeFixture {
    mpt::OrientedMatroid om;
    mpt::FaceLattice lat;
    mpt::PolytopeGraph g;

    explicit CubeFixture(int d)
        : om(mpt::OrientedMatroid::from_points(mpt::cube(d))),
          lat(mpt::faces(om)),
          g(mpt::graph(lat)) {}
};

const CubeFixture& cube3() {
    static CubeFixture f(3);
    return f;
}

void BM_FaceEnumeration(benchmark::State& state) {
    const auto om = mpt::OrientedMatroid::from_points(mpt::cube(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        auto lat = mpt::faces(om);
        benchmark::DoNotOptimize(lat);
    }
}
BENCHMARK(BM_FaceEnumeration)->Arg(2)->Arg(3)->Arg(4);

void BM_CovectorClosure(benchmark::State& state) {
    const auto config = mpt::cube(2);
    for (auto _ : state) {
        // Fresh instance each round: covectors are cached per instance.
        auto om = mpt::OrientedMatroid::from_points(config);
        benchmark::DoNotOptimize(om.covectors().size());
    }
}
BENCHMARK(BM_CovectorClosure);

void BM_ClassifyOrdering(benchmark::State& state) {
    const auto& f = cube3();
    mpt::OrderingContext ctx(f.om, f.lat, f.g);
    const auto ord = mpt::LinearOrdering::identity(f.g.size());
    for (auto _ : state) {
        auto rep = ctx.classify(ord);
        benchmark::DoNotOptimize(rep.is_k);
    }
}
BENCHMARK(BM_ClassifyOrdering);

void BM_ShellingDefinitional(benchmark::State& state) {
    const auto& f = cube3();
    const auto ord = mpt::LinearOrdering::identity(f.g.size());
    for (auto _ : state)
        benchmark::DoNotOptimize(mpt::is_shelling_ordering(f.om, ord));
}
BENCHMARK(BM_ShellingDefinitional);

void BM_EnumerateSquare(benchmark::State& state) {
    CubeFixture f(2);
    mpt::OrderingContext ctx(f.om, f.lat, f.g);
    mpt::EnumerationOptions opts;
    opts.with_reports = false;
    for (auto _ : state) {
        auto summary = mpt::enumerate_orderings(ctx, opts, nullptr);
        benchmark::DoNotOptimize(summary.total);
    }
}
BENCHMARK(BM_EnumerateSquare);

void BM_KalaiScore(benchmark::State& state) {
    const auto& f = cube3();
    const auto ord = mpt::LinearOrdering::identity(f.g.size());
    for (auto _ : state)
        benchmark::DoNotOptimize(mpt::kalai_score(f.g, ord));
}
BENCHMARK(BM_KalaiScore);

} // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
