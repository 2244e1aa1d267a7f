#include <memory>
#include <random>

#include <benchmark/benchmark.h>

#include "smenc/tighten.hpp"

using namespace smenc;

namespace {

std::shared_ptr<const SingularHopf> reference_system(double eps) {
    return std::make_shared<const SingularHopf>(
        eps, RescaledHopfParams{0.01, -0.05, 0.001, 0.1}, Branch::Plus);
}

const Domain2 kStrip{0.01, 0.2, -0.01, 0.01};

std::shared_ptr<const PlanarMesh> strip_mesh(int d) {
    const auto sys = reference_system(1e-3);
    return std::make_shared<const PlanarMesh>(
        triangulate(generate_vertices(kStrip, d, [&](double y, double z) {
            return sys->gradient_norm_mid(y, z);
        })));
}

EnclosurePair verified_pair(const SingularHopf& sys,
                            std::shared_ptr<const PlanarMesh> mesh) {
    const LiftedSurface approx = build_approximation(
        lift(std::move(mesh),
             [&](double y, double z) { return sys.critical_height_mid(y, z); }),
        sys);
    return verify_pair(sys, approx, 64.0);
}

void BM_IntervalMul(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(0.0, 10.0);
    const double a0 = U(rng) - 5.0, b0 = U(rng) - 5.0;
    Interval a(a0, a0 + U(rng));
    Interval b(b0, b0 + U(rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_IntervalMul);

void BM_FluxGradient(benchmark::State& state) {
    const auto sys = reference_system(1e-3);
    const IntervalVec3 box{Interval(0.3, 0.31), Interval(0.09, 0.1),
                           Interval(-0.001, 0.001)};
    const IntervalVec3 n{Interval(1.0), Interval(-1.6), Interval(0.01)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sys->flux_gradient(box, n));
    }
}
BENCHMARK(BM_FluxGradient);

void BM_CheckFace(benchmark::State& state) {
    const auto sys = reference_system(1e-3);
    const auto mesh = strip_mesh(20);
    const EnclosurePair pair = verified_pair(*sys, mesh);
    const SurfaceView left(*pair.mesh, pair.x_left.data());
    int f = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_face(*sys, FaceGeometry::from(left, f)));
        f = (f + 1) % mesh->face_count();
    }
}
BENCHMARK(BM_CheckFace);

void BM_Triangulate(benchmark::State& state) {
    const auto sys = reference_system(1e-3);
    const auto pts =
        generate_vertices(kStrip, int(state.range(0)), [&](double y, double z) {
            return sys->gradient_norm_mid(y, z);
        });
    for (auto _ : state) {
        benchmark::DoNotOptimize(triangulate(pts));
    }
    state.SetItemsProcessed(state.iterations() * long(pts.size()));
}
BENCHMARK(BM_Triangulate)->Arg(20)->Arg(40);

void BM_TightenPass(benchmark::State& state) {
    const auto sys = reference_system(1e-3);
    const auto mesh = strip_mesh(int(state.range(0)));
    const EnclosurePair fresh = verified_pair(*sys, mesh);
    EnclosurePair pair = fresh;
    for (auto _ : state) {
        benchmark::DoNotOptimize(tighten_pass(*sys, pair, 0.125));
    }
    state.SetItemsProcessed(state.iterations() * mesh->vertex_count());
}
BENCHMARK(BM_TightenPass)->Arg(20)->Arg(34);

} // namespace

BENCHMARK_MAIN();
