#include <benchmark/benchmark.h>

#include "eprcorr/chsh.hpp"
#include "eprcorr/correlation.hpp"
#include "eprcorr/decay.hpp"

namespace {

using namespace epr;

constexpr double kPi = 3.14159265358979323846;

void BM_correlation_planar(benchmark::State& state) {
    double x = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(correlation_planar(x, kPi / 3, kPi / 4, kPi / 4, kPi / 3));
        x += 1e-9;
    }
}
BENCHMARK(BM_correlation_planar);

void BM_correlation_closed(benchmark::State& state) {
    const DecayKinematics kin = planar_kinematics(1.0, 1.36, kPi / 3, 1.0);
    const BlochVector xi(0, 0, 1);
    const MeasurementSettings s{alice_direction(kPi / 4, kPi / 4), kPi / 3};
    const ThreeDirection a_k{0, 0, 1};
    for (auto _ : state) benchmark::DoNotOptimize(correlation_closed(kin, xi, s, a_k));
}
BENCHMARK(BM_correlation_closed);

void BM_correlation_trace(benchmark::State& state) {
    const DecayKinematics kin = planar_kinematics(1.0, 1.36, kPi / 3, 1.0);
    const BlochVector xi(0, 0, 1);
    const MeasurementSettings s{alice_direction(kPi / 4, kPi / 4), kPi / 3};
    const ThreeDirection a_k{0, 0, 1};
    for (auto _ : state) benchmark::DoNotOptimize(correlation_trace(kin, xi, s, a_k));
}
BENCHMARK(BM_correlation_trace);

void BM_chsh_lhs(benchmark::State& state) {
    const ChshSettings s{2 * kPi / 3, 3 * kPi / 2, 2 * kPi / 3, kPi / 3, kPi, kPi / 3};
    double x = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(chsh_lhs(x, kPi / 6, s));
        x += 1e-9;
    }
}
BENCHMARK(BM_chsh_lhs);

void BM_chsh_scan_512(benchmark::State& state) {
    const ChshSettings s{2 * kPi / 3, 3 * kPi / 2, 2 * kPi / 3, kPi / 3, kPi, kPi / 3};
    for (auto _ : state) {
        const ScanResult r = scan([&](double x) { return chsh_lhs(x, kPi / 6, s); }, 0.0, 20.0,
                                  512, 2.0);
        benchmark::DoNotOptimize(r.maximum.value);
    }
}
BENCHMARK(BM_chsh_scan_512);

void BM_golden_extremum(benchmark::State& state) {
    auto f = [](double x) { return correlation_planar(x, kPi / 3, kPi / 4, kPi / 4, kPi / 3); };
    for (auto _ : state) {
        auto [x, v] = golden_extremum(f, 0.5, 3.0, 1e-10, ExtremumMode::maximize);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_golden_extremum);

}  // namespace

BENCHMARK_MAIN();
