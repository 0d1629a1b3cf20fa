// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "llab/dilation.hpp"
#include "llab/fft.hpp"
#include "llab/patterns.hpp"
#include "llab/pierce.hpp"

using namespace llab;

namespace {

constexpr std::uint64_t kPrime = 100003;

const ArithTable& shared_table() {
  static const ArithTable t = build_table(8 * kPrime);
  return t;
}

void BM_ExceptionalSet(benchmark::State& state) {
  const DilationContext ctx(shared_table(), kPrime, 8);
  const bool serial = state.range(0) == 0;
  for (auto _ : state) {
    auto e = serial ? exceptional_set_d_serial(ctx, 7) : exceptional_set_d(ctx, 7);
    benchmark::DoNotOptimize(e.card());
  }
}
BENCHMARK(BM_ExceptionalSet)->Arg(0)->Arg(1)->ArgName("omp")->Unit(benchmark::kMillisecond);

void BM_PatternReport(benchmark::State& state) {
  const bool serial = state.range(0) == 0;
  for (auto _ : state) {
    auto r = serial ? pattern_report_serial(shared_table(), kPrime)
                    : pattern_report(shared_table(), kPrime);
    benchmark::DoNotOptimize(r.corr);
  }
}
BENCHMARK(BM_PatternReport)->Arg(0)->Arg(1)->ArgName("omp")->Unit(benchmark::kMillisecond);

void BM_DirectDft(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<cplx> x(4099);
  for (auto& v : x) v = {u(rng), 0.0};
  const bool serial = state.range(0) == 0;
  for (auto _ : state) {
    auto y = serial ? dft_direct_serial(x) : dft_direct(x);
    benchmark::DoNotOptimize(y.data());
  }
}
BENCHMARK(BM_DirectDft)->Arg(0)->Arg(1)->ArgName("omp")->Unit(benchmark::kMillisecond);

void BM_ChirpZ(benchmark::State& state) {
  std::vector<cplx> x(static_cast<std::size_t>(state.range(0)), cplx(1.0, 0.0));
  for (auto _ : state) {
    auto y = dft_chirp_z(x);
    benchmark::DoNotOptimize(y.data());
  }
}
BENCHMARK(BM_ChirpZ)->Arg(4099)->Arg(kPrime)->Unit(benchmark::kMillisecond);

void BM_NuScan(benchmark::State& state) {
  const bool serial = state.range(0) == 0;
  for (auto _ : state) {
    auto s = serial ? nu_scan_all_serial(kPrime, 50) : nu_scan_all(kPrime, 50);
    benchmark::DoNotOptimize(s.data());
  }
}
BENCHMARK(BM_NuScan)->Arg(0)->Arg(1)->ArgName("omp")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
