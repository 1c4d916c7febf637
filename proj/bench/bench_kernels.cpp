// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <cmath>

#include "cubtors/finite_field.hpp"
#include "cubtors/kernels.hpp"

using namespace cubtors;

namespace {

// Packed coefficients a1..a6; the count does not need a nonsingular curve,
// so any small indices do for timing.
const std::uint32_t kCurve[5] = {1, 0, 1, 3, 7};

std::shared_ptr<const FiniteField> field_for(std::int64_t which) {
  switch (which) {
    case 0: return FiniteField::prime_field(100003);
    case 1: return FiniteField::extension(47, 3);
    default: return FiniteField::extension(97, 3);
  }
}

void BM_count_serial(benchmark::State& st) {
  auto f = field_for(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::count_points_serial(f->packed(), kCurve));
  st.SetLabel("q=" + std::to_string(f->size()));
}

void BM_count_omp(benchmark::State& st) {
  auto f = field_for(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::count_points_omp(f->packed(), kCurve));
  st.SetLabel("q=" + std::to_string(f->size()));
}

struct AberthInput {
  std::vector<BigComplex> coeffs;
  std::vector<BigComplex> start;
};

// x^n - x - 1 at 512 bits, started on a circle.
AberthInput aberth_input(long n, long bits) {
  AberthInput in;
  for (long i = 0; i <= n; ++i) {
    long c = i == 0 ? -1 : i == 1 ? -1 : i == n ? 1 : 0;
    in.coeffs.emplace_back(Rational(c), bits);
  }
  for (long i = 0; i < n; ++i) {
    double t = 0.4 + 2 * M_PI * static_cast<double>(i) / static_cast<double>(n);
    in.start.emplace_back(BigFloat::from_double(1.2 * std::cos(t), bits), BigFloat::from_double(1.2 * std::sin(t), bits));
  }
  return in;
}

template <bool Parallel>
void BM_aberth(benchmark::State& st) {
  const long n = st.range(0), bits = 512;
  auto in = aberth_input(n, bits);
  for (auto _ : st) {
    auto z = in.start;
    std::vector<char> done(z.size(), 0);
    for (int i = 0; i < 5; ++i) {
      if (Parallel)
        kernels::aberth_sweep_omp(in.coeffs, z, done, bits);
      else
        kernels::aberth_sweep_serial(in.coeffs, z, done, bits);
    }
    benchmark::DoNotOptimize(z);
  }
}

}  // namespace

BENCHMARK(BM_count_serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_count_omp)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_aberth<false>)->Arg(24)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_aberth<true>)->Arg(24)->Arg(96)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
