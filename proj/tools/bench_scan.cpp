// Compares the OpenMP scan kernels against the serial reference on the
// workloads the workbench actually runs: full-space cube verification and
// condition scans.

#include <benchmark/benchmark.h>

#include "tba/conditions.hpp"
#include "tba/scan.hpp"

using namespace tba;

namespace {

bool cube_at(PointDomain d, uint64_t code) {
  return cube_check(decode_operator(d, code));
}

bool mono_equiv_at(PointDomain d, uint64_t code) {
  Op f = decode_operator(d, code);
  return holds(ConditionId::MONO, f) == holds(ConditionId::iMULT_a, f);
}

void bench_cube_serial(benchmark::State& state) {
  PointDomain d(2);
  uint64_t count = operator_space_size(d);
  for (auto _ : state) {
    bool ok = scan::serial::all_of(
        count, [&](uint64_t code) { return cube_at(d, code); });
    benchmark::DoNotOptimize(ok);
  }
}

void bench_cube_parallel(benchmark::State& state) {
  PointDomain d(2);
  uint64_t count = operator_space_size(d);
  for (auto _ : state) {
    bool ok =
        scan::all_of(count, [&](uint64_t code) { return cube_at(d, code); });
    benchmark::DoNotOptimize(ok);
  }
}

void bench_conditions_serial(benchmark::State& state) {
  PointDomain d(2);
  uint64_t count = operator_space_size(d);
  for (auto _ : state) {
    bool ok = scan::serial::all_of(
        count, [&](uint64_t code) { return mono_equiv_at(d, code); });
    benchmark::DoNotOptimize(ok);
  }
}

void bench_conditions_parallel(benchmark::State& state) {
  PointDomain d(2);
  uint64_t count = operator_space_size(d);
  for (auto _ : state) {
    bool ok = scan::all_of(
        count, [&](uint64_t code) { return mono_equiv_at(d, code); });
    benchmark::DoNotOptimize(ok);
  }
}

void bench_find_first_serial(benchmark::State& state) {
  // Worst-ish case: the hit sits late in the space.
  PointDomain d(2);
  uint64_t count = operator_space_size(d);
  for (auto _ : state) {
    uint64_t hit = scan::serial::find_first(count, [&](uint64_t code) {
      Op f = decode_operator(d, code);
      return holds(ConditionId::ADDIr_b, f) && !holds(ConditionId::ADDI_b, f);
    });
    benchmark::DoNotOptimize(hit);
  }
}

void bench_find_first_parallel(benchmark::State& state) {
  PointDomain d(2);
  uint64_t count = operator_space_size(d);
  for (auto _ : state) {
    uint64_t hit = scan::find_first(count, [&](uint64_t code) {
      Op f = decode_operator(d, code);
      return holds(ConditionId::ADDIr_b, f) && !holds(ConditionId::ADDI_b, f);
    });
    benchmark::DoNotOptimize(hit);
  }
}

}  // namespace

BENCHMARK(bench_cube_serial);
BENCHMARK(bench_cube_parallel);
BENCHMARK(bench_conditions_serial);
BENCHMARK(bench_conditions_parallel);
BENCHMARK(bench_find_first_serial);
BENCHMARK(bench_find_first_parallel);

BENCHMARK_MAIN();
