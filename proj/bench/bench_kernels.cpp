// Serial reference against the OpenMP kernels on the same inputs.

#include <benchmark/benchmark.h>

#include "polyomino/io.hpp"
#include "polyomino/orders.hpp"
#include "polyomino/primitive.hpp"

using namespace polyomino;

namespace {

ClosedPath path_of(std::size_t n) {
  RandomConstraints rc;
  rc.w_pentomino = true;
  rc.rw_heptomino = true;
  return as_closed_path(Polyomino::make(random_closed_path(n, 1, n >= 30 ? rc : RandomConstraints{}, 20000)));
}

void gb_check(benchmark::State& state, Execution exec) {
  auto cp = path_of(static_cast<std::size_t>(state.range(0)));
  auto ord = choose_order(cp).order;
  CheckOptions opts;
  opts.execution = exec;
  for (auto _ : state) {
    auto rep = buchberger_check(cp.polyomino(), ord, opts);
    benchmark::DoNotOptimize(rep.is_groebner);
  }
  state.counters["generators"] = static_cast<double>(generators(cp.polyomino()).size());
}

void scan(benchmark::State& state, Execution exec) {
  auto cp = path_of(static_cast<std::size_t>(state.range(0)));
  MembershipOracle oracle(cp);
  ScanOptions opts;
  opts.execution = exec;
  for (auto _ : state) {
    auto res = graver_scan(oracle, static_cast<std::size_t>(state.range(1)), opts);
    benchmark::DoNotOptimize(res.primitives.size());
  }
}

void BM_gb_check_serial(benchmark::State& s) { gb_check(s, Execution::serial); }
void BM_gb_check_parallel(benchmark::State& s) { gb_check(s, Execution::parallel); }
void BM_scan_serial(benchmark::State& s) { scan(s, Execution::serial); }
void BM_scan_parallel(benchmark::State& s) { scan(s, Execution::parallel); }

}  // namespace

BENCHMARK(BM_gb_check_serial)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gb_check_parallel)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan_serial)->Args({8, 5})->Args({12, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan_parallel)->Args({8, 5})->Args({12, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
