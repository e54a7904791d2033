// Serial reference vs OpenMP for the data-parallel kernels.

#include <benchmark/benchmark.h>

#include <vector>

#include "sqcover/constructions.hpp"
#include "sqcover/kernels.hpp"
#include "sqcover/paper_checks.hpp"
#include "sqcover/verify.hpp"

using namespace sqcover;

namespace {

std::vector<SquareFrame> frames_of(const Configuration& cfg) {
  std::vector<SquareFrame> f;
  for (const auto& sq : cfg.squares) f.emplace_back(sq);
  return f;
}

std::vector<Cell> grid_cells(int depth) {
  std::vector<Cell> cells;
  const std::int64_t m = std::int64_t{1} << depth;
  for (std::int64_t ix = 0; ix < m; ++ix)
    for (std::int64_t iy = 0; iy < m; ++iy) cells.push_back({ix, iy, depth});
  return cells;
}

void BM_classify_cells(benchmark::State& state) {
  const auto backend = static_cast<Backend>(state.range(0));
  Configuration cfg = construct_interior(3);
  auto frames = frames_of(cfg);
  auto cells = grid_cells(9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_cells(frames, cfg.edge, cells, {1e-9, -1e-9}, backend));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cells.size()));
}

void BM_flag_uncovered_samples(benchmark::State& state) {
  const auto backend = static_cast<Backend>(state.range(0));
  Configuration cfg = construct_boundary(9);
  auto frames = frames_of(cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(flag_uncovered_samples(frames, cfg.edge, false, 200000, 1, backend));
  }
  state.SetItemsProcessed(state.iterations() * 200000);
}

void BM_verify_interior(benchmark::State& state) {
  VerifyOptions o;
  o.tight = true;
  o.backend = static_cast<Backend>(state.range(0));
  Configuration cfg = construct_interior(3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_interior(cfg, o));
}

void BM_paper_checks(benchmark::State& state) {
  const auto backend = static_cast<Backend>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_all_checks(1024, backend));
}

}  // namespace

// arg 0 = serial reference, 1 = OpenMP
BENCHMARK(BM_classify_cells)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_flag_uncovered_samples)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_interior)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_paper_checks)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
