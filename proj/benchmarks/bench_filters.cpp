#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "htg/adaptive_surface.hpp"
#include "htg/canonical.hpp"
#include "htg/geometry_filter.hpp"
#include "htg/grid_io.hpp"
#include "htg/selection.hpp"

namespace {

const htg::HyperTreeGrid& uniform2d(unsigned depth) {
  static std::map<unsigned, htg::HyperTreeGrid> cache;
  auto it = cache.find(depth);
  if (it == cache.end()) {
    it = cache.emplace(depth, htg::canonical_grid("uniform(2,2," + std::to_string(depth) + ")", 0, 0)).first;
  }
  return it->second;
}

void BM_FullSurface2D(benchmark::State& state) {
  const auto& g = uniform2d(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(htg::extract_surface_2d(g));
  state.counters["leaves"] = static_cast<double>(g.total_cells() - g.total_cells() / 4);
}
BENCHMARK(BM_FullSurface2D)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

// zoom z on a 1000x1000 window shows a 1/z wide square of the unit domain
void BM_AdaptiveZoom(benchmark::State& state) {
  const auto& g = uniform2d(10);
  htg::Camera2D cam;
  cam.window_w = 1000;
  cam.window_h = 1000;
  cam.zoom = static_cast<double>(state.range(0));
  cam.scale_threshold = 1;
  cam.center = {0.5, 0.5};
  std::size_t quads = 0;
  for (auto _ : state) {
    const auto m = htg::adaptive_surface(g, cam);
    quads = m.quad_count();
    benchmark::DoNotOptimize(m);
  }
  state.counters["quads"] = static_cast<double>(quads);
}
BENCHMARK(BM_AdaptiveZoom)->RangeMultiplier(10)->Range(1, 1000)->Unit(benchmark::kMicrosecond);

void BM_AdaptiveThreshold(benchmark::State& state) {
  const auto& g = uniform2d(10);
  htg::Camera2D cam;
  cam.window_w = 1000;
  cam.window_h = 1000;
  cam.zoom = 1;
  cam.scale_threshold = static_cast<double>(state.range(0));
  cam.center = {0.5, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(htg::adaptive_surface(g, cam));
}
BENCHMARK(BM_AdaptiveThreshold)->RangeMultiplier(4)->Range(1, 256)->Unit(benchmark::kMicrosecond);

void BM_Surface3D(benchmark::State& state) {
  const auto g = htg::canonical_grid("paper3d", 42, state.range(0) / 100.0);
  for (auto _ : state) benchmark::DoNotOptimize(htg::extract_surface_3d(g));
}
BENCHMARK(BM_Surface3D)->Arg(0)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_SelectLocations(benchmark::State& state) {
  const auto& g = uniform2d(8);
  htg::LocationQuery q{2, {}};
  for (int i = 0; i < state.range(0); ++i) q.points.push_back({(i * 0.618034) - int(i * 0.618034), (i * 0.414214) - int(i * 0.414214), 0});
  htg::SelectionRequest r;
  r.kind = q;
  r.preserve_topology = true;
  for (auto _ : state) benchmark::DoNotOptimize(htg::extract_selection(g, r));
}
BENCHMARK(BM_SelectLocations)->Arg(10)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_ParseGrid(benchmark::State& state) {
  const std::string text = htg::serialize_grid(uniform2d(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(htg::parse_grid(text));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParseGrid)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
