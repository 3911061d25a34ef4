#include <benchmark/benchmark.h>

#include "boolinv/complex.hpp"
#include "boolinv/morse.hpp"

namespace {

using namespace boolinv;

const char* const kSystems[] = {"A8", "B7", "D7", "E8", "tE8", "A12"};

void BM_Enumerate(benchmark::State& state) {
  const OrderedSystem sys = family(kSystems[state.range(0)]);
  BuildOptions options;
  options.threads = static_cast<unsigned>(state.range(1));
  std::size_t cells = 0;
  for (auto _ : state) {
    const FacePoset p = build_complex(sys, options);
    cells = p.size();
    benchmark::DoNotOptimize(cells);
  }
  state.SetLabel(sys.name);
  state.counters["cells"] = static_cast<double>(cells);
}
BENCHMARK(BM_Enumerate)
    ->ArgsProduct({{0, 1, 2, 3, 4, 5}, {1}})
    ->Args({5, 0})
    ->Unit(benchmark::kMillisecond);

void BM_Betti(benchmark::State& state) {
  const FacePoset p = build_complex(family(kSystems[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(betti_gf2(p));
  state.SetLabel(p.system().name);
}
BENCHMARK(BM_Betti)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_GammaMatching(benchmark::State& state) {
  const OrderedSystem sys = family(kSystems[state.range(0)]);
  for (auto _ : state) {
    const GammaMatching g = build_gamma_matching(sys);
    benchmark::DoNotOptimize(g.report.critical.size());
  }
  state.SetLabel(sys.name);
}
BENCHMARK(BM_GammaMatching)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_SearchBaseCase(benchmark::State& state) {
  const FacePoset p = build_complex(family(state.range(0) == 0 ? "E5" : "D5"));
  for (auto _ : state) benchmark::DoNotOptimize(search_gamma_matching(p));
  state.SetLabel(p.system().name);
}
BENCHMARK(BM_SearchBaseCase)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
