#include <benchmark/benchmark.h>

#include "sgft/datasets.hpp"
#include "sgft/localization.hpp"
#include "sgft/transform.hpp"

using namespace sgft;

static void BM_Eigendecompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = linear_graph(n);
  Eigen::MatrixXd nl = g.normalized_laplacian();
  for (auto _ : state) {
    auto basis = eigendecompose(nl, n, OperatorKind::normalized_laplacian);
    benchmark::DoNotOptimize(basis.eigenvalues.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Eigendecompose)->Arg(100)->Arg(400)->Arg(900)->Complexity();

static void BM_Window(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = linear_graph(n);
  EigenBasis b = eigendecompose(g.normalized_laplacian(), n,
                                OperatorKind::normalized_laplacian);
  int vertex = 0;
  for (auto _ : state) {
    Window w = make_window(g, b, vertex, {.beta = 1e-4, .c = 1.0});
    benchmark::DoNotOptimize(w.values.data());
    vertex = (vertex + 1) % n;
  }
}
BENCHMARK(BM_Window)->Arg(200)->Arg(900);

static void BM_Spectrogram(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  Graph g = grid_graph(side, side, true, 1e-5);
  const int n = g.num_vertices();
  EigenBasis b = eigendecompose(g.normalized_laplacian(), std::min(100, n),
                                OperatorKind::normalized_laplacian);
  Eigen::VectorXd f = two_waveform_signal(side, side, 2.0, 10.0);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto spec = spectrogram(g, b, f, {.beta = 1e-4, .c = 1.0}, {}, threads);
    benchmark::DoNotOptimize(spec.values.data());
  }
}
BENCHMARK(BM_Spectrogram)->Args({10, 1})->Args({10, 4})->Args({20, 4});

BENCHMARK_MAIN();
