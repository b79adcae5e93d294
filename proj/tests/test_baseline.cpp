#include <cmath>

#include "doctest.h"
#include "sgft/baseline.hpp"
#include "sgft/datasets.hpp"
#include "test_helpers.hpp"

using namespace sgft;
using sgft::testing::ring;

namespace {

EigenBasis comb_basis(const Graph& g, int k = -1) {
  if (k < 0) k = g.num_vertices();
  return eigendecompose(g.laplacian(), k,
                        OperatorKind::combinatorial_laplacian);
}

// brute-force circular convolution, the classical oracle on a ring
Eigen::VectorXd circular_convolve(const Eigen::VectorXd& f,
                                  const Eigen::VectorXd& g) {
  const int n = static_cast<int>(f.size());
  Eigen::VectorXd h = Eigen::VectorXd::Zero(n);
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s) h[t] += f[s] * g[(t - s + n) % n];
  return h;
}

}  // namespace

TEST_CASE("heat kernel spectrum is in (0,1] and nonincreasing") {
  Graph g = ring(20);
  EigenBasis b = comb_basis(g);
  Eigen::VectorXd w = heat_kernel_window(b, 3.0);
  Eigen::VectorXd ghat = gft(b, w);
  CHECK(ghat[0] == doctest::Approx(1.0));
  for (int k = 0; k < 20; ++k) {
    CHECK(ghat[k] > 0.0);
    CHECK(ghat[k] <= 1.0 + 1e-12);
    if (k > 0) CHECK(ghat[k] <= ghat[k - 1] + 1e-12);
  }
}

TEST_CASE("heat kernel is monotone in tau") {
  Graph g = ring(20);
  EigenBasis b = comb_basis(g);
  Eigen::VectorXd g1 = gft(b, heat_kernel_window(b, 2.0));
  Eigen::VectorXd g2 = gft(b, heat_kernel_window(b, 5.0));
  for (int k = 0; k < 20; ++k) {
    CHECK(g2[k] <= g1[k] + 1e-12);
    if (b.eigenvalues[k] > 1e-10) CHECK(g2[k] < g1[k]);
  }
}

TEST_CASE("all-ones spectrum is the convolution identity") {
  Graph g = ring(9);
  EigenBasis b = comb_basis(g);
  Eigen::VectorXd ident = igft(b, Eigen::VectorXd::Ones(9));
  Eigen::VectorXd f = sgft::testing::random_signal(9, 2);
  CHECK((graph_convolve(b, f, ident) - f).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("graph convolution commutes") {
  Graph g = ring(11);
  EigenBasis b = comb_basis(g);
  Eigen::VectorXd f = sgft::testing::random_signal(11, 3);
  Eigen::VectorXd h = sgft::testing::random_signal(11, 4);
  CHECK((graph_convolve(b, f, h) - graph_convolve(b, h, f))
            .cwiseAbs()
            .maxCoeff() <= 1e-10);
}

TEST_CASE("spectral identity: gft(f * g) = fhat . ghat") {
  Graph g = ring(13);
  EigenBasis b = comb_basis(g);
  Eigen::VectorXd f = sgft::testing::random_signal(13, 5);
  Eigen::VectorXd h = sgft::testing::random_signal(13, 6);
  Eigen::VectorXd lhs = gft(b, graph_convolve(b, f, h));
  Eigen::VectorXd rhs = gft(b, f).cwiseProduct(gft(b, h));
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("graph convolution matches circular convolution on ring(8) "
          "nondegenerate modes") {
  // on the unit ring the eigenbasis is a real DFT; the simple modes
  // (constant, lambda=0, and alternating, lambda=4) are nondegenerate
  // and the convolution theorem gives ghat_graph = ghat_circ / sqrt(n)
  Graph g = ring(8);
  EigenBasis b = comb_basis(g);
  Eigen::VectorXd f = sgft::testing::random_signal(8, 7);
  Eigen::VectorXd h = sgft::testing::random_signal(8, 8);
  Eigen::VectorXd graph_hat = gft(b, graph_convolve(b, f, h));
  Eigen::VectorXd circ_hat = gft(b, circular_convolve(f, h));
  const double sqrtn = std::sqrt(8.0);
  CHECK(graph_hat[0] == doctest::Approx(circ_hat[0] / sqrtn).epsilon(1e-9));
  CHECK(graph_hat[7] == doctest::Approx(circ_hat[7] / sqrtn).epsilon(1e-9));
}

TEST_CASE("translation peaks at the target on the unweighted ring") {
  Graph g = ring(60);
  EigenBasis b = comb_basis(g);
  Eigen::VectorXd w = heat_kernel_window(b, 20.0);
  for (int i : {0, 17, 59}) {
    Eigen::VectorXd t = translate(b, i, w);
    int argmax = 0;
    t.maxCoeff(&argmax);
    CHECK(argmax == i);
  }
}

TEST_CASE("translated-window sum identity") {
  Graph g = ring(14);
  EigenBasis b = comb_basis(g);
  Eigen::VectorXd w = heat_kernel_window(b, 4.0);
  const Eigen::VectorXd ghat = gft(b, w);
  for (int i : {2, 9}) {
    const double lhs = translate(b, i, w).sum();
    const double rhs = std::sqrt(14.0) * ghat[0] * b.eigenvectors(i, 0) *
                       b.eigenvectors.col(0).sum();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("translation mislocates on the weighted ring") {
  Graph g = linear_graph(200, {{40, 41, 1e-3}, {159, 160, 1e-3}});
  EigenBasis b = comb_basis(g);
  Eigen::VectorXd w = heat_kernel_window(b, 200.0);
  Eigen::VectorXd t = translate(b, 45, w);
  int argmax = 0;
  t.maxCoeff(&argmax);
  CHECK(argmax != 45);
}

TEST_CASE("baseline modulation: identity at k=1, zero, norm bound") {
  Graph g = ring(16);
  EigenBasis b = comb_basis(g);
  Eigen::VectorXd f = sgft::testing::random_signal(16, 9);
  CHECK((baseline_modulate(b, 1, f) - f).cwiseAbs().maxCoeff() <=
        1e-10 * f.cwiseAbs().maxCoeff());
  CHECK(baseline_modulate(b, 3, Eigen::VectorXd::Zero(16))
            .cwiseAbs()
            .maxCoeff() == 0.0);
  for (int k : {2, 5, 16}) {
    const double bound = std::sqrt(16.0) *
                         b.eigenvectors.col(k - 1).cwiseAbs().maxCoeff() *
                         f.norm();
    CHECK(baseline_modulate(b, k, f).norm() <= bound + 1e-12);
  }
  CHECK_THROWS_AS(baseline_modulate(b, 17, f), FrequencyOutOfRange);
}

TEST_CASE("baseline sgft of the window itself at k=1 is its energy") {
  Graph g = ring(20);
  EigenBasis b = comb_basis(g);
  Eigen::VectorXd w = heat_kernel_window(b, 5.0);
  Eigen::VectorXd tw = translate(b, 7, w);
  CHECK(baseline_sgft(b, tw, 7, 1, 5.0) ==
        doctest::Approx(tw.squaredNorm()).epsilon(1e-9));
  CHECK(baseline_sgft(b, Eigen::VectorXd::Zero(20), 3, 4, 5.0) == 0.0);
}

TEST_CASE("baseline operators refuse a truncated basis") {
  Graph g = ring(10);
  EigenBasis b = comb_basis(g, 5);
  Eigen::VectorXd f = Eigen::VectorXd::Ones(10);
  CHECK_THROWS_AS(heat_kernel_window(b, 1.0), TruncatedBasis);
  CHECK_THROWS_AS(translate(b, 0, f), TruncatedBasis);
  CHECK_THROWS_AS(graph_convolve(b, f, f), TruncatedBasis);
}

TEST_CASE("baseline spectrogram matches pointwise baseline sgft") {
  Graph g = ring(18);
  EigenBasis b = comb_basis(g);
  Eigen::VectorXd f = sgft::testing::random_signal(18, 11);
  SpectrogramMatrix spec = baseline_spectrogram(b, f, 3.0, 6);
  CHECK(spec.method == "conv");
  for (int i : {0, 9}) {
    for (int k : {1, 4, 6}) {
      const double coeff = baseline_sgft(b, f, i, k, 3.0);
      CHECK(spec.values(i, k - 1) ==
            doctest::Approx(coeff * coeff).epsilon(1e-9));
    }
  }
}

TEST_CASE("baseline spectrogram is bit-identical across thread counts") {
  Graph g = ring(24);
  EigenBasis b = comb_basis(g);
  Eigen::VectorXd f = sgft::testing::random_signal(24, 12);
  SpectrogramMatrix s1 = baseline_spectrogram(b, f, 3.0, 24, {}, 1);
  SpectrogramMatrix s4 = baseline_spectrogram(b, f, 3.0, 24, {}, 4);
  CHECK((s1.values - s4.values).cwiseAbs().maxCoeff() == 0.0);
}
