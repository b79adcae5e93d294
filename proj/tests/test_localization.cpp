#include <Eigen/Dense>
#include <array>

#include "doctest.h"
#include "sgft/datasets.hpp"
#include "sgft/localization.hpp"
#include "test_helpers.hpp"

using namespace sgft;
using sgft::testing::ring;

namespace {

EigenBasis normalized_basis(const Graph& g, int k = -1) {
  if (k < 0) k = g.num_vertices();
  return eigendecompose(g.normalized_laplacian(), k,
                        OperatorKind::normalized_laplacian);
}

SeedVector single_seed(const Graph& g, int i) {
  std::array<int, 1> s = {i};
  return unit_seed(g, s);
}

// independent oracle: dense solve of (L - gamma D) x = c D s
Eigen::VectorXd dense_oracle(const Graph& g, const SeedVector& s,
                             double gamma, double c) {
  Eigen::MatrixXd m =
      g.laplacian() - gamma * Eigen::MatrixXd(g.degrees().asDiagonal());
  Eigen::VectorXd rhs = c * g.degrees().cwiseProduct(s.values);
  return m.ldlt().solve(rhs);
}

}  // namespace

TEST_CASE("closed form matches the dense linear solve on ring(200)") {
  Graph g = ring(200);
  EigenBasis b = normalized_basis(g);
  SeedVector s = single_seed(g, 50);
  const double gamma = gamma_for(b, 1e-4);

  Eigen::VectorXd x = local_spectral_solution(g, b, s, gamma, 1.0);
  Eigen::VectorXd oracle = dense_oracle(g, s, gamma, 1.0);
  CHECK((x - oracle).norm() <= 1e-8 * oracle.norm());

  int argmax = 0;
  x.maxCoeff(&argmax);
  CHECK(argmax == 50);
}

TEST_CASE("solution is linear in c") {
  Graph g = ring(50);
  EigenBasis b = normalized_basis(g);
  SeedVector s = single_seed(g, 10);
  const double gamma = gamma_for(b, 1e-3);
  Eigen::VectorXd x1 = local_spectral_solution(g, b, s, gamma, 1.0);
  Eigen::VectorXd x2 = local_spectral_solution(g, b, s, gamma, 2.0);
  CHECK((x2 - 2.0 * x1).cwiseAbs().maxCoeff() <= 1e-14 * x1.cwiseAbs().maxCoeff());
}

TEST_CASE("near the lambda_2 pole the solution aligns with v2") {
  Graph g = ring(31);
  EigenBasis b = normalized_basis(g);
  SeedVector s = single_seed(g, 4);
  const double gamma = b.eigenvalues[1] - 1e-10;
  // ring(31) has a degenerate lambda_2 pair; compare within the span
  Eigen::VectorXd x = local_spectral_solution(g, b, s, gamma, 1.0);
  x.normalize();
  const Eigen::VectorXd dsqrt = g.degrees().array().sqrt();
  Eigen::VectorXd y = dsqrt.cwiseProduct(x);
  Eigen::Vector2d proj(b.eigenvectors.col(1).dot(y),
                       b.eigenvectors.col(2).dot(y));
  CHECK(proj.norm() / y.norm() >= 0.999);
}

TEST_CASE("gamma at or above lambda_2 is rejected") {
  Graph g = ring(20);
  EigenBasis b = normalized_basis(g);
  SeedVector s = single_seed(g, 0);
  CHECK_THROWS_AS(
      local_spectral_solution(g, b, s, b.eigenvalues[1] + 0.1, 1.0),
      GammaOutOfRange);
  CHECK_THROWS_AS(gamma_for(b, -1.0), GammaOutOfRange);
}

TEST_CASE("spectral coefficients of x* match the closed form") {
  Graph g = ring(60);
  EigenBasis b = normalized_basis(g);
  SeedVector s = single_seed(g, 12);
  const double gamma = gamma_for(b, 1e-3);
  const double c = 2.5;
  Eigen::VectorXd x = local_spectral_solution(g, b, s, gamma, c);

  const Eigen::VectorXd dsqrt = g.degrees().array().sqrt();
  Eigen::VectorXd spec = b.eigenvectors.transpose() * dsqrt.cwiseProduct(x);
  Eigen::VectorXd seed_spec =
      b.eigenvectors.transpose() * dsqrt.cwiseProduct(s.values);
  for (int k = 0; k < b.K; ++k) {
    const double expected = c * seed_spec[k] / (b.eigenvalues[k] - gamma);
    CHECK(std::abs(spec[k] - expected) <= 1e-10);
  }
}

TEST_CASE("truncation error decreases as K grows") {
  Graph g = ring(80);
  EigenBasis full = normalized_basis(g);
  SeedVector s = single_seed(g, 40);
  const double gamma = gamma_for(full, 1e-3);
  Eigen::VectorXd exact = local_spectral_solution(g, full, s, gamma, 1.0);

  double prev = std::numeric_limits<double>::infinity();
  for (int k : {5, 20, 40, 80}) {
    EigenBasis trunc = normalized_basis(g, k);
    Eigen::VectorXd x = local_spectral_solution(g, trunc, s, gamma, 1.0);
    const double err = (x - exact).norm();
    CHECK(err <= prev + 1e-12);
    prev = err;
  }
}

TEST_CASE("PPR equation residual on ring(200), seed 50, beta 1e-4") {
  Graph g = ring(200);
  EigenBasis b = normalized_basis(g);
  SeedVector s = single_seed(g, 50);
  const double gamma = gamma_for(b, 1e-4);
  REQUIRE(gamma < 0.0);
  Eigen::VectorXd x = local_spectral_solution(g, b, s, gamma, -gamma);
  CHECK(verify_ppr(g, x, s, gamma, -gamma, b.K) <= 1e-8);
}

TEST_CASE("verify_ppr rejects broken preconditions") {
  Graph g = ring(20);
  EigenBasis b = normalized_basis(g);
  SeedVector s = single_seed(g, 3);
  const double gamma = gamma_for(b, 1e-3);
  Eigen::VectorXd x = local_spectral_solution(g, b, s, gamma, -gamma);

  CHECK_THROWS_AS(verify_ppr(g, x, s, gamma, -gamma, 10),
                  PreconditionViolated);  // truncated
  CHECK_THROWS_AS(verify_ppr(g, x, s, 0.5, -0.5, 20), PreconditionViolated);
  CHECK_THROWS_AS(verify_ppr(g, x, s, gamma, 1.0, 20), PreconditionViolated);
}

TEST_CASE("verify_ppr is sensitive to perturbation") {
  Graph g = ring(200);
  EigenBasis b = normalized_basis(g);
  SeedVector s = single_seed(g, 50);
  const double gamma = gamma_for(b, 1e-4);
  Eigen::VectorXd x = local_spectral_solution(g, b, s, gamma, -gamma);
  Eigen::VectorXd noise = sgft::testing::random_signal(200, 99);
  noise *= 1e-2 * x.norm() / noise.norm();
  CHECK(verify_ppr(g, x + noise, s, gamma, -gamma, b.K) > 1e-4);
}

TEST_CASE("window on the unweighted ring peaks at the seed, symmetrically") {
  Graph g = ring(200);
  EigenBasis b = normalized_basis(g);
  Window w = make_window(g, b, 50, {.beta = 1e-4, .c = 1.0});

  CHECK(w.values.minCoeff() >= 0.0);
  CHECK(std::abs(w.values.sum() - 1.0) <= 1e-12);

  int argmax = 0;
  w.values.maxCoeff(&argmax);
  CHECK(argmax == 50);
  for (int offset = 1; offset < 100; ++offset)
    CHECK(w.values[(50 + offset) % 200] ==
          doctest::Approx(w.values[(50 - offset + 200) % 200]).epsilon(1e-8));
}

TEST_CASE("weighted ring window stays inside the strong segment") {
  Graph g = linear_graph(200, {{40, 41, 1e-3}, {159, 160, 1e-3}});
  EigenBasis b = normalized_basis(g);
  Window w = make_window(g, b, 45, {.beta = 1e-4, .c = 1.0});

  int argmax = 0;
  w.values.maxCoeff(&argmax);
  CHECK(argmax == 45);
  double inside = 0.0;
  for (int i = 41; i <= 159; ++i) inside += w.values[i];
  CHECK(inside >= 0.99);
}

TEST_CASE("window is invariant to the scale c") {
  Graph g = ring(80);
  EigenBasis b = normalized_basis(g);
  for (double c : {0.5, 7.3}) {
    Window w1 = make_window(g, b, 10, {.beta = 1e-4, .c = 1.0});
    Window w2 = make_window(g, b, 10, {.beta = 1e-4, .c = c});
    CHECK((w1.values - w2.values).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("peak-at-seed holds across beta on ring and torus") {
  Graph r = ring(60);
  EigenBasis rb = normalized_basis(r);
  Graph t = grid_graph(8, 8, true);
  EigenBasis tb = normalized_basis(t);
  for (double beta : {1e-5, 1e-4, 1e-3, 1e-2}) {
    Window wr = make_window(r, rb, 17, {.beta = beta, .c = 1.0});
    int argmax = 0;
    wr.values.maxCoeff(&argmax);
    CHECK(argmax == 17);

    Window wt = make_window(t, tb, 27, {.beta = beta, .c = 1.0});
    wt.values.maxCoeff(&argmax);
    CHECK(argmax == 27);
  }
}
