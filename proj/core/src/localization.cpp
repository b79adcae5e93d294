#include "sgft/localization.hpp"

#include <cmath>

namespace sgft {

double gamma_for(const EigenBasis& basis, double beta) {
  if (!(beta > 0.0))
    throw GammaOutOfRange("beta must be positive, got " +
                          std::to_string(beta));
  return basis.eigenvalues[0] - beta;
}

Eigen::VectorXd local_spectral_solution(const Graph& g,
                                        const EigenBasis& basis,
                                        const SeedVector& s, double gamma,
                                        double c) {
  if (basis.kind != OperatorKind::normalized_laplacian)
    throw PreconditionViolated(
        "local spectral solve needs a normalized-Laplacian basis");
  if (basis.n != g.num_vertices())
    throw PreconditionViolated("basis/graph dimension mismatch");
  if (basis.K < 2)
    throw PreconditionViolated("need at least two eigenpairs");
  if (gamma >= basis.eigenvalues[1])
    throw GammaOutOfRange("gamma=" + std::to_string(gamma) +
                          " >= lambda_2=" +
                          std::to_string(basis.eigenvalues[1]));

  const Eigen::VectorXd dsqrt = g.degrees().array().sqrt();
  // spectral coefficients of the seed: U^T D^{1/2} s
  Eigen::VectorXd coeffs =
      basis.eigenvectors.transpose() * (dsqrt.cwiseProduct(s.values));
  for (int k = 0; k < basis.K; ++k) {
    const double shift = basis.eigenvalues[k] - gamma;
    coeffs[k] = std::abs(shift) < 1e-12 ? 0.0 : coeffs[k] / shift;
  }
  Eigen::VectorXd x = basis.eigenvectors * coeffs;
  return c * x.cwiseQuotient(dsqrt);
}

double verify_ppr(const Graph& g, const Eigen::VectorXd& x_star,
                  const SeedVector& s, double gamma, double c, int basis_k) {
  if (gamma >= 0.0)
    throw PreconditionViolated("PPR link requires gamma < 0");
  if (std::abs(c + gamma) > 1e-12 * std::max(1.0, std::abs(gamma)))
    throw PreconditionViolated("PPR link requires c = -gamma");
  if (basis_k != g.num_vertices())
    throw PreconditionViolated("PPR verification requires the full basis");

  const double alpha = 1.0 / (1.0 - gamma);
  const Eigen::VectorXd& d = g.degrees();
  const Eigen::VectorXd dp = d.cwiseProduct(x_star);
  const Eigen::VectorXd ds = d.cwiseProduct(s.values);
  const Eigen::VectorXd rhs =
      (1.0 - alpha) * ds + alpha * (g.adjacency() * x_star);
  return (dp - rhs).norm() / dp.norm();
}

Window make_window(const Graph& g, const EigenBasis& basis, int vertex,
                   const LocalizationParams& params) {
  if (vertex < 0 || vertex >= g.num_vertices())
    throw InvalidEdge("window vertex " + std::to_string(vertex) +
                      " out of range");

  const double gamma = gamma_for(basis, params.beta);
  std::array<int, 1> seed = {vertex};
  const SeedVector s = unit_seed(g, seed);
  Eigen::VectorXd x =
      local_spectral_solution(g, basis, s, gamma, params.c);

  x = x.cwiseMax(0.0);
  const double mass = x.lpNorm<1>();
  if (mass <= 0.0)
    throw DegenerateWindow("max(0, x*) vanished at vertex " +
                           std::to_string(vertex));

  Window w;
  w.values = x / mass;
  w.seed_vertex = vertex;
  w.params = params;
  return w;
}

}  // namespace sgft
