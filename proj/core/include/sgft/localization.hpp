#pragma once

#include <Eigen/Dense>

#include "sgft/graph.hpp"
#include "sgft/spectral.hpp"

namespace sgft {

// Parameters of the locally-biased spectral solve. beta is the
// user-facing knob; gamma is derived from the realized smallest
// eigenvalue of the normalized Laplacian as lambda_1 - beta. The
// scale c is free: windows are invariant to it, and the PPR
// verification forces c = -gamma.
struct LocalizationParams {
  double beta = 1e-4;
  double c = 1.0;
};

double gamma_for(const EigenBasis& basis, double beta);

// Closed-form solution of the seeded spectral problem:
//   x* = c (D^{-1/2}U)(Lambda - gamma I)^+ (D^{-1/2}U)^T D s
// Modes with |lambda_k - gamma| < 1e-12 contribute zero.
// Requires a normalized-Laplacian basis with K >= 2 and
// gamma < lambda_2.
Eigen::VectorXd local_spectral_solution(const Graph& g,
                                        const EigenBasis& basis,
                                        const SeedVector& s, double gamma,
                                        double c);

// Residual of the degree-normalized personalized PageRank equation
//   Dp = (1-alpha) Ds + alpha A D^{-1} Dp,  alpha = 1/(1 - gamma),
// for p = x_star. Requires gamma < 0, c = -gamma, and a full basis
// (basis_k == n); returns ||lhs - rhs||_2 / ||Dp||_2.
double verify_ppr(const Graph& g, const Eigen::VectorXd& x_star,
                  const SeedVector& s, double gamma, double c, int basis_k);

// Nonnegative, L1-normalized truncation of the local spectral
// solution seeded at a single vertex.
struct Window {
  Eigen::VectorXd values;
  int seed_vertex = -1;
  LocalizationParams params;
};

Window make_window(const Graph& g, const EigenBasis& basis, int vertex,
                   const LocalizationParams& params);

}  // namespace sgft
