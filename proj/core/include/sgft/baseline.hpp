#pragma once

#include <Eigen/Dense>
#include <span>

#include "sgft/graph.hpp"
#include "sgft/spectral.hpp"
#include "sgft/transform.hpp"

namespace sgft {

// Convolutional windowed transform over the combinatorial Laplacian
// basis: heat-kernel window, spectral translation and modulation.
// Translation structurally needs every mode, so these take a full
// basis; the frequency index range may still be truncated.

// Vertex-domain heat kernel g = V ghat with ghat_k = exp(-tau lambda_k).
Eigen::VectorXd heat_kernel_window(const EigenBasis& basis, double tau);

// f * g = V (f_hat . g_hat)
Eigen::VectorXd graph_convolve(const EigenBasis& basis,
                               const Eigen::VectorXd& f,
                               const Eigen::VectorXd& g);

// T_i g = sqrt(n) V ((V^T)_{:i} . g_hat)
Eigen::VectorXd translate(const EigenBasis& basis, int vertex,
                          const Eigen::VectorXd& g);

// M~_k f = sqrt(n) f . v_k, k 1-based
Eigen::VectorXd baseline_modulate(const EigenBasis& basis, int k,
                                  const Eigen::VectorXd& f);

// <f, M~_k T_i g> with g the heat-kernel window at tau
double baseline_sgft(const EigenBasis& basis, const Eigen::VectorXd& f,
                     int vertex, int k, double tau);

// Squared magnitudes over the first k_max frequencies.
SpectrogramMatrix baseline_spectrogram(const EigenBasis& basis,
                                       const Eigen::VectorXd& f, double tau,
                                       int k_max,
                                       std::span<const int> vertices = {},
                                       int threads = 1);

}  // namespace sgft
