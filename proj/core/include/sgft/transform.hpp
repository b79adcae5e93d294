#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgft/graph.hpp"
#include "sgft/localization.hpp"
#include "sgft/spectral.hpp"

namespace sgft {

// Squared SGFT magnitudes. Row r corresponds to vertices[r], column
// k-1 to frequency index k (frequencies are 1-based throughout, so
// k = 1 is the identity modulation).
struct SpectrogramMatrix {
  Eigen::MatrixXd values;      // rows x K, entries >= 0
  std::vector<int> vertices;   // vertex behind each row
  int K = 0;
  std::string method;          // "ppr" or "conv"
  double beta = 0.0;           // ppr only
  double tau = 0.0;            // conv only
};

// Graph modulation: f entrywise-scaled by sqrt(vol V) D^{-1/2} u_k.
// k is 1-based; k = 1 is the identity on a connected graph.
Eigen::VectorXd modulate(const Graph& g, const EigenBasis& basis, int k,
                         const Eigen::VectorXd& f);

// Single SGFT coefficient <f, M_k w_i>.
double sgft_coefficient(const Graph& g, const EigenBasis& basis,
                        const Eigen::VectorXd& f, int vertex, int k,
                        const LocalizationParams& params);

// Full spectrogram; windows are computed once per vertex and rows are
// independent, so the work is split across `threads` with a merge that
// is deterministic by vertex index.
SpectrogramMatrix spectrogram(const Graph& g, const EigenBasis& basis,
                              const Eigen::VectorXd& f,
                              const LocalizationParams& params,
                              std::span<const int> vertices = {},
                              int threads = 1);

// Per row, the 1-based frequency index maximizing the spectrogram
// entry; ties break toward the smallest index.
std::vector<int> dominant_frequency_map(const SpectrogramMatrix& spec);

// Pearson correlation between the signature (spectrogram row) of
// `vertex` and every row. Entry for the vertex itself is 1; rows with
// zero variance come back as NaN. Throws if the reference row itself
// has zero variance.
Eigen::VectorXd signature_correlation(const SpectrogramMatrix& spec,
                                      int vertex);

// Frequencies grouped by eigenvalue clusters (gap < tol); returns the
// per-row spectrogram energy summed within each cluster. This is the
// rotation-invariant quantity on graphs with repeated eigenvalues.
Eigen::MatrixXd cluster_summed_energy(const SpectrogramMatrix& spec,
                                      const EigenBasis& basis,
                                      double tol = 1e-8);

}  // namespace sgft
