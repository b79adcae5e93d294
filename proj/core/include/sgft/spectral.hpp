#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>

#include "sgft/errors.hpp"

namespace sgft {

enum class OperatorKind : std::uint8_t {
  combinatorial_laplacian = 0,
  normalized_laplacian = 1,
};

const char* to_string(OperatorKind kind);

// K smallest eigenpairs of a symmetric operator, sorted nondecreasing,
// orthonormal columns, each column sign-fixed so its largest-magnitude
// entry is positive. Immutable once built.
struct EigenBasis {
  OperatorKind kind = OperatorKind::combinatorial_laplacian;
  int n = 0;
  int K = 0;
  Eigen::VectorXd eigenvalues;   // length K
  Eigen::MatrixXd eigenvectors;  // n x K

  bool full() const { return K == n; }
};

// Dense symmetric eigendecomposition keeping the K smallest pairs.
// The input must be symmetric to 1e-10 relative to its largest entry.
EigenBasis eigendecompose(const Eigen::MatrixXd& matrix, int K,
                          OperatorKind kind);

// Graph Fourier transform pair over the combinatorial Laplacian basis.
// Both require the full basis (K = n).
Eigen::VectorXd gft(const EigenBasis& basis, const Eigen::VectorXd& f);
Eigen::VectorXd igft(const EigenBasis& basis, const Eigen::VectorXd& fhat);

// Binary cache: magic "SGFTEB1\n", operator kind, n, K, graph hash,
// eigenvalues, column-major eigenvectors. Loading verifies the stored
// hash against the graph the caller is about to use it with.
void save_basis(const EigenBasis& basis, std::uint64_t graph_hash,
                const std::filesystem::path& path);
EigenBasis load_basis(const std::filesystem::path& path,
                      std::uint64_t expected_graph_hash);

}  // namespace sgft
