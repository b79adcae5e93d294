#include "sgft/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cstring>
#include <fstream>

namespace sgft {

const char* to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::combinatorial_laplacian:
      return "combinatorial_laplacian";
    case OperatorKind::normalized_laplacian:
      return "normalized_laplacian";
  }
  return "?";
}

EigenBasis eigendecompose(const Eigen::MatrixXd& matrix, int K,
                          OperatorKind kind) {
  const int n = static_cast<int>(matrix.rows());
  if (matrix.cols() != n)
    throw NotSymmetric("matrix is not square");
  if (K < 1 || K > n)
    throw FrequencyOutOfRange("K=" + std::to_string(K) +
                              " outside [1, " + std::to_string(n) + "]");

  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  const double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * scale)
    throw NotSymmetric("max asymmetry " + std::to_string(asym));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("self-adjoint eigensolver did not converge");

  EigenBasis basis;
  basis.kind = kind;
  basis.n = n;
  basis.K = K;
  basis.eigenvalues = solver.eigenvalues().head(K);
  basis.eigenvectors = solver.eigenvectors().leftCols(K);

  // sign fix: largest-magnitude entry positive, first index on ties
  for (int k = 0; k < K; ++k) {
    int imax = 0;
    basis.eigenvectors.col(k).cwiseAbs().maxCoeff(&imax);
    if (basis.eigenvectors(imax, k) < 0.0)
      basis.eigenvectors.col(k) = -basis.eigenvectors.col(k);
  }
  return basis;
}

Eigen::VectorXd gft(const EigenBasis& basis, const Eigen::VectorXd& f) {
  if (!basis.full())
    throw TruncatedBasis("gft requires K = n, got K=" +
                         std::to_string(basis.K));
  if (f.size() != basis.n)
    throw InvalidEdge("signal length does not match graph size");
  return basis.eigenvectors.transpose() * f;
}

Eigen::VectorXd igft(const EigenBasis& basis, const Eigen::VectorXd& fhat) {
  if (!basis.full())
    throw TruncatedBasis("igft requires K = n, got K=" +
                         std::to_string(basis.K));
  if (fhat.size() != basis.n)
    throw InvalidEdge("spectrum length does not match graph size");
  return basis.eigenvectors * fhat;
}

namespace {
constexpr char kMagic[8] = {'S', 'G', 'F', 'T', 'E', 'B', '1', '\n'};
}

void save_basis(const EigenBasis& basis, std::uint64_t graph_hash,
                const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CacheFormat("cannot write " + path.string());
  out.write(kMagic, sizeof(kMagic));
  auto kind = static_cast<std::uint8_t>(basis.kind);
  std::uint64_t n = basis.n, k = basis.K;
  out.write(reinterpret_cast<const char*>(&kind), sizeof(kind));
  out.write(reinterpret_cast<const char*>(&n), sizeof(n));
  out.write(reinterpret_cast<const char*>(&k), sizeof(k));
  out.write(reinterpret_cast<const char*>(&graph_hash), sizeof(graph_hash));
  out.write(reinterpret_cast<const char*>(basis.eigenvalues.data()),
            static_cast<std::streamsize>(sizeof(double) * basis.K));
  out.write(reinterpret_cast<const char*>(basis.eigenvectors.data()),
            static_cast<std::streamsize>(sizeof(double) * basis.n * basis.K));
  if (!out) throw CacheFormat("short write to " + path.string());
}

EigenBasis load_basis(const std::filesystem::path& path,
                      std::uint64_t expected_graph_hash) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheFormat("cannot open " + path.string());

  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw CacheFormat(path.string() + " is not an eigenbasis cache");

  std::uint8_t kind;
  std::uint64_t n, k, hash;
  in.read(reinterpret_cast<char*>(&kind), sizeof(kind));
  in.read(reinterpret_cast<char*>(&n), sizeof(n));
  in.read(reinterpret_cast<char*>(&k), sizeof(k));
  in.read(reinterpret_cast<char*>(&hash), sizeof(hash));
  if (!in || kind > 1 || n == 0 || k == 0 || k > n)
    throw CacheFormat(path.string() + ": bad header");
  if (hash != expected_graph_hash)
    throw CacheMismatch(path.string() +
                        " was built from a different graph");

  EigenBasis basis;
  basis.kind = static_cast<OperatorKind>(kind);
  basis.n = static_cast<int>(n);
  basis.K = static_cast<int>(k);
  basis.eigenvalues.resize(basis.K);
  basis.eigenvectors.resize(basis.n, basis.K);
  in.read(reinterpret_cast<char*>(basis.eigenvalues.data()),
          static_cast<std::streamsize>(sizeof(double) * basis.K));
  in.read(reinterpret_cast<char*>(basis.eigenvectors.data()),
          static_cast<std::streamsize>(sizeof(double) * basis.n * basis.K));
  if (!in) throw CacheFormat(path.string() + ": truncated payload");
  return basis;
}

}  // namespace sgft
