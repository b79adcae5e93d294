#include "sgft/baseline.hpp"

#include <cmath>
#include <numeric>
#include <thread>

namespace sgft {

namespace {

void require_combinatorial_full(const EigenBasis& basis) {
  if (basis.kind != OperatorKind::combinatorial_laplacian)
    throw PreconditionViolated(
        "baseline operators need a combinatorial-Laplacian basis");
  if (!basis.full())
    throw TruncatedBasis("baseline operators require K = n, got K=" +
                         std::to_string(basis.K));
}

}  // namespace

Eigen::VectorXd heat_kernel_window(const EigenBasis& basis, double tau) {
  require_combinatorial_full(basis);
  if (!(tau > 0.0))
    throw PreconditionViolated("tau must be positive");
  const Eigen::VectorXd ghat = (-tau * basis.eigenvalues.array()).exp();
  return basis.eigenvectors * ghat;
}

Eigen::VectorXd graph_convolve(const EigenBasis& basis,
                               const Eigen::VectorXd& f,
                               const Eigen::VectorXd& g) {
  require_combinatorial_full(basis);
  return igft(basis, gft(basis, f).cwiseProduct(gft(basis, g)));
}

Eigen::VectorXd translate(const EigenBasis& basis, int vertex,
                          const Eigen::VectorXd& g) {
  require_combinatorial_full(basis);
  if (vertex < 0 || vertex >= basis.n)
    throw InvalidEdge("translate vertex " + std::to_string(vertex) +
                      " out of range");
  const Eigen::VectorXd ghat = gft(basis, g);
  const Eigen::VectorXd row = basis.eigenvectors.row(vertex).transpose();
  return std::sqrt(static_cast<double>(basis.n)) *
         (basis.eigenvectors * row.cwiseProduct(ghat));
}

Eigen::VectorXd baseline_modulate(const EigenBasis& basis, int k,
                                  const Eigen::VectorXd& f) {
  if (basis.kind != OperatorKind::combinatorial_laplacian)
    throw PreconditionViolated(
        "baseline modulation needs a combinatorial-Laplacian basis");
  if (k < 1 || k > basis.K)
    throw FrequencyOutOfRange("k=" + std::to_string(k) + " outside [1, " +
                              std::to_string(basis.K) + "]");
  if (f.size() != basis.n)
    throw InvalidEdge("signal length does not match graph size");
  return std::sqrt(static_cast<double>(basis.n)) *
         f.cwiseProduct(basis.eigenvectors.col(k - 1));
}

double baseline_sgft(const EigenBasis& basis, const Eigen::VectorXd& f,
                     int vertex, int k, double tau) {
  const Eigen::VectorXd g = heat_kernel_window(basis, tau);
  const Eigen::VectorXd tg = translate(basis, vertex, g);
  return f.dot(baseline_modulate(basis, k, tg));
}

SpectrogramMatrix baseline_spectrogram(const EigenBasis& basis,
                                       const Eigen::VectorXd& f, double tau,
                                       int k_max,
                                       std::span<const int> vertices,
                                       int threads) {
  require_combinatorial_full(basis);
  if (k_max < 1 || k_max > basis.K)
    throw FrequencyOutOfRange("k_max=" + std::to_string(k_max));
  if (f.size() != basis.n)
    throw InvalidEdge("signal length does not match graph size");

  std::vector<int> verts(vertices.begin(), vertices.end());
  if (verts.empty()) {
    verts.resize(basis.n);
    std::iota(verts.begin(), verts.end(), 0);
  }

  SpectrogramMatrix spec;
  spec.vertices = verts;
  spec.K = k_max;
  spec.method = "conv";
  spec.tau = tau;
  spec.values.resize(static_cast<int>(verts.size()), k_max);

  const double sqrtn = std::sqrt(static_cast<double>(basis.n));
  const Eigen::VectorXd ghat = (-tau * basis.eigenvalues.array()).exp();

  auto work = [&](size_t begin, size_t end) {
    for (size_t r = begin; r < end; ++r) {
      const Eigen::VectorXd row_v =
          basis.eigenvectors.row(verts[r]).transpose();
      const Eigen::VectorXd tg =
          sqrtn * (basis.eigenvectors * row_v.cwiseProduct(ghat));
      // <f, M~_k T_i g> = sqrt(n) (V^T (f . T_i g))_k
      Eigen::VectorXd coeffs =
          sqrtn * (basis.eigenvectors.leftCols(k_max).transpose() *
                   f.cwiseProduct(tg));
      spec.values.row(static_cast<int>(r)) =
          coeffs.array().square();
    }
  };

  threads = std::max(1, threads);
  if (threads == 1 || verts.size() < 2) {
    work(0, verts.size());
  } else {
    std::vector<std::thread> pool;
    const size_t chunk = (verts.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const size_t begin = t * chunk;
      if (begin >= verts.size()) break;
      const size_t end = std::min(verts.size(), begin + chunk);
      pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  return spec;
}

}  // namespace sgft
