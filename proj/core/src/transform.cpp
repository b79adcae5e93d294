#include "sgft/transform.hpp"

#include <cmath>
#include <numeric>
#include <thread>

namespace sgft {

namespace {

void check_frequency(const EigenBasis& basis, int k) {
  if (k < 1 || k > basis.K)
    throw FrequencyOutOfRange("k=" + std::to_string(k) + " outside [1, " +
                              std::to_string(basis.K) + "]");
}

// sqrt(vol V) D^{-1/2}, the shared factor of every modulation vector
Eigen::VectorXd modulation_scale(const Graph& g) {
  return std::sqrt(g.volume()) * g.degrees().array().rsqrt().matrix();
}

}  // namespace

Eigen::VectorXd modulate(const Graph& g, const EigenBasis& basis, int k,
                         const Eigen::VectorXd& f) {
  if (basis.kind != OperatorKind::normalized_laplacian)
    throw PreconditionViolated(
        "graph modulation needs a normalized-Laplacian basis");
  check_frequency(basis, k);
  if (f.size() != g.num_vertices())
    throw InvalidEdge("signal length does not match graph size");
  return f.cwiseProduct(
      modulation_scale(g).cwiseProduct(basis.eigenvectors.col(k - 1)));
}

double sgft_coefficient(const Graph& g, const EigenBasis& basis,
                        const Eigen::VectorXd& f, int vertex, int k,
                        const LocalizationParams& params) {
  const Window w = make_window(g, basis, vertex, params);
  return f.dot(modulate(g, basis, k, w.values));
}

SpectrogramMatrix spectrogram(const Graph& g, const EigenBasis& basis,
                              const Eigen::VectorXd& f,
                              const LocalizationParams& params,
                              std::span<const int> vertices, int threads) {
  if (f.size() != g.num_vertices())
    throw InvalidEdge("signal length does not match graph size");

  std::vector<int> verts(vertices.begin(), vertices.end());
  if (verts.empty()) {
    verts.resize(g.num_vertices());
    std::iota(verts.begin(), verts.end(), 0);
  }

  SpectrogramMatrix spec;
  spec.vertices = verts;
  spec.K = basis.K;
  spec.method = "ppr";
  spec.beta = params.beta;
  spec.values.resize(static_cast<int>(verts.size()), basis.K);

  // row(i) = (U^T (f . scale . w_i))^2, one matvec per vertex
  const Eigen::VectorXd fscaled = f.cwiseProduct(modulation_scale(g));

  auto work = [&](size_t begin, size_t end) {
    for (size_t r = begin; r < end; ++r) {
      const Window w = make_window(g, basis, verts[r], params);
      Eigen::VectorXd row =
          basis.eigenvectors.transpose() * fscaled.cwiseProduct(w.values);
      spec.values.row(static_cast<int>(r)) = row.array().square();
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

std::vector<int> dominant_frequency_map(const SpectrogramMatrix& spec) {
  if (spec.values.size() == 0) throw EmptyDataset("empty spectrogram");
  std::vector<int> out(spec.values.rows());
  for (int r = 0; r < spec.values.rows(); ++r) {
    int best = 0;
    double best_val = spec.values(r, 0);
    for (int k = 1; k < spec.values.cols(); ++k) {
      if (spec.values(r, k) > best_val) {
        best_val = spec.values(r, k);
        best = k;
      }
    }
    out[r] = best + 1;
  }
  return out;
}

Eigen::VectorXd signature_correlation(const SpectrogramMatrix& spec,
                                      int vertex) {
  int row = -1;
  for (size_t r = 0; r < spec.vertices.size(); ++r)
    if (spec.vertices[r] == vertex) row = static_cast<int>(r);
  if (row < 0)
    throw InvalidEdge("vertex " + std::to_string(vertex) +
                      " not present in the spectrogram");

  const auto centered = [&](int r) {
    Eigen::VectorXd v = spec.values.row(r).transpose();
    return (v.array() - v.mean()).matrix().eval();
  };

  const Eigen::VectorXd ref = centered(row);
  const double ref_norm = ref.norm();
  if (ref_norm <= 0.0)
    throw ZeroVarianceSignature("vertex " + std::to_string(vertex) +
                                " has a constant signature");

  Eigen::VectorXd out(spec.values.rows());
  for (int r = 0; r < spec.values.rows(); ++r) {
    if (r == row) {
      out[r] = 1.0;
      continue;
    }
    const Eigen::VectorXd other = centered(r);
    const double norm = other.norm();
    out[r] = norm <= 0.0 ? std::numeric_limits<double>::quiet_NaN()
                         : ref.dot(other) / (ref_norm * norm);
  }
  return out;
}

Eigen::MatrixXd cluster_summed_energy(const SpectrogramMatrix& spec,
                                      const EigenBasis& basis,
                                      double tol) {
  if (spec.K > basis.K)
    throw PreconditionViolated("spectrogram has more columns than basis");

  std::vector<int> cluster_of(spec.K);
  int clusters = 0;
  for (int k = 0; k < spec.K; ++k) {
    if (k > 0 && basis.eigenvalues[k] - basis.eigenvalues[k - 1] >= tol)
      ++clusters;
    cluster_of[k] = clusters;
  }
  ++clusters;

  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(spec.values.rows(), clusters);
  for (int k = 0; k < spec.K; ++k)
    out.col(cluster_of[k]) += spec.values.col(k);
  return out;
}

}  // namespace sgft
