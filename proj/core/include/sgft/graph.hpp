#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "sgft/errors.hpp"

namespace sgft {

struct Edge {
  int u;
  int v;
  double weight;
};

// Undirected, connected, weighted graph. Edges are stored once with
// u < v; the adjacency matrix is materialized symmetrically on demand.
// Immutable after construction.
class Graph {
public:
  // Validates indices, weights, self-loops, duplicates and connectivity.
  static Graph from_edges(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Eigen::VectorXd& degrees() const { return degrees_; }

  double volume() const { return total_volume_; }
  double volume(std::span<const int> subset) const;

  Eigen::MatrixXd adjacency() const;
  Eigen::MatrixXd laplacian() const;
  Eigen::MatrixXd normalized_laplacian() const;

  // FNV-1a over the canonical edge list; used to key eigenbasis caches.
  std::uint64_t content_hash() const;

private:
  Graph() = default;

  int n_ = 0;
  std::vector<Edge> edges_;  // canonical: u < v, sorted lexicographically
  Eigen::VectorXd degrees_;
  double total_volume_ = 0.0;
};

// Edge-list text format: one `i j w` per line, 0-based, '#' comments.
Graph load_edge_list(const std::filesystem::path& path);
void save_edge_list(const Graph& g, const std::filesystem::path& path);

// Degree-centered, D-normalized indicator of a vertex subset:
// b/vol(S) on S, -b/vol(V\S) elsewhere, b = sqrt(vol(S)vol(V\S)/vol(V)).
struct SeedVector {
  Eigen::VectorXd values;
  std::vector<int> seed_set;
};

SeedVector unit_seed(const Graph& g, std::span<const int> seed);

}  // namespace sgft
