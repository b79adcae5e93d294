#include "sgft/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

namespace sgft {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
  if (n <= 0) throw InvalidEdge("vertex count must be positive");

  for (auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw InvalidEdge("index out of range: (" + std::to_string(e.u) + ", " +
                        std::to_string(e.v) + ") with n=" + std::to_string(n));
    if (e.u == e.v)
      throw SelfLoop("vertex " + std::to_string(e.u));
    if (!(e.weight > 0.0))
      throw InvalidEdge("nonpositive weight on (" + std::to_string(e.u) +
                        ", " + std::to_string(e.v) + ")");
    if (e.u > e.v) std::swap(e.u, e.v);
  }

  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
      throw DuplicateEdge("(" + std::to_string(edges[i].u) + ", " +
                          std::to_string(edges[i].v) + ")");
  }

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.degrees_ = Eigen::VectorXd::Zero(n);

  std::vector<std::vector<int>> adj(n);
  for (const auto& e : g.edges_) {
    g.degrees_[e.u] += e.weight;
    g.degrees_[e.v] += e.weight;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  g.total_volume_ = g.degrees_.sum();

  // BFS connectivity check
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push(v);
      }
    }
  }
  if (reached != n)
    throw DisconnectedGraph(std::to_string(n - reached) +
                            " of " + std::to_string(n) +
                            " vertices unreachable from vertex 0");

  return g;
}

double Graph::volume(std::span<const int> subset) const {
  double v = 0.0;
  for (int i : subset) v += degrees_[i];
  return v;
}

Eigen::MatrixXd Graph::adjacency() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (const auto& e : edges_) {
    a(e.u, e.v) = e.weight;
    a(e.v, e.u) = e.weight;
  }
  return a;
}

Eigen::MatrixXd Graph::laplacian() const {
  Eigen::MatrixXd l = -adjacency();
  for (int i = 0; i < n_; ++i) l(i, i) = degrees_[i];
  return l;
}

Eigen::MatrixXd Graph::normalized_laplacian() const {
  Eigen::VectorXd dinvsqrt = degrees_.array().rsqrt();
  Eigen::MatrixXd nl = laplacian();
  nl = dinvsqrt.asDiagonal() * nl * dinvsqrt.asDiagonal();
  // symmetrize away rounding from the two-sided scaling
  nl = 0.5 * (nl + nl.transpose()).eval();
  return nl;
}

std::uint64_t Graph::content_hash() const {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](const void* data, size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
      h ^= p[i];
      h *= 1099511628211ull;
    }
  };
  mix(&n_, sizeof(n_));
  for (const auto& e : edges_) {
    mix(&e.u, sizeof(e.u));
    mix(&e.v, sizeof(e.v));
    mix(&e.weight, sizeof(e.weight));
  }
  return h;
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedRow("cannot open " + path.string());

  std::vector<Edge> edges;
  int max_vertex = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    int u, v;
    double w;
    if (!(ss >> u)) continue;  // blank or comment-only line
    if (!(ss >> v >> w))
      throw MalformedRow(path.string() + ":" + std::to_string(lineno));
    edges.push_back({u, v, w});
    max_vertex = std::max({max_vertex, u, v});
  }
  if (edges.empty()) throw EmptyDataset(path.string());
  return Graph::from_edges(max_vertex + 1, std::move(edges));
}

void save_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  out.precision(17);
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
  }
}

SeedVector unit_seed(const Graph& g, std::span<const int> seed) {
  if (seed.empty()) throw EmptySeed("seed set must be nonempty");

  const int n = g.num_vertices();
  std::vector<char> in_seed(n, 0);
  for (int i : seed) {
    if (i < 0 || i >= n)
      throw InvalidEdge("seed vertex " + std::to_string(i) + " out of range");
    in_seed[i] = 1;
  }

  const double vol_s = g.volume(seed);
  const double vol_rest = g.volume() - vol_s;
  if (vol_rest <= 0.0) throw FullSeed("seed set covers the whole graph");

  const double b = std::sqrt(vol_s * vol_rest / g.volume());

  SeedVector s;
  s.seed_set.assign(seed.begin(), seed.end());
  std::sort(s.seed_set.begin(), s.seed_set.end());
  s.values.resize(n);
  for (int i = 0; i < n; ++i)
    s.values[i] = in_seed[i] ? b / vol_s : -b / vol_rest;
  return s;
}

}  // namespace sgft
