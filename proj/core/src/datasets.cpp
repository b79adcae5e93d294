#include "sgft/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

namespace sgft {

Graph linear_graph(int n, const std::vector<Edge>& weak_edges) {
  if (n < 3) throw InvalidEdge("ring needs at least 3 vertices");

  std::vector<Edge> edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i)
    edges.push_back({i, (i + 1) % n, 1.0});

  for (const auto& weak : weak_edges) {
    int u = std::min(weak.u, weak.v);
    int v = std::max(weak.u, weak.v);
    const bool ring_edge = (v == u + 1) || (u == 0 && v == n - 1);
    if (!ring_edge)
      throw NotARingEdge("(" + std::to_string(weak.u) + ", " +
                         std::to_string(weak.v) + ")");
    const int idx = (u == 0 && v == n - 1) ? n - 1 : u;
    edges[idx].weight = weak.weight;
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph grid_graph(int rows, int cols, bool periodic, double boundary_weight,
                 int boundary_col) {
  if (rows < 3 || cols < 3)
    throw InvalidEdge("grid needs at least 3 rows and 3 columns");
  if (boundary_col < 0) boundary_col = cols / 2;

  auto id = [cols](int r, int c) { return r * cols + c; };
  // horizontal edges out of these columns cross between the halves
  auto crosses = [&](int c_from) {
    const int c_to = (c_from + 1) % cols;
    return (c_from < boundary_col) != (c_to < boundary_col);
  };

  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols || periodic) {
        const double w = crosses(c) ? boundary_weight : 1.0;
        edges.push_back({id(r, c), id(r, (c + 1) % cols), w});
      }
      if (r + 1 < rows || periodic)
        edges.push_back({id(r, c), id((r + 1) % rows, c), 1.0});
    }
  }
  return Graph::from_edges(rows * cols, std::move(edges));
}

Eigen::VectorXd two_waveform_signal(int rows, int cols, double freq_left,
                                    double freq_right, int boundary_col) {
  if (boundary_col < 0) boundary_col = cols / 2;
  Eigen::VectorXd f(rows * cols);
  for (int r = 0; r < rows; ++r) {
    const double phase = 2.0 * std::numbers::pi * r / rows;
    for (int c = 0; c < cols; ++c) {
      const double freq = c < boundary_col ? freq_left : freq_right;
      f[r * cols + c] = std::sin(freq * phase);
    }
  }
  return f;
}

namespace {

double edge_weight(double dist, WeightMode mode, double sigma) {
  switch (mode) {
    case WeightMode::distance:
      return dist;
    case WeightMode::inverse_distance:
      return 1.0 / dist;
    case WeightMode::gaussian:
      return std::exp(-dist * dist / (2.0 * sigma * sigma));
  }
  return dist;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

Graph knn_graph(const std::vector<Point>& points, int k, WeightMode mode,
                double sigma, int* joined_components) {
  const int n = static_cast<int>(points.size());
  if (k < 1 || n < k + 1)
    throw InvalidEdge("need at least k+1 points, got " + std::to_string(n));

  auto dist = [&](int i, int j) {
    return std::hypot(points[i].x - points[j].x, points[i].y - points[j].y);
  };

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (points[i].x == points[j].x && points[i].y == points[j].y)
        throw DuplicatePoints("points " + std::to_string(i) + " and " +
                              std::to_string(j));

  // union symmetrization: keep the edge if either endpoint selects it
  std::set<std::pair<int, int>> selected;
  for (int i = 0; i < n; ++i) {
    std::vector<int> order;
    order.reserve(n - 1);
    for (int j = 0; j < n; ++j)
      if (j != i) order.push_back(j);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return dist(i, a) < dist(i, b);
    });
    for (int j = 0; j < k; ++j) {
      const int other = order[j];
      selected.insert({std::min(i, other), std::max(i, other)});
    }
  }

  std::vector<Edge> edges;
  UnionFind uf(n);
  for (const auto& [u, v] : selected) {
    edges.push_back({u, v, edge_weight(dist(u, v), mode, sigma)});
    uf.unite(u, v);
  }

  // stitch disconnected components through their closest pair
  int repairs = 0;
  for (;;) {
    int best_u = -1, best_v = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (uf.find(i) != uf.find(j) && dist(i, j) < best) {
          best = dist(i, j);
          best_u = i;
          best_v = j;
        }
    if (best_u < 0) break;
    edges.push_back({best_u, best_v, edge_weight(best, mode, sigma)});
    uf.unite(best_u, best_v);
    ++repairs;
  }
  if (joined_components) *joined_components = repairs;

  return Graph::from_edges(n, std::move(edges));
}

StationData load_station_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedRow("cannot open " + path.string());

  auto split = [](const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
  };

  std::string header;
  if (!std::getline(in, header)) throw EmptyDataset(path.string());
  auto cols = split(header);
  int id_col = -1, lat_col = -1, lon_col = -1, val_col = -1;
  for (int i = 0; i < static_cast<int>(cols.size()); ++i) {
    if (cols[i] == "station_id") id_col = i;
    else if (cols[i] == "latitude") lat_col = i;
    else if (cols[i] == "longitude") lon_col = i;
    else if (cols[i] == "value") val_col = i;
  }
  if (id_col < 0 || lat_col < 0 || lon_col < 0 || val_col < 0)
    throw MalformedRow(path.string() +
                       ": header must contain station_id, latitude, "
                       "longitude, value");

  StationData data;
  std::vector<double> values;
  std::string line;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = split(line);
    if (fields.size() != cols.size())
      throw MalformedRow(path.string() + ":" + std::to_string(lineno));
    if (fields[lat_col].empty() || fields[lon_col].empty() ||
        fields[val_col].empty()) {
      ++data.dropped_rows;
      continue;
    }
    try {
      size_t pos;
      const double lat = std::stod(fields[lat_col], &pos);
      const double lon = std::stod(fields[lon_col]);
      const double val = std::stod(fields[val_col]);
      data.points.push_back({lon, lat});
      values.push_back(val);
      data.station_ids.push_back(fields[id_col]);
    } catch (const std::exception&) {
      throw MalformedRow(path.string() + ":" + std::to_string(lineno));
    }
  }
  if (data.points.empty()) throw EmptyDataset(path.string());
  data.values = Eigen::Map<Eigen::VectorXd>(values.data(),
                                            static_cast<int>(values.size()));
  return data;
}

}  // namespace sgft
