#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <vector>

#include "sgft/graph.hpp"

namespace sgft {

// Ring of n unit-weight vertices with selected ring edges overridden
// to a different weight. Overrides must name actual ring edges.
Graph linear_graph(int n, const std::vector<Edge>& weak_edges = {});

// 4-neighbor grid, optionally periodic (torus). Edges crossing the
// vertical split before `boundary_col` (and the wrap-around seam when
// periodic) get boundary_weight, all others weight 1.
// boundary_col < 0 means cols/2; boundary_weight 1 means no override.
Graph grid_graph(int rows, int cols, bool periodic = true,
                 double boundary_weight = 1.0, int boundary_col = -1);

// Two vertical sinusoids side by side: columns left of boundary_col
// (default cols/2) oscillate along rows with freq_left cycles, the
// rest with freq_right cycles. Vertex (r, c) maps to index r*cols + c.
Eigen::VectorXd two_waveform_signal(int rows, int cols, double freq_left,
                                    double freq_right,
                                    int boundary_col = -1);

enum class WeightMode {
  distance,
  inverse_distance,
  gaussian,
};

struct Point {
  double x;
  double y;
};

// Symmetrized k-NN graph (edge kept if either endpoint selects the
// other). Disconnected components are joined through their closest
// inter-component pair; `joined_components`, when given, receives how
// many such repair edges were added.
Graph knn_graph(const std::vector<Point>& points, int k,
                WeightMode mode = WeightMode::distance,
                double sigma = 1.0, int* joined_components = nullptr);

struct StationData {
  std::vector<Point> points;    // (longitude, latitude)
  Eigen::VectorXd values;
  std::vector<std::string> station_ids;
  int dropped_rows = 0;
};

// CSV with header station_id,latitude,longitude,value; rows with
// missing fields are dropped and counted.
StationData load_station_csv(const std::filesystem::path& path);

}  // namespace sgft
