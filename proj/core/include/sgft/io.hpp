#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "sgft/localization.hpp"
#include "sgft/transform.hpp"

namespace sgft {

// Two-column text: vertex index, weight.
void write_window(const Window& w, const std::filesystem::path& path);

// CSV with a header row of 1-based frequency indices; the first column
// is the vertex index. A `method=...` tag rides in the header comment.
void write_spectrogram_csv(const SpectrogramMatrix& spec,
                           const std::filesystem::path& path);

// Two-column CSV: vertex, dominant frequency index.
void write_dominant_csv(const SpectrogramMatrix& spec,
                        const std::vector<int>& dominant,
                        const std::filesystem::path& path);

// vertex, correlation (and coordinates when provided); NaN printed as
// an empty field.
void write_correlation_csv(const std::vector<int>& vertices,
                           const Eigen::VectorXd& corr,
                           const std::vector<std::pair<double, double>>& xy,
                           const std::filesystem::path& path);

// Binary PGM (P5) of a matrix, linearly scaled to [0, 255]; min/max
// land in a `<path>.scale.txt` sidecar.
void write_pgm(const Eigen::MatrixXd& m, const std::filesystem::path& path);

// key: value lines, keys in insertion order.
void write_manifest(const std::vector<std::pair<std::string, std::string>>&
                        entries,
                    const std::filesystem::path& path);

}  // namespace sgft
