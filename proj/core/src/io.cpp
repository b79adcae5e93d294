#include "sgft/io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>

namespace sgft {

namespace {

std::ofstream open_text(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw MalformedRow("cannot write " + path.string());
  out.precision(17);
  return out;
}

std::string method_tag(const SpectrogramMatrix& spec) {
  std::string tag = "method=" + spec.method;
  if (spec.method == "ppr")
    tag += " beta=" + std::to_string(spec.beta);
  else
    tag += " tau=" + std::to_string(spec.tau);
  return tag;
}

}  // namespace

void write_window(const Window& w, const std::filesystem::path& path) {
  auto out = open_text(path);
  for (int i = 0; i < w.values.size(); ++i)
    out << i << ' ' << w.values[i] << '\n';
}

void write_spectrogram_csv(const SpectrogramMatrix& spec,
                           const std::filesystem::path& path) {
  auto out = open_text(path);
  out << "# " << method_tag(spec) << '\n';
  out << "vertex";
  for (int k = 1; k <= spec.K; ++k) out << ",f" << k;
  out << '\n';
  for (int r = 0; r < spec.values.rows(); ++r) {
    out << spec.vertices[r];
    for (int k = 0; k < spec.K; ++k) out << ',' << spec.values(r, k);
    out << '\n';
  }
}

void write_dominant_csv(const SpectrogramMatrix& spec,
                        const std::vector<int>& dominant,
                        const std::filesystem::path& path) {
  auto out = open_text(path);
  out << "# " << method_tag(spec) << '\n';
  out << "vertex,dominant_frequency\n";
  for (size_t r = 0; r < dominant.size(); ++r)
    out << spec.vertices[r] << ',' << dominant[r] << '\n';
}

void write_correlation_csv(const std::vector<int>& vertices,
                           const Eigen::VectorXd& corr,
                           const std::vector<std::pair<double, double>>& xy,
                           const std::filesystem::path& path) {
  auto out = open_text(path);
  out << "vertex,correlation";
  if (!xy.empty()) out << ",x,y";
  out << '\n';
  for (size_t r = 0; r < vertices.size(); ++r) {
    out << vertices[r] << ',';
    if (std::isnan(corr[static_cast<int>(r)]))
      out << "";
    else
      out << corr[static_cast<int>(r)];
    if (!xy.empty()) out << ',' << xy[r].first << ',' << xy[r].second;
    out << '\n';
  }
}

void write_pgm(const Eigen::MatrixXd& m, const std::filesystem::path& path) {
  const double lo = m.minCoeff();
  const double hi = m.maxCoeff();
  const double span = hi > lo ? hi - lo : 1.0;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedRow("cannot write " + path.string());
  out << "P5\n" << m.cols() << ' ' << m.rows() << "\n255\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      const double scaled = 255.0 * (m(r, c) - lo) / span;
      const auto pixel =
          static_cast<std::uint8_t>(std::lround(std::clamp(scaled, 0.0, 255.0)));
      out.put(static_cast<char>(pixel));
    }
  }

  auto sidecar = open_text(path.string() + ".scale.txt");
  sidecar << "min " << lo << "\nmax " << hi << '\n';
}

void write_manifest(const std::vector<std::pair<std::string, std::string>>&
                        entries,
                    const std::filesystem::path& path) {
  auto out = open_text(path);
  for (const auto& [key, value] : entries) out << key << ": " << value << '\n';
}

}  // namespace sgft
