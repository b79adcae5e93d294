// sgft: reproducible graph-spectrogram experiments from the command line.
//
// Subcommands: window, spectrogram, signature, eigcache. Each takes a
// graph source (ring | grid | knn | edgelist) plus its generator flags.
// Exit codes: 0 ok, 1 usage, 2 data error, 3 numerical failure.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <queue>
#include <sstream>

#include "CLI11.hpp"
#include "sgft/baseline.hpp"
#include "sgft/datasets.hpp"
#include "sgft/io.hpp"
#include "sgft/localization.hpp"
#include "sgft/transform.hpp"

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct GraphOptions {
  std::string source;
  // ring
  int n = 200;
  std::vector<std::string> weak;
  // grid
  int rows = 50;
  int cols = 50;
  bool no_periodic = false;
  double boundary_weight = 1.0;
  int boundary_col = -1;
  // knn
  std::string stations;
  int k = 6;
  std::string weight_mode = "distance";
  double sigma = 1.0;
  // edgelist
  std::string edge_file;
};

struct SignalOptions {
  std::string kind = "auto";  // two-waveform | stations | file
  std::string file;
  double freq_left = 2.0;
  double freq_right = 10.0;
};

struct RunOptions {
  double beta = 1e-4;
  double tau = 200.0;
  int num_eigs = 0;  // 0 = unset, resolved to n unless given
  bool num_eigs_given = false;
  std::string method = "ppr";
  int threads = 1;
  std::string eig_cache;
};

void add_graph_options(CLI::App& cmd, GraphOptions& g) {
  cmd.add_option("source", g.source, "graph source: ring|grid|knn|edgelist")
      ->required()
      ->check(CLI::IsMember({"ring", "grid", "knn", "edgelist"}));
  cmd.add_option("--n", g.n, "ring: vertex count");
  cmd.add_option("--weak", g.weak, "ring: weak edge override i:j:w");
  cmd.add_option("--rows", g.rows, "grid: row count");
  cmd.add_option("--cols", g.cols, "grid: column count");
  cmd.add_flag("--no-periodic", g.no_periodic, "grid: open boundaries");
  cmd.add_option("--boundary-weight", g.boundary_weight,
                 "grid: weight of edges crossing the half split");
  cmd.add_option("--boundary-col", g.boundary_col,
                 "grid: split column (default cols/2)");
  cmd.add_option("--stations", g.stations, "knn: station CSV path");
  cmd.add_option("--k", g.k, "knn: neighbor count");
  cmd.add_option("--weight-mode", g.weight_mode,
                 "knn: distance|inverse_distance|gaussian")
      ->check(CLI::IsMember({"distance", "inverse_distance", "gaussian"}));
  cmd.add_option("--sigma", g.sigma, "knn: gaussian bandwidth");
  cmd.add_option("--edge-file", g.edge_file, "edgelist: path");
}

void add_run_options(CLI::App& cmd, RunOptions& r, bool with_method) {
  cmd.add_option("--beta", r.beta, "PPR window offset");
  cmd.add_option("--tau", r.tau, "heat-kernel scale for --method conv");
  auto* ne = cmd.add_option("--num-eigs", r.num_eigs,
                            "retained eigenpairs (default: all)");
  ne->each([&r](const std::string&) { r.num_eigs_given = true; });
  if (with_method)
    cmd.add_option("--method", r.method, "ppr|conv")
        ->check(CLI::IsMember({"ppr", "conv"}));
  cmd.add_option("--threads", r.threads, "worker thread cap");
  cmd.add_option("--eig-cache", r.eig_cache,
                 "eigenbasis cache file (created if absent)");
}

std::vector<sgft::Edge> parse_weak_edges(const std::vector<std::string>& raw) {
  std::vector<sgft::Edge> edges;
  for (const auto& spec : raw) {
    sgft::Edge e;
    char c1, c2;
    std::istringstream ss(spec);
    if (!(ss >> e.u >> c1 >> e.v >> c2 >> e.weight) || c1 != ':' || c2 != ':')
      throw CLI::ValidationError("--weak expects i:j:w, got " + spec);
    edges.push_back(e);
  }
  return edges;
}

sgft::WeightMode parse_weight_mode(const std::string& mode) {
  if (mode == "inverse_distance") return sgft::WeightMode::inverse_distance;
  if (mode == "gaussian") return sgft::WeightMode::gaussian;
  return sgft::WeightMode::distance;
}

struct LoadedGraph {
  sgft::Graph graph;
  std::optional<sgft::StationData> stations;
};

LoadedGraph build_graph(const GraphOptions& opt) {
  if (opt.source == "ring")
    return {sgft::linear_graph(opt.n, parse_weak_edges(opt.weak)), {}};
  if (opt.source == "grid")
    return {sgft::grid_graph(opt.rows, opt.cols, !opt.no_periodic,
                             opt.boundary_weight, opt.boundary_col),
            {}};
  if (opt.source == "knn") {
    if (opt.stations.empty())
      throw CLI::ValidationError("knn source needs --stations");
    auto data = sgft::load_station_csv(opt.stations);
    if (data.dropped_rows > 0)
      std::cerr << "warning: dropped " << data.dropped_rows
                << " station rows with missing values\n";
    int repairs = 0;
    auto g = sgft::knn_graph(data.points, opt.k,
                             parse_weight_mode(opt.weight_mode), opt.sigma,
                             &repairs);
    if (repairs > 0)
      std::cerr << "warning: joined " << repairs + 1
                << " k-NN components through nearest pairs\n";
    return {std::move(g), std::move(data)};
  }
  if (opt.edge_file.empty())
    throw CLI::ValidationError("edgelist source needs --edge-file");
  return {sgft::load_edge_list(opt.edge_file), {}};
}

Eigen::VectorXd build_signal(const SignalOptions& opt, const GraphOptions& g,
                             const LoadedGraph& loaded) {
  std::string kind = opt.kind;
  if (kind == "auto") {
    if (g.source == "grid") kind = "two-waveform";
    else if (g.source == "knn") kind = "stations";
    else kind = "file";
  }
  if (kind == "two-waveform")
    return sgft::two_waveform_signal(g.rows, g.cols, opt.freq_left,
                                     opt.freq_right, g.boundary_col);
  if (kind == "stations") {
    if (!loaded.stations)
      throw CLI::ValidationError("--signal stations needs a knn source");
    return loaded.stations->values;
  }
  if (opt.file.empty())
    throw CLI::ValidationError("--signal file needs --signal-file");
  std::ifstream in(opt.file);
  if (!in) throw sgft::MalformedRow("cannot open " + opt.file);
  std::vector<double> vals;
  double v;
  while (in >> v) vals.push_back(v);
  if (vals.empty()) throw sgft::EmptyDataset(opt.file);
  return Eigen::Map<Eigen::VectorXd>(vals.data(),
                                     static_cast<int>(vals.size()));
}

fs::path resolve_cache_path(const std::string& raw) {
  fs::path p(raw);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("SGFT_CACHE_DIR")) return fs::path(dir) / p;
  }
  return p;
}

// Load from the cache when present, otherwise compute and populate it.
sgft::EigenBasis obtain_basis(const sgft::Graph& g, sgft::OperatorKind kind,
                              int k, const RunOptions& run,
                              double* solve_seconds) {
  const fs::path cache =
      run.eig_cache.empty() ? fs::path() : resolve_cache_path(run.eig_cache);
  if (!cache.empty() && fs::exists(cache)) {
    sgft::EigenBasis basis = sgft::load_basis(cache, g.content_hash());
    if (basis.kind != kind)
      throw sgft::CacheMismatch(cache.string() + " holds a " +
                                std::string(sgft::to_string(basis.kind)) +
                                " basis, need " + sgft::to_string(kind));
    if (basis.K < k)
      throw sgft::CacheMismatch(cache.string() + " holds K=" +
                                std::to_string(basis.K) + " < requested " +
                                std::to_string(k));
    if (basis.K > k) {
      basis.eigenvalues.conservativeResize(k);
      basis.eigenvectors.conservativeResize(Eigen::NoChange, k);
      basis.K = k;
    }
    if (solve_seconds) *solve_seconds = 0.0;
    return basis;
  }

  const auto start = Clock::now();
  const Eigen::MatrixXd op = kind == sgft::OperatorKind::normalized_laplacian
                                 ? g.normalized_laplacian()
                                 : g.laplacian();
  sgft::EigenBasis basis = sgft::eigendecompose(op, k, kind);
  if (solve_seconds)
    *solve_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (!cache.empty()) sgft::save_basis(basis, g.content_hash(), cache);
  return basis;
}

int resolve_num_eigs(const RunOptions& run, int n) {
  if (!run.num_eigs_given) return n;
  if (run.num_eigs < 1 || run.num_eigs > n)
    throw CLI::ValidationError("--num-eigs must be in [1, " +
                               std::to_string(n) + "]");
  return run.num_eigs;
}

// unweighted hop distances, for the window summary line
std::vector<int> hop_distances(const sgft::Graph& g, int from) {
  std::vector<std::vector<int>> adj(g.num_vertices());
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> dist(g.num_vertices(), -1);
  std::queue<int> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

std::string cache_key(const sgft::Graph& g, sgft::OperatorKind kind, int k) {
  std::ostringstream ss;
  ss << std::hex << g.content_hash() << std::dec << '/'
     << sgft::to_string(kind) << "/K" << k;
  return ss.str();
}

int cmd_window(const GraphOptions& gopt, const RunOptions& run,
               int seed_vertex, const std::string& out) {
  LoadedGraph loaded = build_graph(gopt);
  const sgft::Graph& g = loaded.graph;
  if (seed_vertex < 0 || seed_vertex >= g.num_vertices())
    throw sgft::InvalidEdge("seed vertex " + std::to_string(seed_vertex) +
                            " out of range for n=" +
                            std::to_string(g.num_vertices()));

  Eigen::VectorXd values;
  if (run.method == "ppr") {
    const int k = resolve_num_eigs(run, g.num_vertices());
    auto basis = obtain_basis(g, sgft::OperatorKind::normalized_laplacian, k,
                              run, nullptr);
    values = sgft::make_window(g, basis, seed_vertex,
                               {.beta = run.beta, .c = 1.0})
                 .values;
  } else {
    auto basis = obtain_basis(g, sgft::OperatorKind::combinatorial_laplacian,
                              g.num_vertices(), run, nullptr);
    values = sgft::translate(basis, seed_vertex,
                             sgft::heat_kernel_window(basis, run.tau));
  }

  if (!out.empty()) {
    sgft::Window w;
    w.values = values;
    w.seed_vertex = seed_vertex;
    sgft::write_window(w, out);
  }

  int argmax = 0;
  values.maxCoeff(&argmax);
  const auto dist = hop_distances(g, seed_vertex);
  double near_mass = 0.0;
  for (int i = 0; i < g.num_vertices(); ++i)
    if (dist[i] >= 0 && dist[i] <= 10) near_mass += std::abs(values[i]);
  std::cout << "method=" << run.method << " seed=" << seed_vertex
            << " argmax=" << argmax << " mass_within_10_hops="
            << near_mass / values.cwiseAbs().sum() << '\n';
  return 0;
}

sgft::SpectrogramMatrix run_spectrogram(const sgft::Graph& g,
                                        const Eigen::VectorXd& f,
                                        const RunOptions& run,
                                        std::string* key,
                                        double* solve_seconds) {
  if (f.size() != g.num_vertices())
    throw sgft::MalformedRow("signal length " + std::to_string(f.size()) +
                             " does not match graph size " +
                             std::to_string(g.num_vertices()));
  if (run.method == "ppr") {
    const int k = resolve_num_eigs(run, g.num_vertices());
    auto basis = obtain_basis(g, sgft::OperatorKind::normalized_laplacian, k,
                              run, solve_seconds);
    if (key) *key = cache_key(g, basis.kind, k);
    return sgft::spectrogram(g, basis, f, {.beta = run.beta, .c = 1.0}, {},
                             run.threads);
  }
  const int k = resolve_num_eigs(run, g.num_vertices());
  auto basis = obtain_basis(g, sgft::OperatorKind::combinatorial_laplacian,
                            g.num_vertices(), run, solve_seconds);
  if (key) *key = cache_key(g, basis.kind, g.num_vertices());
  return sgft::baseline_spectrogram(basis, f, run.tau, k, {}, run.threads);
}

int cmd_spectrogram(const GraphOptions& gopt, const SignalOptions& sopt,
                    const RunOptions& run, const std::string& out_prefix) {
  const auto start = Clock::now();
  LoadedGraph loaded = build_graph(gopt);
  Eigen::VectorXd f = build_signal(sopt, gopt, loaded);

  std::string key;
  double solve_seconds = 0.0;
  sgft::SpectrogramMatrix spec =
      run_spectrogram(loaded.graph, f, run, &key, &solve_seconds);
  auto dominant = sgft::dominant_frequency_map(spec);

  sgft::write_spectrogram_csv(spec, out_prefix + "_spectrogram.csv");
  sgft::write_pgm(spec.values, out_prefix + "_spectrogram.pgm");
  sgft::write_dominant_csv(spec, dominant, out_prefix + "_dominant.csv");

  const double wall =
      std::chrono::duration<double>(Clock::now() - start).count();
  sgft::write_manifest(
      {{"command", "spectrogram"},
       {"graph", gopt.source},
       {"method", run.method},
       {"beta", std::to_string(run.beta)},
       {"tau", std::to_string(run.tau)},
       {"num_eigs", std::to_string(spec.K)},
       {"threads", std::to_string(run.threads)},
       {"eigenbasis_cache_key", key},
       {"eigensolve_seconds", std::to_string(solve_seconds)},
       {"wall_seconds", std::to_string(wall)}},
      out_prefix + "_manifest.txt");
  std::cout << "wrote " << out_prefix << "_{spectrogram.csv,spectrogram.pgm,"
            << "dominant.csv,manifest.txt} eigensolve=" << solve_seconds
            << "s\n";
  return 0;
}

int cmd_signature(const GraphOptions& gopt, const SignalOptions& sopt,
                  const RunOptions& run, int vertex, const std::string& out) {
  LoadedGraph loaded = build_graph(gopt);
  Eigen::VectorXd f = build_signal(sopt, gopt, loaded);
  sgft::SpectrogramMatrix spec =
      run_spectrogram(loaded.graph, f, run, nullptr, nullptr);
  Eigen::VectorXd corr = sgft::signature_correlation(spec, vertex);

  std::vector<std::pair<double, double>> xy;
  if (loaded.stations)
    for (const auto& p : loaded.stations->points) xy.emplace_back(p.x, p.y);
  if (!out.empty()) sgft::write_correlation_csv(spec.vertices, corr, xy, out);
  std::cout << "vertex=" << vertex << " self_correlation=" << corr[vertex]
            << '\n';
  return 0;
}

int cmd_eigcache(const GraphOptions& gopt, const RunOptions& run,
                 const std::string& op, const std::string& out) {
  LoadedGraph loaded = build_graph(gopt);
  const sgft::Graph& g = loaded.graph;
  const int k = resolve_num_eigs(run, g.num_vertices());
  const auto kind = op == "combinatorial"
                        ? sgft::OperatorKind::combinatorial_laplacian
                        : sgft::OperatorKind::normalized_laplacian;
  const auto start = Clock::now();
  const Eigen::MatrixXd m = kind == sgft::OperatorKind::normalized_laplacian
                                ? g.normalized_laplacian()
                                : g.laplacian();
  sgft::EigenBasis basis = sgft::eigendecompose(m, k, kind);
  sgft::save_basis(basis, g.content_hash(), resolve_cache_path(out));
  std::cout << "cached " << cache_key(g, kind, k) << " in "
            << std::chrono::duration<double>(Clock::now() - start).count()
            << "s\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"short-graph Fourier transform experiments"};
  app.require_subcommand(1);

  GraphOptions gopt;
  SignalOptions sopt;
  RunOptions run;
  int seed_vertex = -1;
  int vertex = -1;
  std::string out, out_prefix = "sgft_run", op = "normalized";

  auto* window = app.add_subcommand("window", "localized window at a seed");
  add_graph_options(*window, gopt);
  add_run_options(*window, run, true);
  window->add_option("--seed-vertex", seed_vertex)->required();
  window->add_option("--out", out, "two-column output file");

  auto* spect = app.add_subcommand("spectrogram", "full |SGFT|^2 matrix");
  add_graph_options(*spect, gopt);
  add_run_options(*spect, run, true);
  spect->add_option("--signal", sopt.kind,
                    "two-waveform|stations|file (default by source)");
  spect->add_option("--signal-file", sopt.file);
  spect->add_option("--freq-left", sopt.freq_left);
  spect->add_option("--freq-right", sopt.freq_right);
  spect->add_option("--out-prefix", out_prefix);

  auto* sig = app.add_subcommand("signature",
                                 "spectral-signature correlation map");
  add_graph_options(*sig, gopt);
  add_run_options(*sig, run, true);
  sig->add_option("--signal", sopt.kind);
  sig->add_option("--signal-file", sopt.file);
  sig->add_option("--freq-left", sopt.freq_left);
  sig->add_option("--freq-right", sopt.freq_right);
  sig->add_option("--vertex", vertex)->required();
  sig->add_option("--out", out);

  auto* cache = app.add_subcommand("eigcache", "precompute an eigenbasis");
  add_graph_options(*cache, gopt);
  add_run_options(*cache, run, false);
  cache->add_option("--operator", op, "normalized|combinatorial")
      ->check(CLI::IsMember({"normalized", "combinatorial"}));
  cache->add_option("--out", out)->required();

  try {
    app.parse(argc, argv);
    if (window->parsed()) return cmd_window(gopt, run, seed_vertex, out);
    if (spect->parsed()) return cmd_spectrogram(gopt, sopt, run, out_prefix);
    if (sig->parsed()) return cmd_signature(gopt, sopt, run, vertex, out);
    if (cache->parsed()) return cmd_eigcache(gopt, run, op, out);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const sgft::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.category() == sgft::Error::Category::data ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
