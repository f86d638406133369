#pragma once

// Replicable simulation studies: Type I error and power sweeps for each
// model family, latent dimension recovery, and convergence of the scaled
// extreme-eigenvalue statistic to its reference law.  Every study is a pure
// function of an ExperimentConfig; results are CSV text with the config
// hash and seed in a comment header so identical configs produce identical
// files.

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "netgof/ergm.hpp"
#include "netgof/gof.hpp"
#include "netgof/graph.hpp"
#include "netgof/models.hpp"
#include "netgof/rng.hpp"
#include "netgof/selection.hpp"
#include "netgof/spectra.hpp"
#include "netgof/stats.hpp"
#include "netgof/tw1.hpp"

namespace netgof {

inline const std::vector<std::string>& experiment_ids() {
  static const std::vector<std::string> ids = {
      "fig5-expit",      "fig5-exp", "fig5-nonpar",   "fig4-dims",
      "fig7-ergm-power", "fig6-ard", "fig8-directed", "tw-convergence"};
  return ids;
}

struct ExperimentConfig {
  std::string id;
  std::vector<int> n_values;  // empty -> per-study default
  int replicates = 0;         // 0 -> per-study default
  int B = 200;
  double alpha = 0.05;
  std::uint64_t seed = 1;

  void validate() const {
    const auto& ids = experiment_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
      throw std::invalid_argument("unknown experiment id: " + id);
    if (replicates < 0) throw std::invalid_argument("replicate count must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
    if (B < 50) throw std::invalid_argument("B must be >= 50");
    for (int n : n_values)
      if (n < 3) throw std::invalid_argument("n values must be >= 3");
  }

  static ExperimentConfig from_json(const nlohmann::ordered_json& j) {
    ExperimentConfig c;
    c.id = j.at("id").get<std::string>();
    if (j.contains("n_values")) c.n_values = j.at("n_values").get<std::vector<int>>();
    if (j.contains("replicates")) c.replicates = j.at("replicates").get<int>();
    if (j.contains("B")) c.B = j.at("B").get<int>();
    if (j.contains("alpha")) c.alpha = j.at("alpha").get<double>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    return c;
  }

  nlohmann::ordered_json to_json() const {
    return nlohmann::ordered_json{{"id", id},   {"n_values", n_values}, {"replicates", replicates},
                                  {"B", B},     {"alpha", alpha},       {"seed", seed}};
  }
};

namespace detail {

inline std::string fmt_double(double x, const char* spec = "%.6f") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, x);
  return buf;
}

inline std::string fmt_rate(long long hits, long long total) {
  return fmt_double(static_cast<double>(hits) / static_cast<double>(total));
}

inline std::string fmt_se(long long hits, long long total) {
  const double r = static_cast<double>(hits) / static_cast<double>(total);
  return fmt_double(std::sqrt(r * (1.0 - r) / static_cast<double>(total)));
}

// Canonical string form used for the config hash (resolved values only).
inline std::string config_canonical(const ExperimentConfig& c) {
  std::string s = c.id + "|n=";
  for (std::size_t i = 0; i < c.n_values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c.n_values[i]);
  }
  s += "|replicates=" + std::to_string(c.replicates);
  s += "|B=" + std::to_string(c.B);
  s += "|alpha=" + fmt_double(c.alpha, "%.17g");
  s += "|seed=" + std::to_string(c.seed);
  return s;
}

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

struct CsvBuilder {
  std::string text;

  void comment(const std::string& line) { text += "# " + line + "\n"; }
  void header(const std::vector<std::string>& cols) { row(cols); }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text += ',';
      text += cells[i];
    }
    text += '\n';
  }
};

// Run fn(0..count-1) across a worker pool; results land in replicate-index
// order so the output never depends on scheduling.
template <class R, class F>
std::vector<R> parallel_map(int count, F&& fn) {
  std::vector<R> out(static_cast<std::size_t>(count));
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(count > 0 ? count : 1));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(i);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&]() {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        out[static_cast<std::size_t>(i)] = fn(i);
      }
    });
  for (auto& t : pool) t.join();
  return out;
}

// --- study parameter regimes (fixed alongside the study definitions) ---

// Node-effect models: effects drawn uniformly from [-2, 0].
constexpr double kBetaEffectLo = -2.0;
constexpr double kBetaEffectHi = 0.0;
// Unstructured alternative: edge probabilities uniform on [0, 0.1].
constexpr double kNonparProbHi = 0.1;
// Latent space study: intercepts uniform on [-0.02, -0.01], positions N(0, I).
constexpr double kDimAlphaLo = -0.02;
constexpr double kDimAlphaHi = -0.01;
constexpr int kDimParamSets = 25;
constexpr int kDimMaxD = 4;
// Two-star study: baseline edge coefficient targets density 0.25 at the
// null point; the triangle coefficient is zero in the generating model.
inline double ergm_theta1_base() { return std::log(0.25 / 0.75); }
constexpr int kErgmProbReps = 500;  // simulations used to estimate P-hat
inline const std::vector<double>& ergm_theta3_grid() {
  static const std::vector<double> grid = {-0.12, -0.06, -0.03, 0.0, 0.03, 0.06, 0.12};
  return grid;
}
// ARD study: tie probability under the null; planted two-community
// alternative with within/between probabilities of matching mean density.
constexpr double kArdErP = 0.25;
constexpr double kArdSbmIn = 0.35;
constexpr double kArdSbmOut = 0.15;
// Directed study: null density, and a planted two-community directed block
// alternative with the same mean density.
constexpr double kDirErP = 0.2;
inline Eigen::MatrixXd directed_block_matrix() {
  Eigen::MatrixXd b(2, 2);
  b << 0.2, 0.05, 0.35, 0.2;
  return b;
}
// Statistic-convergence study: deterministic heterogeneous edge
// probabilities p_ij = 0.15 + 0.7 * u_i * v_j over the unit square.
inline double convergence_prob(int i, int j, int m, int n) {
  const double u = (static_cast<double>(i) + 0.5) / static_cast<double>(m);
  const double v = (static_cast<double>(j) + 0.5) / static_cast<double>(n);
  return 0.15 + 0.7 * u * v;
}

inline int default_replicates(const std::string& id) {
  if (id == "fig4-dims") return 20;  // networks per parameter set
  if (id == "tw-convergence") return 400;
  return 100;
}

inline std::vector<int> default_n_values(const std::string& id) {
  if (id == "fig4-dims") return {100, 200};
  if (id == "fig7-ergm-power") return {20, 30};
  if (id == "fig6-ard") return {30, 60, 90, 120};
  if (id == "fig8-directed") return {25, 50, 100};
  if (id == "tw-convergence") return {1000};
  return {50, 100, 200};  // node-effect model studies
}

// Retry budget when a replicate's fit has no MLE (degenerate degrees or
// separated pseudo-likelihood): redraw from a derived stream, keep count.
constexpr int kMaxFitAttempts = 100;

struct RepOutcome {
  bool reject = false;
  int resamples = 0;
};

// --- node-effect model studies (Type I, link misspecification, unstructured P) ---

enum class BetaTruth { Expit, Exp, Nonpar };

inline RepOutcome beta_family_replicate(BetaTruth truth, int n, int B, double alpha,
                                        std::uint64_t seed_rep, const Tw1Table& table) {
  for (int attempt = 0; attempt < kMaxFitAttempts; ++attempt) {
    const std::uint64_t sa = derive_seed(seed_rep, static_cast<std::uint64_t>(attempt));
    Rng rng(derive_seed(sa, 0));
    ProbMatrix p_true(Eigen::MatrixXd(), false);
    if (truth == BetaTruth::Nonpar) {
      Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) p(i, j) = p(j, i) = rng.uniform(0.0, kNonparProbHi);
      p_true = ProbMatrix(std::move(p), false);
    } else {
      Eigen::VectorXd beta(n);
      for (int i = 0; i < n; ++i) beta(i) = rng.uniform(kBetaEffectLo, kBetaEffectHi);
      p_true = prob_matrix(
          BetaParams{beta, truth == BetaTruth::Exp ? BetaLink::Exp : BetaLink::Expit});
    }
    const Graph g = sample_graph(p_true, derive_seed(sa, 1));
    BetaParams fit;
    try {
      fit = fit_beta_mle(g);
    } catch (const MleNonexistent&) {
      continue;  // isolated or saturated node: redraw this replicate
    }
    const ProbMatrix p_hat = prob_matrix(fit);
    const TestReport rep = test_undirected_bootstrap(g, bernoulli_sampler(p_hat), p_hat, B,
                                                     alpha, derive_seed(sa, 2), table);
    return {rep.reject, attempt};
  }
  // Every redraw lacked an MLE; the null model cannot even be fit.
  return {true, kMaxFitAttempts};
}

inline void run_beta_family(const ExperimentConfig& cfg, BetaTruth truth, CsvBuilder& csv,
                            const Tw1Table& table) {
  csv.header({"n", "replicates", "rejections", "rejection_rate", "se", "resamples"});
  for (int n : cfg.n_values) {
    const std::uint64_t seed_n = derive_seed(cfg.seed, static_cast<std::uint64_t>(n));
    const auto outcomes = parallel_map<RepOutcome>(cfg.replicates, [&](int r) {
      return beta_family_replicate(truth, n, cfg.B, cfg.alpha,
                                   derive_seed(seed_n, static_cast<std::uint64_t>(r)), table);
    });
    long long rejects = 0, resamples = 0;
    for (const auto& o : outcomes) {
      rejects += o.reject ? 1 : 0;
      resamples += o.resamples;
    }
    csv.row({std::to_string(n), std::to_string(cfg.replicates), std::to_string(rejects),
             fmt_rate(rejects, cfg.replicates), fmt_se(rejects, cfg.replicates),
             std::to_string(resamples)});
  }
}

// --- latent dimension recovery ---

inline void run_dims(const ExperimentConfig& cfg, CsvBuilder& csv, const Tw1Table& table) {
  csv.header({"n", "d_true", "param_sets", "networks_per_set", "correct", "total", "rate", "se"});
  const int networks = cfg.replicates;
  for (int n : cfg.n_values) {
    for (int d_true = 1; d_true <= 2; ++d_true) {
      const std::uint64_t seed_nd =
          derive_seed(derive_seed(cfg.seed, static_cast<std::uint64_t>(n)),
                      static_cast<std::uint64_t>(d_true));
      // One probability matrix per parameter set, shared by its networks.
      std::vector<ProbMatrix> truths;
      truths.reserve(kDimParamSets);
      for (int s = 0; s < kDimParamSets; ++s) {
        Rng rng(derive_seed(derive_seed(seed_nd, static_cast<std::uint64_t>(s)), 0));
        LatentSpaceParams params;
        params.alpha.resize(n);
        for (int i = 0; i < n; ++i) params.alpha(i) = rng.uniform(kDimAlphaLo, kDimAlphaHi);
        params.z.resize(n, d_true);
        for (int i = 0; i < n; ++i)
          for (int d = 0; d < d_true; ++d) params.z(i, d) = rng.normal();
        truths.push_back(prob_matrix(params));
      }
      const int total = kDimParamSets * networks;
      const auto correct_flags = parallel_map<int>(total, [&](int idx) {
        const int s = idx / networks;
        const int t = idx % networks;
        const std::uint64_t seed_net =
            derive_seed(derive_seed(seed_nd, static_cast<std::uint64_t>(s)),
                        static_cast<std::uint64_t>(1 + t));
        const Graph g = sample_graph(truths[static_cast<std::size_t>(s)], derive_seed(seed_net, 0));
        SelectDimensionOptions opts;
        opts.B = cfg.B;
        opts.alpha = cfg.alpha;
        const DimensionScan scan =
            select_dimension(g, opts, kDimMaxD, derive_seed(seed_net, 1), table);
        return (!scan.exhausted && scan.d_fit == d_true) ? 1 : 0;
      });
      long long correct = 0;
      for (int c : correct_flags) correct += c;
      csv.row({std::to_string(n), std::to_string(d_true), std::to_string(kDimParamSets),
               std::to_string(networks), std::to_string(correct), std::to_string(total),
               fmt_rate(correct, total), fmt_se(correct, total)});
    }
  }
}

// --- two-star coefficient power curve ---

// Estimated edge-frequency matrices can contain exact 0/1 cells at finite
// simulation counts; pull them inside the open interval before residuals.
inline ProbMatrix clamp_probabilities(ProbMatrix p, double eps) {
  p.p = p.p.cwiseMax(eps).cwiseMin(1.0 - eps);
  p.p.diagonal().setZero();
  return p;
}

inline RepOutcome ergm_power_replicate(int n, double theta3, int B, double alpha,
                                       std::uint64_t seed_rep, const Tw1Table& table) {
  const ErgmSpec truth_spec({ErgmTerm::Edges, ErgmTerm::Triangles, ErgmTerm::KStar2});
  const ErgmSpec null_spec({ErgmTerm::Edges, ErgmTerm::Triangles});
  Eigen::VectorXd theta(3);
  theta << ergm_theta1_base(), 0.0, theta3;
  for (int attempt = 0; attempt < kMaxFitAttempts; ++attempt) {
    const std::uint64_t sa = derive_seed(seed_rep, static_cast<std::uint64_t>(attempt));
    const Graph g = sample_ergm(ErgmParams{truth_spec, theta}, n, derive_seed(sa, 1));
    ErgmParams fit;
    try {
      fit = fit_ergm_mple(g, null_spec);
    } catch (const NonConvergence&) {
      continue;  // separated pseudo-likelihood: redraw this replicate
    }
    const ProbMatrix p_hat = clamp_probabilities(
        estimate_p_ergm(fit, n, kErgmProbReps, derive_seed(sa, 2)),
        0.5 / static_cast<double>(kErgmProbReps));
    const TestReport rep = test_undirected_bootstrap(g, bernoulli_sampler(p_hat), p_hat, B,
                                                     alpha, derive_seed(sa, 3), table);
    return {rep.reject, attempt};
  }
  return {true, kMaxFitAttempts};
}

inline void run_ergm_power(const ExperimentConfig& cfg, CsvBuilder& csv, const Tw1Table& table) {
  csv.header({"n", "theta3", "replicates", "rejections", "rejection_rate", "se", "resamples"});
  for (int n : cfg.n_values) {
    const std::uint64_t seed_n = derive_seed(cfg.seed, static_cast<std::uint64_t>(n));
    const auto& grid = ergm_theta3_grid();
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double theta3 = grid[k];
      const std::uint64_t seed_pt = derive_seed(seed_n, static_cast<std::uint64_t>(k));
      const auto outcomes = parallel_map<RepOutcome>(cfg.replicates, [&](int r) {
        return ergm_power_replicate(n, theta3, cfg.B, cfg.alpha,
                                    derive_seed(seed_pt, static_cast<std::uint64_t>(r)), table);
      });
      long long rejects = 0, resamples = 0;
      for (const auto& o : outcomes) {
        rejects += o.reject ? 1 : 0;
        resamples += o.resamples;
      }
      csv.row({std::to_string(n), fmt_double(theta3, "%.4f"), std::to_string(cfg.replicates),
               std::to_string(rejects), fmt_rate(rejects, cfg.replicates),
               fmt_se(rejects, cfg.replicates), std::to_string(resamples)});
    }
  }
}

// --- degree-heterogeneity test from aggregated relational data ---

inline void run_ard(const ExperimentConfig& cfg, CsvBuilder& csv, const Tw1Table& table) {
  csv.header({"n", "m", "K", "truth", "replicates", "rejections", "rejection_rate", "se"});
  for (int n : cfg.n_values) {
    if (n % 30 != 0)
      throw std::invalid_argument("fig6-ard: n must be a multiple of 30 (m = n/3, K = n/10)");
    const int m = n / 3;
    const int K = n / 10;
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(K));
    const int group_size = n / K;
    for (int v = 0; v < n; ++v)
      groups[static_cast<std::size_t>(std::min(v / group_size, K - 1))].push_back(v);
    std::vector<int> respondents(static_cast<std::size_t>(m));
    std::iota(respondents.begin(), respondents.end(), 0);

    for (int alt = 0; alt <= 1; ++alt) {
      ProbMatrix p_true(Eigen::MatrixXd(), false);
      if (alt == 0) {
        p_true = prob_matrix(ErParams{kArdErP, false}, n);
      } else {
        std::vector<int> labels(static_cast<std::size_t>(n), 0);
        for (int v = n / 2; v < n; ++v) labels[static_cast<std::size_t>(v)] = 1;
        Eigen::MatrixXd blocks(2, 2);
        blocks << kArdSbmIn, kArdSbmOut, kArdSbmOut, kArdSbmIn;
        p_true = prob_matrix(SbmParams{blocks, NodeLabeling(labels), false});
      }
      const std::uint64_t seed_pt =
          derive_seed(derive_seed(cfg.seed, static_cast<std::uint64_t>(n)),
                      static_cast<std::uint64_t>(alt));
      const auto rejects_flags = parallel_map<int>(cfg.replicates, [&](int r) {
        const std::uint64_t sr = derive_seed(seed_pt, static_cast<std::uint64_t>(r));
        const Graph g = sample_graph(p_true, derive_seed(sr, 0));
        const ArdMatrix y = extract_ard(g, groups, respondents);
        return test_ard_er(y, cfg.alpha, table).reject ? 1 : 0;
      });
      long long rejects = 0;
      for (int f : rejects_flags) rejects += f;
      csv.row({std::to_string(n), std::to_string(m), std::to_string(K),
               alt == 0 ? "er" : "sbm", std::to_string(cfg.replicates), std::to_string(rejects),
               fmt_rate(rejects, cfg.replicates), fmt_se(rejects, cfg.replicates)});
    }
  }
}

// --- directed tests: bootstrap vs asymptotic vs exponential reference ---

inline void run_directed(const ExperimentConfig& cfg, CsvBuilder& csv, const Tw1Table& table) {
  csv.header({"n", "truth", "method", "replicates", "rejections", "rejection_rate", "se"});
  for (int n : cfg.n_values) {
    for (int alt = 0; alt <= 1; ++alt) {
      ProbMatrix p_true(Eigen::MatrixXd(), true);
      if (alt == 0) {
        p_true = prob_matrix(ErParams{kDirErP, true}, n);
      } else {
        std::vector<int> labels(static_cast<std::size_t>(n), 0);
        for (int v = n / 2; v < n; ++v) labels[static_cast<std::size_t>(v)] = 1;
        p_true = prob_matrix(SbmParams{directed_block_matrix(), NodeLabeling(labels), true});
      }
      const std::uint64_t seed_pt =
          derive_seed(derive_seed(cfg.seed, static_cast<std::uint64_t>(n)),
                      static_cast<std::uint64_t>(alt));
      struct Trio {
        int boot = 0, tw = 0, explaw = 0;
      };
      const auto outcomes = parallel_map<Trio>(cfg.replicates, [&](int r) {
        const std::uint64_t sr = derive_seed(seed_pt, static_cast<std::uint64_t>(r));
        const Graph g = sample_graph(p_true, derive_seed(sr, 0));
        const ProbMatrix p_hat = prob_matrix(fit_er(g), n);
        Trio t;
        t.boot = test_directed_bootstrap(g, bernoulli_sampler(p_hat), p_hat, cfg.B, cfg.alpha,
                                         derive_seed(sr, 1), table)
                     .reject
                     ? 1
                     : 0;
        t.tw = test_directed_tw(g, p_hat, cfg.alpha, table).reject ? 1 : 0;
        t.explaw = test_directed_explaw(g, p_hat, cfg.alpha).reject ? 1 : 0;
        return t;
      });
      long long boot = 0, tw = 0, explaw = 0;
      for (const auto& o : outcomes) {
        boot += o.boot;
        tw += o.tw;
        explaw += o.explaw;
      }
      const char* truth = alt == 0 ? "der" : "dsbm";
      const auto emit = [&](const char* method, long long hits) {
        csv.row({std::to_string(n), truth, method, std::to_string(cfg.replicates),
                 std::to_string(hits), fmt_rate(hits, cfg.replicates),
                 fmt_se(hits, cfg.replicates)});
      };
      emit("bootstrap", boot);
      emit("tw", tw);
      emit("explaw", explaw);
    }
  }
}

// --- convergence of the scaled extreme statistic to the reference law ---

// Largest singular value via the Gram operator x -> M^T (M x) on the
// smaller side, so big rectangular replicates avoid a full decomposition.
inline double largest_singular_value(const Eigen::MatrixXd& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  const int dim = std::min(rows, cols);
  if (dim <= 64) return extreme_singular_values_of(m).second;
  std::pair<double, double> out;
  bool ok;
  if (cols <= rows) {
    Eigen::VectorXd tmp(rows);
    ok = detail::lanczos_extreme_pair(
        [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
          tmp.noalias() = m * x;
          y.noalias() = m.transpose() * tmp;
        },
        cols, 1e-10, 400, out);
  } else {
    Eigen::VectorXd tmp(cols);
    ok = detail::lanczos_extreme_pair(
        [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
          tmp.noalias() = m.transpose() * x;
          y.noalias() = m * tmp;
        },
        rows, 1e-10, 400, out);
  }
  if (!ok) return extreme_singular_values_of(m).second;
  return std::sqrt(std::max(0.0, out.second));
}

inline void run_tw_convergence(const ExperimentConfig& cfg, CsvBuilder& csv,
                               const Tw1Table& table) {
  constexpr double kHistLo = -5.0;
  constexpr double kHistHi = 4.0;
  constexpr int kHistBins = 45;
  std::vector<std::string> ks_lines;
  CsvBuilder body;
  body.header({"n", "bin_lo", "bin_hi", "count", "empirical_density", "reference_density"});
  for (int n : cfg.n_values) {
    const int m = n;  // square ensemble
    Eigen::MatrixXd p(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) p(i, j) = convergence_prob(i, j, m, n);
    const std::uint64_t seed_n = derive_seed(cfg.seed, static_cast<std::uint64_t>(n));
    auto stats = parallel_map<double>(cfg.replicates, [&](int r) {
      Rng rng(derive_seed(seed_n, static_cast<std::uint64_t>(r)));
      Eigen::MatrixXd a(m, n);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
          const double pij = p(i, j);
          const double y = rng.bernoulli(pij) ? 1.0 : 0.0;
          a(i, j) = (y - pij) / std::sqrt(pij * (1.0 - pij));
        }
      return singular_edge_statistic(largest_singular_value(a), m, n);
    });
    const double ks = ks_distance(stats, [&](double x) { return table.cdf(x); });
    ks_lines.push_back("ks n=" + std::to_string(n) + " distance=" + fmt_double(ks));

    std::vector<long long> counts(kHistBins, 0);
    const double width = (kHistHi - kHistLo) / kHistBins;
    for (double t : stats) {
      int b = static_cast<int>(std::floor((t - kHistLo) / width));
      b = std::max(0, std::min(kHistBins - 1, b));
      ++counts[static_cast<std::size_t>(b)];
    }
    for (int b = 0; b < kHistBins; ++b) {
      const double lo = kHistLo + b * width;
      const double hi = lo + width;
      const double dens =
          static_cast<double>(counts[static_cast<std::size_t>(b)]) / (cfg.replicates * width);
      const double ref = (table.cdf(hi) - table.cdf(lo)) / width;
      body.row({std::to_string(n), fmt_double(lo, "%.2f"), fmt_double(hi, "%.2f"),
                std::to_string(counts[static_cast<std::size_t>(b)]), fmt_double(dens),
                fmt_double(ref)});
    }
  }
  for (const auto& line : ks_lines) csv.comment(line);
  csv.text += body.text;
}

}  // namespace detail

// Fill unset fields with the study's defaults; hashing and runners operate
// on the resolved form so explicit defaults and implicit ones coincide.
inline ExperimentConfig resolve_config(ExperimentConfig cfg) {
  cfg.validate();
  if (cfg.n_values.empty()) cfg.n_values = detail::default_n_values(cfg.id);
  if (cfg.replicates == 0) cfg.replicates = detail::default_replicates(cfg.id);
  if (cfg.replicates < 1) throw std::invalid_argument("replicate count must be >= 1");
  return cfg;
}

inline std::uint64_t config_hash(const ExperimentConfig& cfg) {
  return detail::fnv1a64(detail::config_canonical(resolve_config(cfg)));
}

// Run the named study and return the complete CSV text.
inline std::string run_experiment(const ExperimentConfig& raw,
                                  const Tw1Table& table = Tw1Table::embedded()) {
  const ExperimentConfig cfg = resolve_config(raw);
  detail::CsvBuilder csv;
  char hash_hex[32];
  std::snprintf(hash_hex, sizeof(hash_hex), "%016llx",
                static_cast<unsigned long long>(detail::fnv1a64(detail::config_canonical(cfg))));
  csv.comment("experiment=" + cfg.id);
  csv.comment("config_hash=" + std::string(hash_hex));
  csv.comment("seed=" + std::to_string(cfg.seed));
  csv.comment("replicates=" + std::to_string(cfg.replicates) + " B=" + std::to_string(cfg.B) +
              " alpha=" + detail::fmt_double(cfg.alpha, "%.4g"));

  if (cfg.id == "fig5-expit")
    detail::run_beta_family(cfg, detail::BetaTruth::Expit, csv, table);
  else if (cfg.id == "fig5-exp")
    detail::run_beta_family(cfg, detail::BetaTruth::Exp, csv, table);
  else if (cfg.id == "fig5-nonpar")
    detail::run_beta_family(cfg, detail::BetaTruth::Nonpar, csv, table);
  else if (cfg.id == "fig4-dims")
    detail::run_dims(cfg, csv, table);
  else if (cfg.id == "fig7-ergm-power")
    detail::run_ergm_power(cfg, csv, table);
  else if (cfg.id == "fig6-ard")
    detail::run_ard(cfg, csv, table);
  else if (cfg.id == "fig8-directed")
    detail::run_directed(cfg, csv, table);
  else if (cfg.id == "tw-convergence")
    detail::run_tw_convergence(cfg, csv, table);
  else
    throw std::invalid_argument("unknown experiment id: " + cfg.id);
  return csv.text;
}

}  // namespace netgof
