#pragma once

// Goodness-of-fit tests for fitted network models.
//
// A well-specified null makes the standardized residual behave like a pure
// noise matrix, so its spectral edge must follow the corresponding random
// matrix law: Tracy-Widom TW1 for extreme eigenvalues (undirected) and for
// the rescaled largest singular value (directed / ARD), and the exponential
// law for the smallest singular value of a square standardized residual.
// Fitting noise shifts those edges at finite n; the bootstrap variants
// recenter and rescale the observed statistic against replicates drawn from
// the fitted model before comparing with the TW1 quantiles.

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "netgof/errors.hpp"
#include "netgof/graph.hpp"
#include "netgof/models.hpp"
#include "netgof/spectra.hpp"
#include "netgof/stats.hpp"
#include "netgof/tw1.hpp"

namespace netgof {

// Draws one model replicate per call; the argument is a derived seed.
using GraphSampler = std::function<Graph(std::uint64_t)>;

struct BootstrapMeta {
  int B = 0;
  // Named centering moments: (mu_max, s_max, mu_min, s_min) for undirected,
  // (mu, s) for directed.
  std::vector<std::pair<std::string, double>> moments;
};

struct TestReport {
  std::string method;     // "asymptotic" | "bootstrap"
  std::string reference;  // "tw1" | "explaw"
  double alpha = 0.0;
  bool reject = false;
  std::vector<std::pair<std::string, double>> statistics;
  std::optional<BootstrapMeta> bootstrap;  // present iff method == "bootstrap"
  std::uint64_t seed = 0;                  // 0 for deterministic methods

  double stat(const std::string& name) const {
    for (const auto& [k, v] : statistics)
      if (k == name) return v;
    throw std::out_of_range("TestReport: no statistic named '" + name + "'");
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["method"] = method;
    j["reference"] = reference;
    j["alpha"] = alpha;
    nlohmann::ordered_json stats;
    for (const auto& [k, v] : statistics) stats[k] = v;
    j["statistics"] = std::move(stats);
    j["reject"] = reject;
    if (bootstrap) {
      nlohmann::ordered_json b;
      b["B"] = bootstrap->B;
      for (const auto& [k, v] : bootstrap->moments) b[k] = v;
      j["bootstrap"] = std::move(b);
    }
    j["seed"] = seed;
    return j;
  }
};

namespace detail {

// Two-sided band check with ties resolved toward non-rejection.
inline bool outside_band(double t, double lo, double hi) { return t > hi || t < lo; }

inline double n_two_thirds(int n) {
  return std::pow(static_cast<double>(n), 2.0 / 3.0);
}

}  // namespace detail

// Centering constants for the largest singular value of a variance-one
// rectangular ensemble with dimensions (rows, cols):
//   mu = (sqrt(L-1) + sqrt(S))^2,  sigma = sqrt(mu) (1/sqrt(L-1) + 1/sqrt(S))^{1/3},
// where S/L are the smaller/larger dimension (roles swapped as needed so
// the first dimension is the smaller; the L-1 vs. S asymmetry is exact).
inline std::pair<double, double> singular_edge_centering(int rows, int cols) {
  if (rows < 2 || cols < 2)
    throw std::invalid_argument("singular_edge_centering: need both dimensions >= 2");
  const double s = static_cast<double>(std::min(rows, cols));
  const double l = static_cast<double>(std::max(rows, cols));
  const double mu = std::pow(std::sqrt(l - 1.0) + std::sqrt(s), 2.0);
  const double sigma = std::sqrt(mu) * std::cbrt(1.0 / std::sqrt(l - 1.0) + 1.0 / std::sqrt(s));
  return {mu, sigma};
}

// Standardized largest-singular-value statistic: (s_max^2 - mu) / sigma.
inline double singular_edge_statistic(double s_max, int rows, int cols) {
  const auto [mu, sigma] = singular_edge_centering(rows, cols);
  return (s_max * s_max - mu) / sigma;
}

// --- undirected tests ---

// Asymptotic two-sided test of the extreme residual eigenvalues:
// t1 = n^{2/3}(lambda_max - 2), t2 = n^{2/3}(-lambda_min - 2), and the test
// statistic is t = max{t1, t2}, rejected when it leaves the band
// (TW1(alpha/2), TW1(1-alpha/2)) (strict inequalities: boundary equality
// keeps the null).  For an independent TW1 pair this band has probability
// exactly 1 - alpha: P(max <= hi) - P(max <= lo) = F(hi)^2 - F(lo)^2
// = (1-alpha/2)^2 - (alpha/2)^2 = 1 - alpha.  It is also the B -> infinity
// limit of the bootstrap rule below, which standardizes the same max.
inline TestReport test_undirected_asymptotic(const Graph& g, const ProbMatrix& p_hat,
                                             double alpha,
                                             const Tw1Table& table = Tw1Table::embedded()) {
  const ResidualMatrix r = residual_undirected(g, p_hat);
  const auto [lmin, lmax] = extreme_eigenvalues(r);
  const double scale = detail::n_two_thirds(g.n());
  const double t1 = scale * (lmax - 2.0);
  const double t2 = scale * (-lmin - 2.0);
  const double t = std::max(t1, t2);
  TestReport rep;
  rep.method = "asymptotic";
  rep.reference = "tw1";
  rep.alpha = alpha;
  rep.statistics = {
      {"t", t}, {"t1", t1}, {"t2", t2}, {"lambda_max", lmax}, {"lambda_min", lmin}};
  rep.reject = detail::outside_band(t, table.quantile(alpha / 2.0),
                                    table.quantile(1.0 - alpha / 2.0));
  return rep;
}

// Bootstrap-corrected undirected test: draw B replicates from the fitted
// model, form residuals against the SAME p_hat (no refitting), and
// standardize the observed extremes by the replicate moments:
//   t = mu_TW + s_TW * max( (lmax - mu_max)/s_max, -(lmin - mu_min)/s_min ),
// rejecting when t leaves (TW1(alpha/2), TW1(1-alpha/2)).
inline TestReport test_undirected_bootstrap(const Graph& g, const GraphSampler& sampler,
                                            const ProbMatrix& p_hat, int B, double alpha,
                                            std::uint64_t seed,
                                            const Tw1Table& table = Tw1Table::embedded()) {
  if (B < 50) throw std::invalid_argument("test_undirected_bootstrap: need B >= 50");
  const ResidualMatrix r = residual_undirected(g, p_hat);
  const auto [lmin, lmax] = extreme_eigenvalues(r);

  std::vector<double> bmax(static_cast<std::size_t>(B)), bmin(static_cast<std::size_t>(B));
  for (int b = 0; b < B; ++b) {
    const Graph gb = sampler(derive_seed(seed, static_cast<std::uint64_t>(b)));
    const ResidualMatrix rb = residual_undirected(gb, p_hat);
    const auto [blo, bhi] = extreme_eigenvalues(rb);
    bmin[static_cast<std::size_t>(b)] = blo;
    bmax[static_cast<std::size_t>(b)] = bhi;
  }
  const double mu_max = mean(bmax), s_max = stddev(bmax);
  const double mu_min = mean(bmin), s_min = stddev(bmin);
  if (!(s_max > 1e-12) || !(s_min > 1e-12))
    throw DegenerateFit("test_undirected_bootstrap: bootstrap spread is zero");

  const auto [mu_tw, s_tw] = tw1_moments(table);
  const double t =
      mu_tw + s_tw * std::max((lmax - mu_max) / s_max, -(lmin - mu_min) / s_min);
  TestReport rep;
  rep.method = "bootstrap";
  rep.reference = "tw1";
  rep.alpha = alpha;
  rep.seed = seed;
  rep.statistics = {{"t", t}, {"lambda_max", lmax}, {"lambda_min", lmin}};
  rep.bootstrap = BootstrapMeta{
      B, {{"mu_max", mu_max}, {"s_max", s_max}, {"mu_min", mu_min}, {"s_min", s_min}}};
  rep.reject = detail::outside_band(t, table.quantile(alpha / 2.0),
                                    table.quantile(1.0 - alpha / 2.0));
  return rep;
}

// --- directed tests ---

// Bootstrap-corrected directed test on the largest singular value:
// t = mu_TW + s_TW * (s_max - mu)/s against the two-sided TW1 band.
inline TestReport test_directed_bootstrap(const Graph& g, const GraphSampler& sampler,
                                          const ProbMatrix& p_hat, int B, double alpha,
                                          std::uint64_t seed,
                                          const Tw1Table& table = Tw1Table::embedded()) {
  if (B < 50) throw std::invalid_argument("test_directed_bootstrap: need B >= 50");
  const ResidualMatrix r = residual_directed(g, p_hat);
  const double smax = extreme_singular_values(r).second;

  std::vector<double> bs(static_cast<std::size_t>(B));
  for (int b = 0; b < B; ++b) {
    const Graph gb = sampler(derive_seed(seed, static_cast<std::uint64_t>(b)));
    const ResidualMatrix rb = residual_directed(gb, p_hat);
    bs[static_cast<std::size_t>(b)] = extreme_singular_values(rb).second;
  }
  const double mu = mean(bs), s = stddev(bs);
  if (!(s > 1e-12))
    throw DegenerateFit("test_directed_bootstrap: bootstrap spread is zero");

  const auto [mu_tw, s_tw] = tw1_moments(table);
  const double t = mu_tw + s_tw * (smax - mu) / s;
  TestReport rep;
  rep.method = "bootstrap";
  rep.reference = "tw1";
  rep.alpha = alpha;
  rep.seed = seed;
  rep.statistics = {{"t", t}, {"s_max", smax}};
  rep.bootstrap = BootstrapMeta{B, {{"mu", mu}, {"s", s}}};
  rep.reject = detail::outside_band(t, table.quantile(alpha / 2.0),
                                    table.quantile(1.0 - alpha / 2.0));
  return rep;
}

// Asymptotic directed test: standardized largest singular value against the
// two-sided TW1 band.
inline TestReport test_directed_tw(const Graph& g, const ProbMatrix& p_hat, double alpha,
                                   const Tw1Table& table = Tw1Table::embedded()) {
  const ResidualMatrix r = residual_directed(g, p_hat);
  const double smax = extreme_singular_values(r).second;
  const double t = singular_edge_statistic(smax, r.rows(), r.cols());
  TestReport rep;
  rep.method = "asymptotic";
  rep.reference = "tw1";
  rep.alpha = alpha;
  rep.statistics = {{"t_tw", t}, {"s_max", smax}};
  rep.reject = detail::outside_band(t, table.quantile(alpha / 2.0),
                                    table.quantile(1.0 - alpha / 2.0));
  return rep;
}

// Asymptotic directed test on the smallest singular value: under the null
// sqrt(n) s_min follows the exponential law; reject in the upper tail only.
inline TestReport test_directed_explaw(const Graph& g, const ProbMatrix& p_hat,
                                       double alpha) {
  const ResidualMatrix r = residual_directed(g, p_hat);
  const double smin = extreme_singular_values(r).first;
  const double t = std::sqrt(static_cast<double>(g.n())) * smin;
  TestReport rep;
  rep.method = "asymptotic";
  rep.reference = "explaw";
  rep.alpha = alpha;
  rep.statistics = {{"t_explaw", t}, {"s_min", smin}};
  rep.reject = t > explaw_quantile(1.0 - alpha);
  return rep;
}

// --- aggregated relational data ---

// Test of the common-probability null on ARD counts: fit p-hat, standardize
// the m x K count matrix, and compare its largest singular value with the
// TW1 band via the rectangular edge centering.
inline TestReport test_ard_er(const ArdMatrix& y, double alpha,
                              const Tw1Table& table = Tw1Table::embedded()) {
  if (y.respondents() < 2 || y.groups() < 2)
    throw std::invalid_argument("test_ard_er: need at least 2 respondents and 2 groups");
  const double p_hat = fit_er_ard(y);
  if (!(p_hat > kProbEps) || !(p_hat < 1.0 - kProbEps))
    throw DegenerateFit("test_ard_er: fitted tie probability is degenerate");
  const ResidualMatrix r = residual_ard(y, p_hat);
  const double smax = extreme_singular_values(r).second;
  const double t = singular_edge_statistic(smax, r.rows(), r.cols());
  TestReport rep;
  rep.method = "asymptotic";
  rep.reference = "tw1";
  rep.alpha = alpha;
  rep.statistics = {{"t_tw", t}, {"s_max", smax}, {"p_hat", p_hat}};
  rep.reject = detail::outside_band(t, table.quantile(alpha / 2.0),
                                    table.quantile(1.0 - alpha / 2.0));
  return rep;
}

// Convenience sampler: independent-edge draws from a fitted probability
// matrix (the F_theta-hat of every dyad-independent family).
inline GraphSampler bernoulli_sampler(const ProbMatrix& p_hat) {
  return [p_hat](std::uint64_t s) { return sample_graph(p_hat, s); };
}

}  // namespace netgof
