#pragma once

// Exponential random graph models over {edges, triangles, 2-stars}:
// sufficient statistics, change statistics, Metropolis sampling by
// single-edge toggles, maximum pseudo-likelihood estimation, and the
// simulation-based edge-probability matrix used by the goodness-of-fit
// pipeline.

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "netgof/errors.hpp"
#include "netgof/graph.hpp"
#include "netgof/rng.hpp"
#include "netgof/stats.hpp"

namespace netgof {

enum class ErgmTerm { Edges, Triangles, KStar2 };

struct ErgmSpec {
  std::vector<ErgmTerm> terms;

  void validate() const {
    if (terms.empty()) throw std::invalid_argument("ErgmSpec: at least one term required");
    for (std::size_t i = 0; i < terms.size(); ++i)
      for (std::size_t j = i + 1; j < terms.size(); ++j)
        if (terms[i] == terms[j]) throw std::invalid_argument("ErgmSpec: duplicate term");
  }

  int size() const { return static_cast<int>(terms.size()); }
};

struct ErgmParams {
  ErgmSpec spec;
  Eigen::VectorXd theta;

  void validate() const {
    spec.validate();
    if (theta.size() != spec.size())
      throw std::invalid_argument("ErgmParams: one coefficient per term required");
  }
};

inline ErgmTerm ergm_term_from_string(const std::string& s) {
  if (s == "edges") return ErgmTerm::Edges;
  if (s == "triangles") return ErgmTerm::Triangles;
  if (s == "kstar2") return ErgmTerm::KStar2;
  throw std::invalid_argument("unknown ERGM term '" + s + "'");
}

inline std::string ergm_term_name(ErgmTerm t) {
  switch (t) {
    case ErgmTerm::Edges: return "edges";
    case ErgmTerm::Triangles: return "triangles";
    case ErgmTerm::KStar2: return "kstar2";
  }
  throw std::logic_error("ergm_term_name: unreachable");
}

// h(g): edge count, triangle count, and number of 2-stars
// (sum over nodes of C(degree, 2)).
inline Eigen::VectorXd suff_stats(const Graph& g, const ErgmSpec& spec) {
  spec.validate();
  if (g.directed) throw std::invalid_argument("suff_stats: undirected graphs only");
  const int n = g.n();
  Eigen::VectorXd out(spec.size());
  for (int t = 0; t < spec.size(); ++t) {
    switch (spec.terms[static_cast<std::size_t>(t)]) {
      case ErgmTerm::Edges:
        out(t) = g.adj.sum() / 2.0;
        break;
      case ErgmTerm::Triangles: {
        // trace(A^3) counts each triangle 6 times.
        const Eigen::MatrixXd a2 = g.adj * g.adj;
        out(t) = (a2.cwiseProduct(g.adj)).sum() / 6.0;
        break;
      }
      case ErgmTerm::KStar2: {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
          const double d = g.adj.row(i).sum();
          s += d * (d - 1.0) / 2.0;
        }
        out(t) = s;
        break;
      }
    }
  }
  return out;
}

// Change statistic of dyad (i, j): h(g with the edge) - h(g without it),
// all other dyads held fixed.  Independent of the current state of (i, j).
inline Eigen::VectorXd change_stats(const Graph& g, const ErgmSpec& spec, int i, int j) {
  spec.validate();
  if (g.directed) throw std::invalid_argument("change_stats: undirected graphs only");
  if (i == j) throw std::invalid_argument("change_stats: need distinct nodes");
  Eigen::VectorXd out(spec.size());
  const double gij = g.adj(i, j);
  for (int t = 0; t < spec.size(); ++t) {
    switch (spec.terms[static_cast<std::size_t>(t)]) {
      case ErgmTerm::Edges:
        out(t) = 1.0;
        break;
      case ErgmTerm::Triangles:
        // One new triangle per common neighbour.
        out(t) = g.adj.row(i).dot(g.adj.row(j));
        break;
      case ErgmTerm::KStar2:
        // Degrees counted without the (i, j) edge itself.
        out(t) = (g.adj.row(i).sum() - gij) + (g.adj.row(j).sum() - gij);
        break;
    }
  }
  return out;
}

inline std::int64_t default_ergm_burn_in(int n) {
  return 20LL * n * (n - 1) / 2;
}
inline std::int64_t default_ergm_thin(int n) { return static_cast<std::int64_t>(n) * (n - 1) / 2; }

namespace detail {

// One Metropolis single-edge-toggle sweep segment of `steps` proposals.
inline void ergm_toggle_steps(Graph& g, const ErgmParams& params, std::int64_t steps,
                              Rng& rng) {
  const int n = g.n();
  for (std::int64_t s = 0; s < steps; ++s) {
    int i = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n)));
    int j = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n)));
    if (i == j) continue;  // proposal wasted; keeps the kernel simple and symmetric
    const Eigen::VectorXd delta = change_stats(g, params.spec, i, j);
    const bool present = g.adj(i, j) != 0.0;
    const double logratio = (present ? -1.0 : 1.0) * params.theta.dot(delta);
    if (logratio >= 0.0 || rng.uniform() < std::exp(logratio)) {
      g.adj(i, j) = g.adj(j, i) = present ? 0.0 : 1.0;
    }
  }
}

inline Graph ergm_initial_state(const ErgmParams& params, int n, Rng& rng) {
  // Start near the density implied by the edge coefficient (0.5 without one).
  double p0 = 0.5;
  for (int t = 0; t < params.spec.size(); ++t)
    if (params.spec.terms[static_cast<std::size_t>(t)] == ErgmTerm::Edges)
      p0 = expit(params.theta(t));
  Graph g(n, false);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(p0)) g.adj(i, j) = g.adj(j, i) = 1.0;
  return g;
}

}  // namespace detail

// One draw from the model by Metropolis single-edge toggles: burn_in
// proposals from a density-matched start, then `thin` further proposals.
// Defaults: burn_in = 20 C(n,2), thin = C(n,2) (one sweep per sample).
inline Graph sample_ergm(const ErgmParams& params, int n, std::uint64_t seed,
                         std::int64_t burn_in = -1, std::int64_t thin = -1) {
  params.validate();
  if (n < 2) throw std::invalid_argument("sample_ergm: need n >= 2");
  if (burn_in < 0) burn_in = default_ergm_burn_in(n);
  if (thin < 0) thin = default_ergm_thin(n);
  Rng rng(seed);
  Graph g = detail::ergm_initial_state(params, n, rng);
  detail::ergm_toggle_steps(g, params, burn_in + thin, rng);
  return g;
}

// `count` draws taken from `chains` independent chains (seeds derived per
// chain), each burned in once and then thinned.  Chains are accumulated in
// chain order, so the result is independent of any execution interleaving.
inline std::vector<Graph> sample_ergm_run(const ErgmParams& params, int n, int count,
                                          std::uint64_t seed, int chains = 4,
                                          std::int64_t burn_in = -1, std::int64_t thin = -1) {
  params.validate();
  if (count < 1) throw std::invalid_argument("sample_ergm_run: need count >= 1");
  if (burn_in < 0) burn_in = default_ergm_burn_in(n);
  if (thin < 0) thin = default_ergm_thin(n);
  chains = std::min(chains, count);
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < chains; ++c) {
    const int share = count / chains + (c < count % chains ? 1 : 0);
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(c)));
    Graph g = detail::ergm_initial_state(params, n, rng);
    detail::ergm_toggle_steps(g, params, burn_in, rng);
    for (int s = 0; s < share; ++s) {
      detail::ergm_toggle_steps(g, params, thin, rng);
      out.push_back(g);
    }
  }
  return out;
}

// Maximum pseudo-likelihood estimate: logistic regression of the dyad
// indicators on their change statistics, solved by Newton iterations to
// gradient sup-norm below `tol`.  Perfect separation (e.g. an empty or
// complete graph) has no finite maximizer and raises NonConvergence.
inline ErgmParams fit_ergm_mple(const Graph& g, const ErgmSpec& spec, double tol = 1e-8,
                                int max_iters = 100) {
  spec.validate();
  if (g.directed) throw std::invalid_argument("fit_ergm_mple: undirected graphs only");
  const int n = g.n();
  if (n < 3) throw std::invalid_argument("fit_ergm_mple: need n >= 3");
  const int p = spec.size();
  const int m = n * (n - 1) / 2;
  Eigen::MatrixXd x(m, p);
  Eigen::VectorXd y(m);
  {
    int row = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++row) {
        x.row(row) = change_stats(g, spec, i, j).transpose();
        y(row) = g.adj(i, j);
      }
  }
  const double ysum = y.sum();
  if (ysum == 0.0 || ysum == static_cast<double>(m))
    throw NonConvergence(
        "fit_ergm_mple: all dyads identical (empty/complete graph): separation");

  Eigen::VectorXd theta = Eigen::VectorXd::Zero(p);
  for (int it = 0; it < max_iters; ++it) {
    Eigen::VectorXd eta = x * theta;
    Eigen::VectorXd mu(m), w(m);
    for (int r = 0; r < m; ++r) {
      mu(r) = expit(eta(r));
      w(r) = mu(r) * (1.0 - mu(r));
    }
    Eigen::VectorXd grad = x.transpose() * (y - mu);
    if (grad.lpNorm<Eigen::Infinity>() < tol) {
      ErgmParams out{spec, std::move(theta)};
      return out;
    }
    Eigen::MatrixXd hess = x.transpose() * w.asDiagonal() * x;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(hess);
    if (ldlt.info() != Eigen::Success)
      throw NonConvergence("fit_ergm_mple: singular information matrix");
    theta += ldlt.solve(grad);
    if (theta.lpNorm<Eigen::Infinity>() > 40.0)
      throw NonConvergence("fit_ergm_mple: coefficients diverging: separation");
  }
  throw NonConvergence("fit_ergm_mple: Newton did not reach tolerance");
}

// Simulation estimate of the edge-probability matrix: the average adjacency
// over B model draws.  Entries of exactly 0 or 1 can survive small B; they
// are returned as computed and trip the residual standardization guard
// downstream (raise B to resolve).
inline ProbMatrix estimate_p_ergm(const ErgmParams& params, int n, int B = 500,
                                  std::uint64_t seed = 1, int chains = 4,
                                  std::int64_t burn_in = -1, std::int64_t thin = -1) {
  if (B < 1) throw std::invalid_argument("estimate_p_ergm: need B >= 1");
  const std::vector<Graph> draws = sample_ergm_run(params, n, B, seed, chains, burn_in, thin);
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
  for (const Graph& g : draws) acc += g.adj;
  acc /= static_cast<double>(B);
  acc.diagonal().setZero();
  return ProbMatrix(std::move(acc), false);
}

}  // namespace netgof
