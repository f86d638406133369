#pragma once

// Latent dimension selection and community detection on fitted positions.
//
// Dimension selection scans d = 1, 2, ... and returns the first dimension
// whose fitted latent space model survives the bootstrap goodness-of-fit
// test; community detection is k-means over the fitted positions with the
// usual permutation-invariant misclassification score.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "netgof/errors.hpp"
#include "netgof/gof.hpp"
#include "netgof/graph.hpp"
#include "netgof/models.hpp"
#include "netgof/rng.hpp"

namespace netgof {

struct DimensionEntry {
  int d = 0;
  std::uint64_t seed = 0;  // seed the bootstrap test ran with
  std::optional<TestReport> report;
  std::string error;  // fit/test failure for this dimension, if any
};

struct DimensionScan {
  int d_fit = 0;  // selected dimension; meaningful only when !exhausted
  bool exhausted = false;
  int max_d = 0;
  std::vector<DimensionEntry> trail;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["d_fit"] = exhausted ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(d_fit);
    j["exhausted"] = exhausted;
    j["max_d"] = max_d;
    nlohmann::ordered_json trail_json = nlohmann::ordered_json::array();
    for (const auto& e : trail) {
      nlohmann::ordered_json ej;
      ej["d"] = e.d;
      ej["seed"] = e.seed;
      if (e.report)
        ej["report"] = e.report->to_json();
      else
        ej["error"] = e.error;
      trail_json.push_back(std::move(ej));
    }
    j["trail"] = std::move(trail_json);
    return j;
  }
};

struct SelectDimensionOptions {
  PgdOptions pgd;
  int B = 200;
  double alpha = 0.05;
};

inline int default_max_dimension(int n) {
  return std::min(12, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))));
}

// Scan d = 1..max_d: fit the d-dimensional latent space model, bootstrap
// test the fit, and return the first d that is not rejected.  Fitting or
// testing errors at some d are recorded in the trail and the scan moves on.
// Dimension d's test always runs with derive_seed(seed, d), so any trail
// entry can be reproduced in isolation.  max_d <= 0 selects the default
// ceil(sqrt(n)) capped at 12.
inline DimensionScan select_dimension(const Graph& g, const SelectDimensionOptions& opts,
                                      int max_d, std::uint64_t seed,
                                      const Tw1Table& table = Tw1Table::embedded()) {
  if (g.directed) throw std::invalid_argument("select_dimension: undirected graphs only");
  if (max_d <= 0) max_d = default_max_dimension(g.n());
  if (max_d >= g.n()) throw std::invalid_argument("select_dimension: max_d must be < n");
  DimensionScan scan;
  scan.max_d = max_d;
  scan.exhausted = true;
  for (int d = 1; d <= max_d; ++d) {
    DimensionEntry entry;
    entry.d = d;
    entry.seed = derive_seed(seed, static_cast<std::uint64_t>(d));
    try {
      const LatentSpaceFit fit = fit_latent_space(g, d, opts.pgd);
      const ProbMatrix p_hat = prob_matrix(fit.params);
      entry.report = test_undirected_bootstrap(g, bernoulli_sampler(p_hat), p_hat, opts.B,
                                               opts.alpha, entry.seed, table);
    } catch (const std::exception& e) {
      entry.error = e.what();
      scan.trail.push_back(std::move(entry));
      continue;
    }
    const bool rejected = entry.report->reject;
    scan.trail.push_back(std::move(entry));
    if (!rejected) {
      scan.d_fit = d;
      scan.exhausted = false;
      break;
    }
  }
  return scan;
}

// --- k-means over latent positions ---

namespace detail {

inline double sq_dist(const Eigen::MatrixXd& z, int i, const Eigen::RowVectorXd& c) {
  return (z.row(i) - c).squaredNorm();
}

// Assign each point to the nearest center (lowest index wins ties); returns
// the within-cluster sum of squares.
inline double kmeans_assign(const Eigen::MatrixXd& z, const Eigen::MatrixXd& centers,
                            std::vector<int>& assign) {
  const int n = static_cast<int>(z.rows());
  const int k = static_cast<int>(centers.rows());
  double wcss = 0.0;
  for (int i = 0; i < n; ++i) {
    int best = 0;
    double bestd = sq_dist(z, i, centers.row(0));
    for (int c = 1; c < k; ++c) {
      const double dd = sq_dist(z, i, centers.row(c));
      if (dd < bestd) {
        bestd = dd;
        best = c;
      }
    }
    assign[static_cast<std::size_t>(i)] = best;
    wcss += bestd;
  }
  return wcss;
}

}  // namespace detail

// Lloyd's algorithm with k-means++ seeding, repeated `restarts` times with
// derived seeds; the assignment with the lowest within-cluster sum of
// squares wins (first such restart on ties).
inline NodeLabeling kmeans_communities(const Eigen::MatrixXd& z, int k, int restarts = 200,
                                       std::uint64_t seed = 1) {
  const int n = static_cast<int>(z.rows());
  if (k < 2) throw std::invalid_argument("kmeans_communities: need K >= 2");
  if (k > n) throw std::invalid_argument("kmeans_communities: K exceeds number of points");
  if (restarts < 1) throw std::invalid_argument("kmeans_communities: need restarts >= 1");

  std::vector<int> best_assign(static_cast<std::size_t>(n), 0);
  double best_wcss = std::numeric_limits<double>::infinity();

  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  std::vector<double> d2(static_cast<std::size_t>(n));
  Eigen::MatrixXd centers(k, z.cols());

  for (int r = 0; r < restarts; ++r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));

    // k-means++ seeding: subsequent centers drawn with probability
    // proportional to squared distance from the chosen set.
    centers.row(0) = z.row(static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n))));
    for (int i = 0; i < n; ++i) d2[static_cast<std::size_t>(i)] = detail::sq_dist(z, i, centers.row(0));
    for (int c = 1; c < k; ++c) {
      double total = std::accumulate(d2.begin(), d2.end(), 0.0);
      int pick;
      if (total <= 0.0) {
        pick = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n)));
      } else {
        const double u = rng.uniform() * total;
        double acc = 0.0;
        pick = n - 1;
        for (int i = 0; i < n; ++i) {
          acc += d2[static_cast<std::size_t>(i)];
          if (u < acc) {
            pick = i;
            break;
          }
        }
      }
      centers.row(c) = z.row(pick);
      for (int i = 0; i < n; ++i)
        d2[static_cast<std::size_t>(i)] =
            std::min(d2[static_cast<std::size_t>(i)], detail::sq_dist(z, i, centers.row(c)));
    }

    // Lloyd iterations: assignment and center updates until stable.
    double wcss = detail::kmeans_assign(z, centers, assign);
    for (int it = 0; it < 200; ++it) {
      // Update centers.
      Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, z.cols());
      std::vector<int> counts(static_cast<std::size_t>(k), 0);
      for (int i = 0; i < n; ++i) {
        sums.row(assign[static_cast<std::size_t>(i)]) += z.row(i);
        ++counts[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])];
      }
      std::vector<bool> taken(static_cast<std::size_t>(n), false);
      for (int c = 0; c < k; ++c) {
        if (counts[static_cast<std::size_t>(c)] > 0) {
          centers.row(c) = sums.row(c) / counts[static_cast<std::size_t>(c)];
        } else {
          // Empty cluster: seize the point currently farthest from its center.
          int far_i = -1;
          double far_d = -1.0;
          for (int i = 0; i < n; ++i) {
            if (taken[static_cast<std::size_t>(i)]) continue;
            const double dd =
                detail::sq_dist(z, i, centers.row(assign[static_cast<std::size_t>(i)]));
            if (dd > far_d) {
              far_d = dd;
              far_i = i;
            }
          }
          centers.row(c) = z.row(far_i);
          taken[static_cast<std::size_t>(far_i)] = true;
        }
      }
      const double new_wcss = detail::kmeans_assign(z, centers, assign);
      if (new_wcss >= wcss - 1e-12 * (1.0 + wcss)) {
        wcss = std::min(wcss, new_wcss);
        break;
      }
      wcss = new_wcss;
    }

    if (wcss < best_wcss) {
      best_wcss = wcss;
      best_assign = assign;
    }
  }
  return NodeLabeling(std::move(best_assign));
}

// --- misclassification scoring ---

struct ClusterEval {
  NodeLabeling assignment;
  double misclassification_rate = 0.0;
  std::vector<int> permutation;  // permutation[est label] = matched truth label

  nlohmann::ordered_json to_json() const {
    return nlohmann::ordered_json{{"labels", assignment.labels},
                                  {"misclassification_rate", misclassification_rate},
                                  {"permutation", permutation}};
  }
};

namespace detail {

// Hungarian algorithm (shortest augmenting paths with potentials) for a
// square cost matrix; returns the column matched to each row.
inline std::vector<int> hungarian_min_cost(const Eigen::MatrixXd& cost) {
  const int k = static_cast<int>(cost.rows());
  std::vector<double> u(static_cast<std::size_t>(k) + 1, 0.0), v(static_cast<std::size_t>(k) + 1, 0.0);
  std::vector<int> match(static_cast<std::size_t>(k) + 1, 0), way(static_cast<std::size_t>(k) + 1, 0);
  for (int i = 1; i <= k; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> minv(static_cast<std::size_t>(k) + 1,
                             std::numeric_limits<double>::infinity());
    std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
    do {
      used[static_cast<std::size_t>(j0)] = true;
      const int i0 = match[static_cast<std::size_t>(j0)];
      double delta = std::numeric_limits<double>::infinity();
      int j1 = 0;
      for (int j = 1; j <= k; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[static_cast<std::size_t>(i0)] -
                           v[static_cast<std::size_t>(j)];
        if (cur < minv[static_cast<std::size_t>(j)]) {
          minv[static_cast<std::size_t>(j)] = cur;
          way[static_cast<std::size_t>(j)] = j0;
        }
        if (minv[static_cast<std::size_t>(j)] < delta) {
          delta = minv[static_cast<std::size_t>(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= k; ++j) {
        if (used[static_cast<std::size_t>(j)]) {
          u[static_cast<std::size_t>(match[static_cast<std::size_t>(j)])] += delta;
          v[static_cast<std::size_t>(j)] -= delta;
        } else {
          minv[static_cast<std::size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (match[static_cast<std::size_t>(j0)] != 0);
    do {
      const int j1 = way[static_cast<std::size_t>(j0)];
      match[static_cast<std::size_t>(j0)] = match[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row_to_col(static_cast<std::size_t>(k), -1);
  for (int j = 1; j <= k; ++j)
    if (match[static_cast<std::size_t>(j)] > 0)
      row_to_col[static_cast<std::size_t>(match[static_cast<std::size_t>(j)] - 1)] = j - 1;
  return row_to_col;
}

}  // namespace detail

// Fraction of nodes whose estimated label disagrees with the truth under
// the best relabeling: exhaustive over permutations for K <= 6, Hungarian
// matching above that.  Both labelings must use at most 10 labels.
inline ClusterEval misclassification(const NodeLabeling& est, const NodeLabeling& truth) {
  if (est.n() != truth.n())
    throw std::invalid_argument("misclassification: labelings differ in length");
  const int n = est.n();
  if (n == 0) throw std::invalid_argument("misclassification: empty labeling");
  const int ke = est.num_groups(), kt = truth.num_groups();
  if (ke > 10 || kt > 10)
    throw std::invalid_argument("misclassification: more than 10 labels; matching capped");
  const int k = std::max(ke, kt);

  // agreement(a, b) = #nodes with est a and truth b.
  Eigen::MatrixXd agree = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < n; ++i)
    agree(est.labels[static_cast<std::size_t>(i)], truth.labels[static_cast<std::size_t>(i)]) += 1.0;

  std::vector<int> best_perm(static_cast<std::size_t>(k));
  double best_agree = -1.0;
  if (k <= 6) {
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      double total = 0.0;
      for (int a = 0; a < k; ++a) total += agree(a, perm[static_cast<std::size_t>(a)]);
      if (total > best_agree) {
        best_agree = total;
        best_perm = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    best_perm = detail::hungarian_min_cost(-agree);
    best_agree = 0.0;
    for (int a = 0; a < k; ++a) best_agree += agree(a, best_perm[static_cast<std::size_t>(a)]);
  }

  ClusterEval eval;
  eval.assignment = est;
  eval.misclassification_rate = 1.0 - best_agree / static_cast<double>(n);
  eval.permutation.assign(best_perm.begin(), best_perm.begin() + ke);
  return eval;
}

}  // namespace netgof
