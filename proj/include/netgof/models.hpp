#pragma once

// Parametric network models: edge-probability construction, and maximum
// likelihood / projected-gradient fitting.
//
// Families:
//   - Erdos-Renyi (undirected or directed), also in its ARD form;
//   - stochastic block model (undirected or directed) for generation;
//   - degree-heterogeneity beta model with expit or exp link;
//   - inner-product latent space model with node intercepts.

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "netgof/errors.hpp"
#include "netgof/graph.hpp"
#include "netgof/stats.hpp"

namespace netgof {

// --- parameter types ---

struct ErParams {
  double p = 0.0;
  bool directed = false;
};

struct SbmParams {
  Eigen::MatrixXd block_p;  // K x K; symmetric when undirected
  NodeLabeling labels;
  bool directed = false;
};

enum class BetaLink { Expit, Exp };

struct BetaParams {
  Eigen::VectorXd beta;
  BetaLink link = BetaLink::Expit;
};

struct LatentSpaceParams {
  Eigen::VectorXd alpha;  // node intercepts
  Eigen::MatrixXd z;      // n x d latent positions
  // Optional pairwise covariate term: coef * x(i,j) added to the log odds.
  double covariate_coef = 0.0;
  Eigen::MatrixXd covariate;  // n x n or empty

  int n() const { return static_cast<int>(alpha.size()); }
  int d() const { return static_cast<int>(z.cols()); }
};

// --- probability matrices ---

inline ProbMatrix prob_matrix(const ErParams& m, int n) {
  if (!(m.p >= 0.0) || !(m.p <= 1.0))
    throw std::invalid_argument("prob_matrix: p must lie in [0,1]");
  Eigen::MatrixXd p = Eigen::MatrixXd::Constant(n, n, m.p);
  p.diagonal().setZero();
  return ProbMatrix(std::move(p), m.directed);
}

inline ProbMatrix prob_matrix(const SbmParams& m) {
  const int n = m.labels.n();
  const int k = static_cast<int>(m.block_p.rows());
  if (m.block_p.cols() != k) throw std::invalid_argument("prob_matrix: block matrix not square");
  if (m.labels.num_groups() > k)
    throw std::invalid_argument("prob_matrix: label outside block matrix");
  Eigen::MatrixXd p(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      p(i, j) = m.block_p(m.labels.labels[static_cast<std::size_t>(i)],
                          m.labels.labels[static_cast<std::size_t>(j)]);
  p.diagonal().setZero();
  return ProbMatrix(std::move(p), m.directed);
}

inline ProbMatrix prob_matrix(const BetaParams& m) {
  const int n = static_cast<int>(m.beta.size());
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double s = m.beta(i) + m.beta(j);
      double pij;
      if (m.link == BetaLink::Expit) {
        pij = expit(s);
      } else {
        if (!(s < 0.0))
          throw std::invalid_argument(
              "prob_matrix: exp link requires beta_i + beta_j < 0");
        pij = std::exp(s);
      }
      p(i, j) = p(j, i) = pij;
    }
  return ProbMatrix(std::move(p), false);
}

inline ProbMatrix prob_matrix(const LatentSpaceParams& m) {
  const int n = m.n();
  if (m.z.rows() != n) throw std::invalid_argument("prob_matrix: alpha/z size mismatch");
  const bool has_cov = m.covariate.size() > 0;
  if (has_cov && (m.covariate.rows() != n || m.covariate.cols() != n))
    throw std::invalid_argument("prob_matrix: covariate must be n x n");
  // Covariate matrices are required symmetric for undirected use; guard
  // against asymmetric input.
  if (has_cov)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (m.covariate(i, j) != m.covariate(j, i))
          throw std::invalid_argument("prob_matrix: covariate must be symmetric");
  Eigen::MatrixXd theta = m.z * m.z.transpose();
  theta.colwise() += m.alpha;
  theta.rowwise() += m.alpha.transpose();
  if (has_cov) theta += m.covariate_coef * m.covariate;
  // Blocked matrix products are not bit-exact symmetric; build both triangles
  // from the upper one so the undirected constructor invariant holds.
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) p(i, j) = p(j, i) = expit(theta(i, j));
  return ProbMatrix(std::move(p), false);
}

// --- fitting ---

inline ErParams fit_er(const Graph& g) {
  const double n = static_cast<double>(g.n());
  if (g.n() < 2) throw std::invalid_argument("fit_er: need n >= 2");
  const double dyads = g.directed ? n * (n - 1.0) : n * (n - 1.0) / 2.0;
  const double p = static_cast<double>(g.edge_count()) / dyads;
  if (p <= 0.0 || p >= 1.0)
    throw DegenerateFit("fit_er: empty or complete graph, p-hat in {0,1}");
  return ErParams{p, g.directed};
}

// Common tie probability under the ARD Erdos-Renyi null:
// p-hat = mean over cells of Y_ij / n_j.
inline double fit_er_ard(const ArdMatrix& y) {
  y.validate();
  double acc = 0.0;
  for (int i = 0; i < y.respondents(); ++i)
    for (int j = 0; j < y.groups(); ++j)
      acc += y.counts(i, j) / y.group_sizes[static_cast<std::size_t>(j)];
  const double p = acc / (static_cast<double>(y.respondents()) * static_cast<double>(y.groups()));
  if (p <= 0.0 || p >= 1.0)
    throw DegenerateFit("fit_er_ard: all counts empty or saturated, p-hat in {0,1}");
  return p;
}

// Beta model MLE (expit link) by the degree-matching fixed point
//   beta_i <- log d_i - log sum_{j != i} 1 / (exp(-beta_j) + exp(beta_i)),
// iterated to sup-norm tolerance.  The MLE does not exist when any degree
// is 0 or n-1 (the likelihood maximizes only at infinity).
inline BetaParams fit_beta_mle(const Graph& g, double tol = 1e-10, int max_iters = 10000) {
  if (g.directed) throw std::invalid_argument("fit_beta_mle: undirected graphs only");
  const int n = g.n();
  if (n < 2) throw std::invalid_argument("fit_beta_mle: need n >= 2");
  const Eigen::VectorXd deg = degrees(g);
  for (int i = 0; i < n; ++i)
    if (deg(i) <= 0.0 || deg(i) >= static_cast<double>(n - 1))
      throw MleNonexistent("fit_beta_mle: a node of degree 0 or n-1 puts the MLE at infinity");

  Eigen::VectorXd beta(n), next(n);
  const double dens = deg.sum() / (static_cast<double>(n) * (n - 1.0));
  beta.setConstant(0.5 * logit(dens));
  Eigen::VectorXd eneg(n);
  for (int it = 0; it < max_iters; ++it) {
    for (int j = 0; j < n; ++j) eneg(j) = std::exp(-beta(j));
    for (int i = 0; i < n; ++i) {
      const double ei = std::exp(beta(i));
      double s = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != i) s += 1.0 / (eneg(j) + ei);
      next(i) = std::log(deg(i)) - std::log(s);
    }
    const double delta = (next - beta).lpNorm<Eigen::Infinity>();
    beta = next;
    if (delta < tol) return BetaParams{std::move(beta), BetaLink::Expit};
  }
  throw NonConvergence("fit_beta_mle: fixed point did not reach tolerance");
}

// --- latent space fitting (projected gradient descent) ---

struct PgdOptions {
  int max_iters = 2000;
  double rel_tol = 1e-7;     // relative objective change at an accepted step
  double step_scale = 0.2;   // initial step = step_scale / ||initial gradient block||
  int max_halvings = 60;     // backtracking budget per step before giving up
  // Optional warm start: when init_z has entries it must be n x d (and
  // init_alpha length n); the spectral initialization is skipped.
  Eigen::MatrixXd init_z;
  Eigen::VectorXd init_alpha;
};

struct LatentSpaceFit {
  LatentSpaceParams params;
  double objective = 0.0;  // log likelihood over unordered pairs
  int iters = 0;
  bool converged = false;
};

namespace detail {

inline double latent_loglik(const Eigen::MatrixXd& adj, const Eigen::VectorXd& alpha,
                            const Eigen::MatrixXd& z, const Eigen::MatrixXd* x = nullptr,
                            double b = 0.0) {
  const int n = static_cast<int>(alpha.size());
  Eigen::MatrixXd theta = z * z.transpose();
  theta.colwise() += alpha;
  theta.rowwise() += alpha.transpose();
  if (x) theta += b * (*x);
  double ll = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double t = theta(i, j);
      // log(1 + e^t) evaluated stably on both sides.
      const double soft = t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
      ll += adj(i, j) * t - soft;
    }
  return ll;
}

// Residual R = G - sigma(Theta) with zero diagonal.
inline void latent_residual(const Eigen::MatrixXd& adj, const Eigen::VectorXd& alpha,
                            const Eigen::MatrixXd& z, Eigen::MatrixXd& r,
                            const Eigen::MatrixXd* x = nullptr, double b = 0.0) {
  const int n = static_cast<int>(alpha.size());
  r.noalias() = z * z.transpose();
  r.colwise() += alpha;
  r.rowwise() += alpha.transpose();
  if (x) r += b * (*x);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = adj(i, j) - expit(r(i, j));
  r.diagonal().setZero();
}

}  // namespace detail

// Fit node intercepts and a rank-d inner-product term by projected gradient
// ascent on the dyad log likelihood.  Initialization embeds a spectrally
// denoised, logit-transformed edge-probability estimate (universal singular
// value thresholding style); intercepts start at half the logit of each
// node's degree ratio.  Latent positions are re-centered after every step,
// and steps are backtracked (halved) whenever the objective would decrease,
// so the objective is nondecreasing over accepted iterations.
inline LatentSpaceFit fit_latent_space(const Graph& g, int d, const PgdOptions& opts = {},
                                       const Eigen::MatrixXd* covariate = nullptr) {
  if (g.directed) throw std::invalid_argument("fit_latent_space: undirected graphs only");
  if (d < 1) throw std::invalid_argument("fit_latent_space: need d >= 1");
  const int n = g.n();
  if (n < d + 2) throw std::invalid_argument("fit_latent_space: n too small for d");
  if (covariate) {
    if (covariate->rows() != n || covariate->cols() != n)
      throw std::invalid_argument("fit_latent_space: covariate must be n x n");
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((*covariate)(i, j) != (*covariate)(j, i))
          throw std::invalid_argument("fit_latent_space: covariate must be symmetric");
  }

  const Eigen::VectorXd deg = degrees(g);
  const double nm1 = static_cast<double>(n - 1);
  Eigen::VectorXd alpha;
  if (opts.init_alpha.size() > 0) {
    if (opts.init_alpha.size() != n)
      throw std::invalid_argument("fit_latent_space: init_alpha must have length n");
    alpha = opts.init_alpha;
  } else {
    // Intercepts from degree ratios, clipped away from {0,1}.
    alpha.resize(n);
    for (int i = 0; i < n; ++i) {
      const double ratio = std::min(std::max(deg(i) / nm1, 0.5 / nm1), 1.0 - 0.5 / nm1);
      alpha(i) = 0.5 * logit(ratio);
    }
  }

  Eigen::MatrixXd z;
  if (opts.init_z.size() > 0) {
    if (opts.init_z.rows() != n || opts.init_z.cols() != d)
      throw std::invalid_argument("fit_latent_space: init_z must be n x d");
    z = opts.init_z;
  } else {
    // Spectral initialization of the latent positions: embed the leading
    // eigenspace of the logit of a singular-value-thresholded denoising of
    // the adjacency matrix, minus the intercept field.
    const double dens = std::min(
        std::max(deg.sum() / (static_cast<double>(n) * nm1), 1.0 / nm1), 1.0 - 1.0 / nm1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.adj);
    if (es.info() != Eigen::Success)
      throw std::runtime_error("fit_latent_space: eigensolver failed");
    const double tau = 2.01 * std::sqrt(static_cast<double>(n) * dens * (1.0 - dens));
    Eigen::MatrixXd ptilde = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
      const double lam = es.eigenvalues()(k);
      if (std::abs(lam) > tau)
        ptilde.noalias() += lam * es.eigenvectors().col(k) * es.eigenvectors().col(k).transpose();
    }
    const double clip = 1.0 / (2.0 * static_cast<double>(n));
    Eigen::MatrixXd theta0(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        theta0(i, j) = logit(std::min(std::max(ptilde(i, j), clip), 1.0 - clip));
    theta0.colwise() -= alpha;
    theta0.rowwise() -= alpha.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es0((theta0 + theta0.transpose()) / 2.0);
    z.resize(n, d);
    for (int k = 0; k < d; ++k) {
      const int idx = n - 1 - k;  // eigenvalues ascend
      const double lam = std::max(es0.eigenvalues()(idx), 0.0);
      z.col(k) = std::sqrt(lam) * es0.eigenvectors().col(idx);
    }
  }
  z.rowwise() -= z.colwise().mean();  // project: latent positions centered

  double bcov = 0.0;
  double obj = detail::latent_loglik(g.adj, alpha, z, covariate, bcov);
  Eigen::MatrixXd r(n, n);
  detail::latent_residual(g.adj, alpha, z, r, covariate, bcov);
  Eigen::MatrixXd grad_z = r * z;
  Eigen::VectorXd grad_a = r.rowwise().sum();
  double grad_b = covariate ? 0.5 * r.cwiseProduct(*covariate).sum() : 0.0;
  double step_z = opts.step_scale / std::max(grad_z.norm(), 1e-12);
  double step_a = opts.step_scale / std::max(grad_a.norm(), 1e-12);
  double step_b = covariate ? opts.step_scale / std::max(std::abs(grad_b), 1e-12) : 0.0;

  LatentSpaceFit fit;
  int it = 0;
  bool converged = false;
  while (it < opts.max_iters) {
    // Propose an ascent step; halve until the objective does not decrease.
    int halvings = 0;
    for (;;) {
      Eigen::MatrixXd z_new = z + step_z * grad_z;
      z_new.rowwise() -= z_new.colwise().mean();
      Eigen::VectorXd a_new = alpha + step_a * grad_a;
      const double b_new = bcov + step_b * grad_b;
      const double obj_new = detail::latent_loglik(g.adj, a_new, z_new, covariate, b_new);
      if (obj_new >= obj) {
        const double rel = std::abs(obj_new - obj) / (std::abs(obj) + 1.0);
        z = std::move(z_new);
        alpha = std::move(a_new);
        bcov = b_new;
        obj = obj_new;
        ++it;
        if (rel < opts.rel_tol) converged = true;
        break;
      }
      step_z *= 0.5;
      step_a *= 0.5;
      step_b *= 0.5;
      if (++halvings > opts.max_halvings) {
        converged = true;  // step underflow: at a local maximum within resolution
        break;
      }
    }
    if (converged) break;
    detail::latent_residual(g.adj, alpha, z, r, covariate, bcov);
    grad_z.noalias() = r * z;
    grad_a = r.rowwise().sum();
    if (covariate) grad_b = 0.5 * r.cwiseProduct(*covariate).sum();
  }

  fit.params.alpha = std::move(alpha);
  fit.params.z = std::move(z);
  if (covariate) {
    fit.params.covariate = *covariate;
    fit.params.covariate_coef = bcov;
  }
  fit.objective = obj;
  fit.iters = it;
  fit.converged = converged;
  return fit;
}

// --- model parameters as JSON (family tag + parameter arrays) ---

using ModelParams = std::variant<ErParams, SbmParams, BetaParams, LatentSpaceParams>;

inline nlohmann::ordered_json model_to_json(const ModelParams& m) {
  using j = nlohmann::ordered_json;
  if (const auto* er = std::get_if<ErParams>(&m))
    return j{{"family", "er"}, {"p", er->p}, {"directed", er->directed}};
  if (const auto* sbm = std::get_if<SbmParams>(&m)) {
    j blocks = j::array();
    for (int i = 0; i < sbm->block_p.rows(); ++i) {
      j row = j::array();
      for (int c = 0; c < sbm->block_p.cols(); ++c) row.push_back(sbm->block_p(i, c));
      blocks.push_back(std::move(row));
    }
    return j{{"family", "sbm"},
             {"block_p", std::move(blocks)},
             {"labels", sbm->labels.labels},
             {"directed", sbm->directed}};
  }
  if (const auto* b = std::get_if<BetaParams>(&m)) {
    std::vector<double> beta(b->beta.data(), b->beta.data() + b->beta.size());
    return j{{"family", "beta"},
             {"link", b->link == BetaLink::Expit ? "expit" : "exp"},
             {"beta", std::move(beta)}};
  }
  const auto& ls = std::get<LatentSpaceParams>(m);
  std::vector<double> alpha(ls.alpha.data(), ls.alpha.data() + ls.alpha.size());
  j zrows = j::array();
  for (int i = 0; i < ls.z.rows(); ++i) {
    j row = j::array();
    for (int c = 0; c < ls.z.cols(); ++c) row.push_back(ls.z(i, c));
    zrows.push_back(std::move(row));
  }
  return j{{"family", "latent"}, {"alpha", std::move(alpha)}, {"z", std::move(zrows)}};
}

inline ModelParams model_from_json(const nlohmann::ordered_json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "er")
    return ErParams{j.at("p").get<double>(), j.value("directed", false)};
  if (family == "sbm") {
    const auto& rows = j.at("block_p");
    const int k = static_cast<int>(rows.size());
    Eigen::MatrixXd bp(k, k);
    for (int i = 0; i < k; ++i)
      for (int c = 0; c < k; ++c) bp(i, c) = rows.at(i).at(c).get<double>();
    return SbmParams{std::move(bp), NodeLabeling(j.at("labels").get<std::vector<int>>()),
                     j.value("directed", false)};
  }
  if (family == "beta") {
    const auto v = j.at("beta").get<std::vector<double>>();
    Eigen::VectorXd beta = Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<int>(v.size()));
    const std::string link = j.value("link", "expit");
    return BetaParams{std::move(beta), link == "exp" ? BetaLink::Exp : BetaLink::Expit};
  }
  if (family == "latent") {
    const auto a = j.at("alpha").get<std::vector<double>>();
    LatentSpaceParams ls;
    ls.alpha = Eigen::Map<const Eigen::VectorXd>(a.data(), static_cast<int>(a.size()));
    const auto& zrows = j.at("z");
    const int n = static_cast<int>(zrows.size());
    const int d = n > 0 ? static_cast<int>(zrows.at(0).size()) : 0;
    ls.z = Eigen::MatrixXd(n, d);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < d; ++c) ls.z(i, c) = zrows.at(i).at(c).get<double>();
    return ls;
  }
  throw std::invalid_argument("model_from_json: unknown family '" + family + "'");
}

// Probability matrix of a parsed model (n inferred from the parameters,
// except for the Erdos-Renyi family where it must be supplied).
inline ProbMatrix model_prob_matrix(const ModelParams& m, std::optional<int> n = std::nullopt) {
  if (const auto* er = std::get_if<ErParams>(&m)) {
    if (!n) throw std::invalid_argument("model_prob_matrix: er family needs n");
    return prob_matrix(*er, *n);
  }
  if (const auto* sbm = std::get_if<SbmParams>(&m)) return prob_matrix(*sbm);
  if (const auto* b = std::get_if<BetaParams>(&m)) return prob_matrix(*b);
  return prob_matrix(std::get<LatentSpaceParams>(m));
}

}  // namespace netgof
