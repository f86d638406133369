#pragma once

// Centered and scaled residual matrices, and their extreme eigenvalues /
// singular values.
//
// Under a well-specified null, the standardized residual of a complete
// undirected graph behaves like a Wigner matrix whose extreme eigenvalues
// stick to +-2; the directed and ARD variants are variance-one rectangular
// ensembles whose extreme singular values follow the corresponding limit
// laws.  Everything downstream (tests, bootstrap, dimension selection)
// consumes the quantities computed here.

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "netgof/errors.hpp"
#include "netgof/graph.hpp"
#include "netgof/rng.hpp"
#include "netgof/tridiag.hpp"

namespace netgof {

// Off-diagonal fitted probabilities must stay this far inside (0,1); the
// standardization divides by sqrt(p(1-p)).
inline constexpr double kProbEps = 1e-8;

enum class ResidualKind { UndirectedSym, Directed, ArdRect };

struct ResidualMatrix {
  Eigen::MatrixXd m;
  ResidualKind kind = ResidualKind::UndirectedSym;

  int rows() const { return static_cast<int>(m.rows()); }
  int cols() const { return static_cast<int>(m.cols()); }
};

namespace detail {

inline void check_prob_entry(double p) {
  if (!(p > kProbEps) || !(p < 1.0 - kProbEps))
    throw DegenerateProbability(
        "fitted probability outside (eps, 1-eps); residual standardization is "
        "undefined");
}

}  // namespace detail

// Undirected residual: (G_ij - P_ij) / sqrt((n-1) P_ij (1 - P_ij)) off the
// diagonal, zero on it.  Row variances are ~1/(n-1), so the spectrum edges
// sit near +-2.
inline ResidualMatrix residual_undirected(const Graph& g, const ProbMatrix& p) {
  if (g.directed || p.directed)
    throw std::invalid_argument("residual_undirected: undirected inputs required");
  const int n = g.n();
  if (p.n() != n) throw std::invalid_argument("residual_undirected: size mismatch");
  if (n < 2) throw std::invalid_argument("residual_undirected: need n >= 2");
  ResidualMatrix r;
  r.kind = ResidualKind::UndirectedSym;
  r.m = Eigen::MatrixXd::Zero(n, n);
  const double nm1 = static_cast<double>(n - 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double pij = p.p(i, j);
      detail::check_prob_entry(pij);
      const double v = (g.adj(i, j) - pij) / std::sqrt(nm1 * pij * (1.0 - pij));
      r.m(i, j) = r.m(j, i) = v;
    }
  return r;
}

// Directed residual: (G_ij - P_ij) / sqrt(P_ij (1 - P_ij)) off the diagonal
// (variance-one entries), zero on it.
inline ResidualMatrix residual_directed(const Graph& g, const ProbMatrix& p) {
  if (!g.directed || !p.directed)
    throw std::invalid_argument("residual_directed: directed inputs required");
  const int n = g.n();
  if (p.n() != n) throw std::invalid_argument("residual_directed: size mismatch");
  if (n < 2) throw std::invalid_argument("residual_directed: need n >= 2");
  ResidualMatrix r;
  r.kind = ResidualKind::Directed;
  r.m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double pij = p.p(i, j);
      detail::check_prob_entry(pij);
      r.m(i, j) = (g.adj(i, j) - pij) / std::sqrt(pij * (1.0 - pij));
    }
  return r;
}

// ARD residual: counts are Binomial(n_j, p) under the null, so the
// standardized matrix (Y_ij - n_j p) / sqrt(n_j p (1-p)) has variance-one
// entries.  The matrix is rectangular (respondents x groups) and no entries
// are zeroed: a respondent's count toward its own group is a real
// observation here.
inline ResidualMatrix residual_ard(const ArdMatrix& y, double p_hat) {
  y.validate();
  detail::check_prob_entry(p_hat);
  ResidualMatrix r;
  r.kind = ResidualKind::ArdRect;
  r.m = Eigen::MatrixXd(y.respondents(), y.groups());
  for (int i = 0; i < y.respondents(); ++i)
    for (int j = 0; j < y.groups(); ++j) {
      const double nj = y.group_sizes[static_cast<std::size_t>(j)];
      r.m(i, j) = (y.counts(i, j) - nj * p_hat) / std::sqrt(nj * p_hat * (1.0 - p_hat));
    }
  return r;
}

// --- extreme eigenvalues ---

namespace detail {

inline constexpr int kDenseEigCutoff = 512;

// Lanczos with full reorthogonalization for the extreme eigenvalue pair of
// a symmetric operator.  `op(x, y)` must compute y = A x.  Returns false if
// the iteration cap is hit before the extremes stabilize.
template <class Op>
bool lanczos_extreme_pair(Op&& op, int n, double rel_tol, int max_iters,
                          std::pair<double, double>& out) {
  if (n == 1) {
    Eigen::VectorXd e = Eigen::VectorXd::Ones(1), y(1);
    op(e, y);
    out = {y(0), y(0)};
    return true;
  }
  const int cap = std::min(n, max_iters);
  Eigen::MatrixXd basis(n, cap);
  std::vector<double> alpha, beta;
  alpha.reserve(static_cast<std::size_t>(cap));
  beta.reserve(static_cast<std::size_t>(cap));

  // Fixed-seed start vector: calls are reproducible with no RNG handed in.
  Rng rng(0x6E65746C616E637AULL ^ static_cast<std::uint64_t>(n));
  Eigen::VectorXd v(n), w(n);
  for (int i = 0; i < n; ++i) v(i) = rng.normal();
  v.normalize();

  double lo_prev = 0.0, hi_prev = 0.0;
  int stable = 0;
  for (int k = 0; k < cap; ++k) {
    basis.col(k) = v;
    op(v, w);
    const double a = v.dot(w);
    alpha.push_back(a);
    w -= a * v;
    if (k > 0) w -= beta[static_cast<std::size_t>(k - 1)] * basis.col(k - 1);
    // Two classical Gram-Schmidt sweeps keep the basis orthogonal to
    // machine precision, which Lanczos needs to avoid ghost eigenvalues.
    for (int pass = 0; pass < 2; ++pass) {
      const auto bk = basis.leftCols(k + 1);
      w.noalias() -= bk * (bk.transpose() * w);
    }
    const double b = w.norm();

    const double lo = tridiag_lambda_min(alpha, beta, 1e-12);
    const double hi = tridiag_lambda_max(alpha, beta, 1e-12);
    const double spread = std::max(hi - lo, 1e-300);
    if (k >= 1 && std::abs(lo - lo_prev) <= rel_tol * spread &&
        std::abs(hi - hi_prev) <= rel_tol * spread)
      ++stable;
    else
      stable = 0;
    lo_prev = lo;
    hi_prev = hi;

    if (b <= 1e-13 * spread || k == n - 1) {
      // Invariant subspace: the tridiagonal section is exact.
      out = {lo, hi};
      return true;
    }
    if (stable >= 3 && k >= 8) {
      out = {lo, hi};
      return true;
    }
    beta.push_back(b);
    v = w / b;
  }
  out = {lo_prev, hi_prev};
  return false;
}

inline std::pair<double, double> dense_extreme_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("extreme_eigenvalues: eigensolver failed");
  const auto& ev = solver.eigenvalues();
  return {ev(0), ev(ev.size() - 1)};
}

}  // namespace detail

// (lambda_min, lambda_max) of a symmetric matrix, accurate to ~1e-8
// relative to the spectral spread.  Small matrices go through the dense
// solver; larger ones through Lanczos, with a dense fallback if the
// iteration ever fails to settle.
inline std::pair<double, double> extreme_eigenvalues_sym(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("extreme_eigenvalues_sym: matrix not square");
  const int n = static_cast<int>(m.rows());
  if (n <= detail::kDenseEigCutoff) return detail::dense_extreme_eigenvalues(m);
  std::pair<double, double> out;
  auto op = [&m](const Eigen::VectorXd& x, Eigen::VectorXd& y) { y.noalias() = m * x; };
  if (detail::lanczos_extreme_pair(op, n, 1e-9, 400, out)) return out;
  return detail::dense_extreme_eigenvalues(m);
}

inline std::pair<double, double> extreme_eigenvalues(const ResidualMatrix& r) {
  if (r.kind != ResidualKind::UndirectedSym)
    throw std::invalid_argument(
        "extreme_eigenvalues: defined for symmetric residuals only");
  return extreme_eigenvalues_sym(r.m);
}

// (s_min, s_max) of an arbitrary (possibly rectangular) matrix.
inline std::pair<double, double> extreme_singular_values_of(const Eigen::MatrixXd& m) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  return {sv(sv.size() - 1), sv(0)};
}

inline std::pair<double, double> extreme_singular_values(const ResidualMatrix& r) {
  return extreme_singular_values_of(r.m);
}

// --- fast path for Erdos-Renyi-centered residuals ---

// Bit-packed undirected adjacency with the centering applied implicitly:
//   A = (G - p (J - I)) / sqrt((n-1) p (1-p)),
// exposed as a matvec for Lanczos.  Sampling writes bits directly, so a
// replicate at n = 2000 costs ~0.5 MB and a matvec streams it from cache;
// this is what makes 10^3-10^4 replicate studies at n >= 1000 feasible.
// Equivalent in law to residual_undirected(sample_graph(ER(p)), ER(p_center))
// but not bit-identical to the generic path (different draw order).
class BitErResidual {
 public:
  BitErResidual(int n, double sample_p, std::uint64_t seed)
      : n_(n), words_per_row_((static_cast<std::size_t>(n) + 63) / 64) {
    if (n < 2) throw std::invalid_argument("BitErResidual: need n >= 2");
    bits_.assign(words_per_row_ * static_cast<std::size_t>(n), 0);
    Rng rng(seed);
    std::int64_t edges = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.bernoulli(sample_p)) {
          set_bit(i, j);
          set_bit(j, i);
          ++edges;
        }
    edges_ = edges;
    set_center(sample_p);
  }

  int n() const { return n_; }
  std::int64_t edge_count() const { return edges_; }

  double density() const {
    return static_cast<double>(edges_) /
           (0.5 * static_cast<double>(n_) * static_cast<double>(n_ - 1));
  }

  // Re-center the residual at a different probability (e.g. a fitted p-hat).
  void set_center(double p_center) {
    detail::check_prob_entry(p_center);
    p_ = p_center;
    scale_ = 1.0 / std::sqrt(static_cast<double>(n_ - 1) * p_ * (1.0 - p_));
  }

  // y = A x with A the centered, scaled residual (zero diagonal).
  void apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
    const double total = x.sum();
    for (int i = 0; i < n_; ++i) {
      double acc = 0.0;
      const std::uint64_t* row = &bits_[static_cast<std::size_t>(i) * words_per_row_];
      for (std::size_t wi = 0; wi < words_per_row_; ++wi) {
        std::uint64_t w = row[wi];
        while (w) {
          const int bit = std::countr_zero(w);
          acc += x(static_cast<int>(wi * 64) + bit);
          w &= w - 1;
        }
      }
      y(i) = (acc - p_ * (total - x(i))) * scale_;
    }
  }

  // Extreme eigenvalue pair via Lanczos (dense fallback is impossible here;
  // a cap overrun reports failure to converge).
  std::pair<double, double> extreme_eigenvalues() const {
    std::pair<double, double> out;
    auto op = [this](const Eigen::VectorXd& x, Eigen::VectorXd& y) { apply(x, y); };
    if (!detail::lanczos_extreme_pair(op, n_, 1e-9, std::min(n_, 600), out))
      throw NonConvergence("BitErResidual: Lanczos failed to settle");
    return out;
  }

  // Materialize the sampled graph (for cross-checks against the dense path).
  Graph to_graph() const {
    Graph g(n_, false);
    for (int i = 0; i < n_; ++i) {
      const std::uint64_t* row = &bits_[static_cast<std::size_t>(i) * words_per_row_];
      for (std::size_t wi = 0; wi < words_per_row_; ++wi) {
        std::uint64_t w = row[wi];
        while (w) {
          const int bit = std::countr_zero(w);
          g.adj(i, static_cast<int>(wi * 64) + bit) = 1.0;
          w &= w - 1;
        }
      }
    }
    return g;
  }

 private:
  void set_bit(int i, int j) {
    bits_[static_cast<std::size_t>(i) * words_per_row_ + static_cast<std::size_t>(j) / 64] |=
        (1ULL << (j % 64));
  }

  int n_;
  std::size_t words_per_row_;
  std::vector<std::uint64_t> bits_;
  std::int64_t edges_ = 0;
  double p_ = 0.5, scale_ = 1.0;
};

}  // namespace netgof
