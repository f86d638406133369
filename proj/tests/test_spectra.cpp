// Residual matrices and extreme eigen/singular values, checked against
// independent oracles: direct arithmetic, Monte Carlo moments, bisection on
// the characteristic polynomial, and Gram-matrix eigenvalues.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "netgof/errors.hpp"
#include "netgof/spectra.hpp"
#include "netgof/stats.hpp"
#include "netgof/tw1.hpp"

using namespace netgof;

namespace {

ProbMatrix constant_prob(int n, double p, bool directed = false) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(n, n, p);
  m.diagonal().setZero();
  return ProbMatrix(std::move(m), directed);
}

ProbMatrix random_prob(int n, std::uint64_t seed, bool directed = false) {
  Rng rng(seed);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = directed ? 0 : i + 1; j < n; ++j) {
      if (i == j) continue;
      const double p = rng.uniform(0.1, 0.9);
      m(i, j) = p;
      if (!directed) m(j, i) = p;
    }
  return ProbMatrix(std::move(m), directed);
}

// Eigenvalue oracle for small symmetric matrices: scan det(lambda I - A)
// for sign changes over a Gershgorin-type bracket and bisect each root.
// Uses only LU determinants, independently of any eigensolver.
std::vector<double> charpoly_roots(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  auto poly = [&](double lam) {
    Eigen::MatrixXd m = -a;
    m.diagonal().array() += lam;
    return Eigen::FullPivLU<Eigen::MatrixXd>(m).determinant();
  };
  const double r = a.cwiseAbs().rowwise().sum().maxCoeff() + 1.0;
  const int steps = 8000;
  std::vector<double> roots;
  double prev_x = -r, prev_f = poly(-r);
  for (int k = 1; k <= steps; ++k) {
    const double x = -r + 2.0 * r * k / steps;
    const double f = poly(x);
    if ((prev_f < 0.0 && f > 0.0) || (prev_f > 0.0 && f < 0.0)) {
      double lo = prev_x, hi = x, flo = prev_f;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = poly(mid);
        if ((flo < 0.0) == (fm < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_x = x;
    prev_f = f;
  }
  REQUIRE(static_cast<int>(roots.size()) == n);  // all roots simple and found
  return roots;
}

Eigen::MatrixXd random_symmetric(int n, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) a(i, j) = a(j, i) = rng.uniform(-2.0, 2.0);
  return a;
}

}  // namespace

TEST_CASE("undirected residual arithmetic", "[spectra]") {
  Graph g(3, false);
  g.set_edge(0, 1, true);
  const ResidualMatrix r = residual_undirected(g, constant_prob(3, 0.5));
  // (1 - 0.5)/sqrt(2 * 0.25) = 1/sqrt(2).
  REQUIRE(r.m(0, 1) == Catch::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  REQUIRE(r.m(1, 0) == r.m(0, 1));
  // Absent edge: (0 - 0.5)/sqrt(0.5) = -1/sqrt(2).
  REQUIRE(r.m(0, 2) == Catch::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));
  REQUIRE(r.m.diagonal().isZero());
  REQUIRE(r.kind == ResidualKind::UndirectedSym);
}

TEST_CASE("residuals reject degenerate probabilities", "[spectra]") {
  Graph g(3, false);
  REQUIRE_THROWS_AS(residual_undirected(g, constant_prob(3, 1.0)), DegenerateProbability);
  REQUIRE_THROWS_AS(residual_undirected(g, constant_prob(3, 0.0)), DegenerateProbability);
  REQUIRE_THROWS_AS(residual_undirected(g, constant_prob(3, 1.0 - 1e-9)),
                    DegenerateProbability);
  REQUIRE_THROWS_AS(residual_undirected(g, constant_prob(3, 1e-9)), DegenerateProbability);
  REQUIRE_NOTHROW(residual_undirected(g, constant_prob(3, 0.5)));

  Graph d(3, true);
  REQUIRE_THROWS_AS(residual_directed(d, constant_prob(3, 1.0, true)),
                    DegenerateProbability);

  ArdMatrix y;
  y.counts = Eigen::MatrixXd::Zero(2, 2);
  y.group_sizes = {4.0, 4.0};
  REQUIRE_THROWS_AS(residual_ard(y, 1.0), DegenerateProbability);
  REQUIRE_THROWS_AS(residual_ard(y, 0.0), DegenerateProbability);
}

TEST_CASE("residual kind and shape mismatches are errors", "[spectra]") {
  Graph d(3, true);
  Graph u(3, false);
  REQUIRE_THROWS_AS(residual_undirected(d, constant_prob(3, 0.5)), std::invalid_argument);
  REQUIRE_THROWS_AS(residual_directed(u, constant_prob(3, 0.5, true)),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(residual_undirected(u, constant_prob(4, 0.5)), std::invalid_argument);
}

TEST_CASE("undirected residual entries have mean zero under the true model", "[spectra]") {
  const int n = 6;
  const ProbMatrix p = random_prob(n, 99);
  const int reps = 10000;
  double acc01 = 0.0;
  for (int r = 0; r < reps; ++r) {
    const Graph g = sample_graph(p, derive_seed(41, static_cast<std::uint64_t>(r)));
    acc01 += residual_undirected(g, p).m(0, 1);
  }
  // Var(entry) = 1/(n-1); 4 standard errors of the replicate mean.
  const double se = std::sqrt(1.0 / (n - 1.0) / reps);
  REQUIRE(std::abs(acc01 / reps) < 4.0 * se);
}

TEST_CASE("directed residual arithmetic and asymmetry", "[spectra]") {
  Graph g(3, true);
  g.set_edge(0, 1, true);  // G_01 = 1, G_10 = 0
  const ResidualMatrix r = residual_directed(g, constant_prob(3, 0.5, true));
  REQUIRE(r.m(0, 1) == Catch::Approx(1.0).epsilon(1e-14));
  REQUIRE(r.m(1, 0) == Catch::Approx(-1.0).epsilon(1e-14));
  REQUIRE(r.m(0, 1) != r.m(1, 0));
  REQUIRE(r.m.diagonal().isZero());
  REQUIRE(r.kind == ResidualKind::Directed);
}

TEST_CASE("directed residual entries have unit variance under the true model",
          "[spectra]") {
  const int n = 5;
  const ProbMatrix p = random_prob(n, 7, true);
  const int reps = 10000;
  std::vector<double> entry01(reps);
  for (int r = 0; r < reps; ++r) {
    const Graph g = sample_graph(p, derive_seed(55, static_cast<std::uint64_t>(r)));
    entry01[static_cast<std::size_t>(r)] = residual_directed(g, p).m(0, 1);
  }
  REQUIRE(std::abs(mean(entry01)) < 0.05);
  const double s = stddev(entry01);
  REQUIRE(std::abs(s * s - 1.0) < 0.05);
}

TEST_CASE("ard residual arithmetic", "[spectra]") {
  ArdMatrix y;
  y.counts = Eigen::MatrixXd(1, 1);
  y.counts << 3.0;
  y.group_sizes = {10.0};
  const ResidualMatrix r = residual_ard(y, 0.2);
  // (3 - 2)/sqrt(10 * 0.2 * 0.8) = 1/sqrt(1.6).
  REQUIRE(r.m(0, 0) == Catch::Approx(1.0 / std::sqrt(1.6)).epsilon(1e-14));
  REQUIRE(r.kind == ResidualKind::ArdRect);

  // Counts exactly at n_j * p-hat standardize to the zero matrix.
  ArdMatrix flat;
  flat.counts = Eigen::MatrixXd::Constant(3, 2, 2.0);
  flat.group_sizes = {10.0, 10.0};
  REQUIRE(residual_ard(flat, 0.2).m.isZero(1e-14));
}

TEST_CASE("ard residual entries are standardized under a common p", "[spectra]") {
  const double p = 0.3;
  const std::vector<double> sizes{8.0, 15.0, 30.0};
  const int reps = 10000;
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(reps) * 12);
  for (int r = 0; r < reps; ++r) {
    Rng rng(derive_seed(606, static_cast<std::uint64_t>(r)));
    ArdMatrix y;
    y.counts = Eigen::MatrixXd(4, 3);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 3; ++j) {
        int c = 0;
        for (int k = 0; k < static_cast<int>(sizes[static_cast<std::size_t>(j)]); ++k)
          if (rng.bernoulli(p)) ++c;
        y.counts(i, j) = c;
      }
    y.group_sizes = sizes;
    const ResidualMatrix res = residual_ard(y, p);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 3; ++j) vals.push_back(res.m(i, j));
  }
  REQUIRE(std::abs(mean(vals)) < 0.01);
  const double s = stddev(vals);
  REQUIRE(std::abs(s * s - 1.0) < 0.05);
}

TEST_CASE("extreme eigenvalues of tiny fixed matrices", "[spectra]") {
  ResidualMatrix r;
  r.kind = ResidualKind::UndirectedSym;
  r.m = Eigen::MatrixXd(2, 2);
  r.m << 0, 1, 1, 0;
  const auto [lo, hi] = extreme_eigenvalues(r);
  REQUIRE(lo == Catch::Approx(-1.0).margin(1e-12));
  REQUIRE(hi == Catch::Approx(1.0).margin(1e-12));

  r.m = Eigen::MatrixXd::Zero(3, 3);
  const auto [zlo, zhi] = extreme_eigenvalues(r);
  REQUIRE(zlo == 0.0);
  REQUIRE(zhi == 0.0);

  r.kind = ResidualKind::Directed;
  REQUIRE_THROWS_AS(extreme_eigenvalues(r), std::invalid_argument);
  REQUIRE_THROWS_AS(extreme_eigenvalues_sym(Eigen::MatrixXd::Zero(2, 3)),
                    std::invalid_argument);
}

TEST_CASE("extreme eigenvalues match characteristic-polynomial bisection", "[spectra]") {
  for (std::uint64_t seed : {1, 2, 3}) {
    const Eigen::MatrixXd a = random_symmetric(4, seed);
    const auto roots = charpoly_roots(a);
    const auto [lo, hi] = extreme_eigenvalues_sym(a);
    REQUIRE(lo == Catch::Approx(roots.front()).margin(1e-8));
    REQUIRE(hi == Catch::Approx(roots.back()).margin(1e-8));
  }
}

TEST_CASE("extreme singular values of tiny fixed matrices", "[spectra]") {
  Eigen::MatrixXd m(2, 2);
  m << 0, 1, 0, 0;
  const auto [lo, hi] = extreme_singular_values_of(m);
  REQUIRE(lo == Catch::Approx(0.0).margin(1e-14));
  REQUIRE(hi == Catch::Approx(1.0).margin(1e-14));

  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = -2.0;
  const auto [dlo, dhi] = extreme_singular_values_of(d);
  REQUIRE(dlo == Catch::Approx(2.0).margin(1e-14));
  REQUIRE(dhi == Catch::Approx(3.0).margin(1e-14));
}

TEST_CASE("rectangular singular values match the Gram-matrix oracle", "[spectra]") {
  Rng rng(404);
  Eigen::MatrixXd m(3, 5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 5; ++j) m(i, j) = rng.uniform(-1.0, 1.0);
  const Eigen::MatrixXd gram = m * m.transpose();
  const auto roots = charpoly_roots(gram);  // 3 eigenvalues of M M^T
  const auto [smin, smax] = extreme_singular_values_of(m);
  REQUIRE(smin == Catch::Approx(std::sqrt(std::max(0.0, roots.front()))).margin(1e-8));
  REQUIRE(smax == Catch::Approx(std::sqrt(roots.back())).margin(1e-8));

  ResidualMatrix r;
  r.kind = ResidualKind::ArdRect;
  r.m = m;
  REQUIRE(extreme_singular_values(r) == extreme_singular_values_of(m));
}

TEST_CASE("symmetric singular values are absolute eigenvalues", "[spectra]") {
  const Eigen::MatrixXd a = random_symmetric(6, 17);
  const auto [lmin, lmax] = extreme_eigenvalues_sym(a);
  const auto [smin, smax] = extreme_singular_values_of(a);
  REQUIRE(smax == Catch::Approx(std::max(std::abs(lmin), std::abs(lmax))).margin(1e-10));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  REQUIRE(smin ==
          Catch::Approx(es.eigenvalues().cwiseAbs().minCoeff()).margin(1e-10));
}

TEST_CASE("iterative path agrees with the dense solver above the cutoff", "[spectra]") {
  const int n = 600;  // above the dense cutoff, so extreme_eigenvalues_sym iterates
  Rng rng(31);
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) a(i, j) = a(j, i) = rng.uniform(-1.0, 1.0) / std::sqrt(n);
  a.diagonal().setZero();
  const auto [ilo, ihi] = extreme_eigenvalues_sym(a);
  const auto [dlo, dhi] = detail::dense_extreme_eigenvalues(a);
  const double spread = dhi - dlo;
  REQUIRE(std::abs(ilo - dlo) < 1e-8 * spread);
  REQUIRE(std::abs(ihi - dhi) < 1e-8 * spread);
}

TEST_CASE("row variances of the undirected residual sum to one", "[spectra]") {
  const int n = 9;
  const ProbMatrix p = random_prob(n, 12);
  Graph complete(n, false);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) complete.set_edge(i, j, true);
  const Graph empty(n, false);
  // The scaling factor per entry is the residual gap between edge present
  // and absent: s_ij = 1/sqrt((n-1) p_ij (1-p_ij)).
  const Eigen::MatrixXd s =
      residual_undirected(complete, p).m - residual_undirected(empty, p).m;
  for (int i = 0; i < n; ++i) {
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      total += s(i, j) * s(i, j) * p.p(i, j) * (1.0 - p.p(i, j));
    }
    REQUIRE(total == Catch::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("bit-packed residual agrees with the dense pipeline", "[spectra]") {
  const int n = 300;
  const double p = 0.4;
  const BitErResidual ber(n, p, 2718);
  const Graph g = ber.to_graph();
  REQUIRE(g.edge_count() == ber.edge_count());
  REQUIRE(ber.density() == Catch::Approx(g.edge_count() / (0.5 * n * (n - 1))));
  g.validate();

  const auto [blo, bhi] = ber.extreme_eigenvalues();
  const auto [dlo, dhi] = extreme_eigenvalues(residual_undirected(g, constant_prob(n, p)));
  REQUIRE(std::abs(blo - dlo) < 1e-7);
  REQUIRE(std::abs(bhi - dhi) < 1e-7);
}

TEST_CASE("scaled largest residual eigenvalue approaches its reference law",
          "[spectra]") {
  const int n = 1000;
  const int reps = 2000;
  // p is chosen where the centered Bernoulli's fourth cumulant vanishes
  // (1 - 6p(1-p) = 0), removing the leading finite-n shift of the spectral
  // edge so the n = 1000 sample sits close to the limiting law.
  const double p = 0.5 - std::sqrt(3.0) / 6.0;
  const double scale = std::pow(static_cast<double>(n), 2.0 / 3.0);
  std::vector<double> stats(reps);
  for (int r = 0; r < reps; ++r) {
    const BitErResidual ber(n, p, derive_seed(4242, static_cast<std::uint64_t>(r)));
    stats[static_cast<std::size_t>(r)] = scale * (ber.extreme_eigenvalues().second - 2.0);
  }
  const Tw1Table& t = Tw1Table::embedded();
  const double ks = ks_distance(stats, [&](double x) {
    return t.cdf(std::clamp(x, t.grid().front(), t.grid().back()));
  });
  REQUIRE(ks <= 0.08);
}
