// Exponential random graph machinery, checked against hand counts, an
// exhaustive-enumeration oracle at n=5, analytic reductions to independent
// Bernoulli edges, and binomial Monte Carlo bounds.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <map>
#include <vector>

#include "netgof/ergm.hpp"
#include "netgof/errors.hpp"
#include "netgof/stats.hpp"

using namespace netgof;

namespace {

const ErgmSpec kFullSpec{{ErgmTerm::Edges, ErgmTerm::Triangles, ErgmTerm::KStar2}};
const ErgmSpec kEdgesOnly{{ErgmTerm::Edges}};

Graph path_graph() {
  Graph g(3, false);
  g.set_edge(0, 1, true);
  g.set_edge(1, 2, true);
  return g;
}

Graph triangle_graph() {
  Graph g(3, false);
  g.set_edge(0, 1, true);
  g.set_edge(1, 2, true);
  g.set_edge(0, 2, true);
  return g;
}

Graph petersen_graph() {
  Graph g(10, false);
  for (int i = 0; i < 5; ++i) {
    g.set_edge(i, (i + 1) % 5, true);
    g.set_edge(i, i + 5, true);
    g.set_edge(5 + i, 5 + (i + 2) % 5, true);
  }
  return g;
}

// Graph on 5 nodes from a 10-bit dyad mask, row-major upper triangle.
Graph graph_from_mask(int mask) {
  Graph g(5, false);
  int k = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j, ++k)
      if (mask & (1 << k)) g.set_edge(i, j, true);
  return g;
}

// Independent recount of (edges, triangles, 2-stars) by direct enumeration.
std::array<int, 3> hand_counts(const Graph& g) {
  const int n = g.n();
  int e = 0, t = 0, s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adj(i, j) != 0.0) ++e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (g.adj(i, j) != 0.0 && g.adj(j, k) != 0.0 && g.adj(i, k) != 0.0) ++t;
  for (int i = 0; i < n; ++i) {
    const int d = static_cast<int>(g.adj.row(i).sum());
    s += d * (d - 1) / 2;
  }
  return {e, t, s};
}

double graph_density(const Graph& g) {
  const double dyads = g.n() * (g.n() - 1) / 2.0;
  return static_cast<double>(g.edge_count()) / dyads;
}

}  // namespace

TEST_CASE("sufficient statistics on hand-counted graphs", "[ergm]") {
  const Eigen::VectorXd k3 = suff_stats(triangle_graph(), kFullSpec);
  REQUIRE(k3(0) == 3.0);
  REQUIRE(k3(1) == 1.0);
  REQUIRE(k3(2) == 3.0);

  const Eigen::VectorXd path = suff_stats(path_graph(), kFullSpec);
  REQUIRE(path(0) == 2.0);
  REQUIRE(path(1) == 0.0);
  REQUIRE(path(2) == 1.0);

  // 3-regular, girth 5: no triangles, 10 * C(3,2) two-stars.
  const Eigen::VectorXd pet = suff_stats(petersen_graph(), kFullSpec);
  REQUIRE(pet(0) == 15.0);
  REQUIRE(pet(1) == 0.0);
  REQUIRE(pet(2) == 30.0);

  // Term order follows the spec's term list.
  const ErgmSpec reversed{{ErgmTerm::KStar2, ErgmTerm::Edges}};
  const Eigen::VectorXd rev = suff_stats(triangle_graph(), reversed);
  REQUIRE(rev(0) == 3.0);
  REQUIRE(rev(1) == 3.0);
}

TEST_CASE("term specs validate their shape", "[ergm]") {
  REQUIRE_THROWS_AS(ErgmSpec{}.validate(), std::invalid_argument);
  REQUIRE_THROWS_AS((ErgmSpec{{ErgmTerm::Edges, ErgmTerm::Edges}}.validate()),
                    std::invalid_argument);
  REQUIRE_THROWS_AS((ErgmParams{kEdgesOnly, Eigen::VectorXd::Zero(2)}.validate()),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(suff_stats(Graph(3, true), kEdgesOnly), std::invalid_argument);
  REQUIRE_THROWS_AS(change_stats(path_graph(), kEdgesOnly, 1, 1), std::invalid_argument);

  REQUIRE(ergm_term_from_string("edges") == ErgmTerm::Edges);
  REQUIRE(ergm_term_from_string("triangles") == ErgmTerm::Triangles);
  REQUIRE(ergm_term_from_string("kstar2") == ErgmTerm::KStar2);
  REQUIRE_THROWS_AS(ergm_term_from_string("stars"), std::invalid_argument);
  REQUIRE(ergm_term_name(ErgmTerm::KStar2) == "kstar2");
}

TEST_CASE("change statistics equal toggle differences on every n=5 graph", "[ergm]") {
  for (int mask = 0; mask < 1024; ++mask) {
    const Graph g = graph_from_mask(mask);
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        Graph with = g, without = g;
        with.set_edge(i, j, true);
        without.set_edge(i, j, false);
        const Eigen::VectorXd delta =
            suff_stats(with, kFullSpec) - suff_stats(without, kFullSpec);
        const Eigen::VectorXd analytic = change_stats(g, kFullSpec, i, j);
        REQUIRE((delta - analytic).cwiseAbs().maxCoeff() < 1e-9);
      }
  }
}

TEST_CASE("sampler reduces to independent edges without dependence terms", "[ergm]") {
  const int n = 30;
  const double dyads = n * (n - 1) / 2.0;

  // theta = 0: the uniform distribution, mean density 1/2.
  {
    const ErgmParams params{kEdgesOnly, Eigen::VectorXd::Zero(1)};
    const std::vector<Graph> draws = sample_ergm_run(params, n, 200, 5001);
    std::vector<double> dens;
    for (const Graph& g : draws) dens.push_back(graph_density(g));
    const double se = std::sqrt(0.25 / dyads / 200.0);
    REQUIRE(std::abs(mean(dens) - 0.5) < 3.0 * se);
  }

  // theta_1 = logit(0.2): independent Bernoulli(0.2) edges.
  {
    ErgmParams params{kEdgesOnly, Eigen::VectorXd::Constant(1, logit(0.2))};
    const std::vector<Graph> draws = sample_ergm_run(params, n, 200, 5002);
    std::vector<double> dens;
    for (const Graph& g : draws) dens.push_back(graph_density(g));
    const double se = std::sqrt(0.2 * 0.8 / dyads / 200.0);
    REQUIRE(std::abs(mean(dens) - 0.2) < 3.0 * se);
  }
}

TEST_CASE("sampler is deterministic in the seed", "[ergm]") {
  const ErgmParams params{kFullSpec, Eigen::VectorXd::Constant(3, -0.1)};
  const Graph a = sample_ergm(params, 12, 909);
  const Graph b = sample_ergm(params, 12, 909);
  REQUIRE(a.adj == b.adj);
  a.validate();
  REQUIRE_THROWS_AS(sample_ergm(params, 1, 1), std::invalid_argument);
}

TEST_CASE("sampled statistics match exhaustive enumeration at n=5", "[ergm]") {
  Eigen::VectorXd theta(3);
  theta << -0.2, 0.3, -0.1;
  const ErgmParams params{kFullSpec, theta};

  // Exact law of (edges, triangles, 2-stars): weight every 10-dyad graph.
  std::map<std::array<int, 3>, double> exact;
  double z = 0.0;
  for (int mask = 0; mask < 1024; ++mask) {
    const std::array<int, 3> h = hand_counts(graph_from_mask(mask));
    const double w = std::exp(theta(0) * h[0] + theta(1) * h[1] + theta(2) * h[2]);
    exact[h] += w;
    z += w;
  }
  for (auto& kv : exact) kv.second /= z;

  const int m = 10000;
  const std::vector<Graph> draws = sample_ergm_run(params, 5, m, 8088, 4, 500, 20);
  std::map<std::array<int, 3>, double> emp;
  for (const Graph& g : draws) emp[hand_counts(g)] += 1.0 / m;

  double tv = 0.0;
  for (const auto& kv : exact) {
    const auto it = emp.find(kv.first);
    tv += std::abs(kv.second - (it == emp.end() ? 0.0 : it->second));
  }
  for (const auto& kv : emp)
    if (exact.find(kv.first) == exact.end()) tv += kv.second;
  tv *= 0.5;
  REQUIRE(tv <= 0.05);
}

TEST_CASE("pseudo-likelihood fit reduces to the density logit", "[ergm]") {
  Graph g(6, false);
  int placed = 0;
  for (int i = 0; i < 6 && placed < 7; ++i)
    for (int j = i + 1; j < 6 && placed < 7; ++j) {
      g.set_edge(i, j, true);
      ++placed;
    }
  const ErgmParams fit = fit_ergm_mple(g, kEdgesOnly);
  REQUIRE(fit.theta(0) == Catch::Approx(logit(7.0 / 15.0)).margin(1e-8));
}

TEST_CASE("pseudo-likelihood fit recovers an independent-edge coefficient", "[ergm]") {
  const int n = 40;
  const double theta_true = logit(0.3);
  const ErgmParams truth{kEdgesOnly, Eigen::VectorXd::Constant(1, theta_true)};
  const Graph g = sample_ergm(truth, n, 606);
  const ErgmParams fit = fit_ergm_mple(g, kEdgesOnly);
  const double m = n * (n - 1) / 2.0;
  const double se = 1.0 / std::sqrt(m * 0.3 * 0.7);
  REQUIRE(std::abs(fit.theta(0) - theta_true) < 3.0 * se);
}

TEST_CASE("pseudo-likelihood fit fails cleanly on separated data", "[ergm]") {
  REQUIRE_THROWS_AS(fit_ergm_mple(Graph(6, false), kEdgesOnly), NonConvergence);
  Graph complete(6, false);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) complete.set_edge(i, j, true);
  REQUIRE_THROWS_AS(fit_ergm_mple(complete, kEdgesOnly), NonConvergence);
  REQUIRE_THROWS_AS(fit_ergm_mple(Graph(4, true), kEdgesOnly), std::invalid_argument);
  REQUIRE_THROWS_AS(fit_ergm_mple(Graph(2, false), kEdgesOnly), std::invalid_argument);
}

TEST_CASE("simulated edge-probability matrix", "[ergm]") {
  const ErgmParams params{kEdgesOnly, Eigen::VectorXd::Zero(1)};

  // B = 1 returns exactly the single draw.
  const ProbMatrix p1 = estimate_p_ergm(params, 8, 1, 404);
  const Graph single = sample_ergm_run(params, 8, 1, 404)[0];
  REQUIRE(p1.p == single.adj);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) REQUIRE((p1.p(i, j) == 0.0 || p1.p(i, j) == 1.0));

  // Large B: binomial concentration around 0.5, entrywise.
  const int B = 2000;
  const int n = 12;
  const std::int64_t sweep = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const ProbMatrix p = estimate_p_ergm(params, n, B, 515, 4, -1, 3 * sweep);
  const double band = 3.0 * std::sqrt(0.25 / B);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      REQUIRE(std::abs(p.p(i, j) - 0.5) < band);
    }
  REQUIRE(p.p == p.p.transpose().eval());

  REQUIRE_THROWS_AS(estimate_p_ergm(params, 8, 0, 1), std::invalid_argument);
}
