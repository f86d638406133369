#pragma once

// Core network data types: binary graphs, edge-probability matrices,
// aggregated relational data (ARD), and community labelings.
//
// Storage is dense throughout.  The statistics this library computes are
// spectral and the fitted probability matrices are dense anyway, so sparse
// adjacency would buy nothing at the network sizes of interest (n up to a
// few thousand).

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "netgof/rng.hpp"

namespace netgof {

// Simple binary graph, no self loops.  Undirected graphs keep a symmetric
// adjacency matrix.
struct Graph {
  Eigen::MatrixXd adj;  // entries in {0,1}, zero diagonal
  bool directed = false;

  Graph() = default;
  Graph(int n, bool directed_) : adj(Eigen::MatrixXd::Zero(n, n)), directed(directed_) {
    if (n < 1) throw std::invalid_argument("Graph: need at least one node");
  }

  int n() const { return static_cast<int>(adj.rows()); }

  bool has_edge(int i, int j) const { return adj(i, j) != 0.0; }

  void set_edge(int i, int j, bool present) {
    if (i == j) throw std::invalid_argument("Graph::set_edge: self loops not allowed");
    adj(i, j) = present ? 1.0 : 0.0;
    if (!directed) adj(j, i) = adj(i, j);
  }

  // Number of edges: unordered pairs if undirected, ordered pairs otherwise.
  std::int64_t edge_count() const {
    const double s = adj.sum();
    return static_cast<std::int64_t>(directed ? s : s / 2.0 + 0.5);
  }

  void validate() const {
    if (adj.rows() != adj.cols()) throw std::invalid_argument("Graph: adjacency not square");
    for (int i = 0; i < n(); ++i) {
      if (adj(i, i) != 0.0) throw std::invalid_argument("Graph: nonzero diagonal");
      for (int j = 0; j < n(); ++j) {
        if (adj(i, j) != 0.0 && adj(i, j) != 1.0)
          throw std::invalid_argument("Graph: entries must be 0 or 1");
        if (!directed && adj(i, j) != adj(j, i))
          throw std::invalid_argument("Graph: undirected adjacency must be symmetric");
      }
    }
  }
};

// Edge probabilities under a (fitted or true) model.  Diagonal entries are
// kept at zero by convention: self loops never occur.
struct ProbMatrix {
  Eigen::MatrixXd p;
  bool directed = false;

  ProbMatrix() = default;
  ProbMatrix(Eigen::MatrixXd p_, bool directed_) : p(std::move(p_)), directed(directed_) {
    validate();
  }

  int n() const { return static_cast<int>(p.rows()); }

  void validate() const {
    if (p.rows() != p.cols()) throw std::invalid_argument("ProbMatrix: not square");
    for (int i = 0; i < p.rows(); ++i)
      for (int j = 0; j < p.cols(); ++j) {
        if (!(p(i, j) >= 0.0) || !(p(i, j) <= 1.0))
          throw std::invalid_argument("ProbMatrix: entries must lie in [0,1]");
        if (!directed && p(i, j) != p(j, i))
          throw std::invalid_argument("ProbMatrix: undirected matrix must be symmetric");
      }
  }
};

// Aggregated relational data: counts(i, j) is how many members of group j
// respondent i reports ties to.  group_sizes holds the population size of
// each group; respondent_groups optionally records each respondent's own
// group membership.
struct ArdMatrix {
  Eigen::MatrixXd counts;           // m x K, nonnegative integers
  std::vector<double> group_sizes;  // length K
  std::optional<std::vector<int>> respondent_groups;

  int respondents() const { return static_cast<int>(counts.rows()); }
  int groups() const { return static_cast<int>(counts.cols()); }

  void validate() const {
    if (static_cast<std::size_t>(counts.cols()) != group_sizes.size())
      throw std::invalid_argument("ArdMatrix: one size per group required");
    for (int j = 0; j < groups(); ++j)
      if (!(group_sizes[static_cast<std::size_t>(j)] >= 1.0))
        throw std::invalid_argument("ArdMatrix: group sizes must be >= 1");
    for (int i = 0; i < respondents(); ++i)
      for (int j = 0; j < groups(); ++j) {
        const double y = counts(i, j);
        if (y < 0.0 || y != std::floor(y) || y > group_sizes[static_cast<std::size_t>(j)])
          throw std::invalid_argument(
              "ArdMatrix: counts must be integers in [0, group size]");
      }
    if (respondent_groups && static_cast<int>(respondent_groups->size()) != respondents())
      throw std::invalid_argument("ArdMatrix: one group per respondent required");
  }
};

// Community assignment: labels[i] in {0, ..., K-1}.
struct NodeLabeling {
  std::vector<int> labels;

  NodeLabeling() = default;
  explicit NodeLabeling(std::vector<int> l) : labels(std::move(l)) {
    for (int v : labels)
      if (v < 0) throw std::invalid_argument("NodeLabeling: labels must be nonnegative");
  }

  int n() const { return static_cast<int>(labels.size()); }

  int num_groups() const {
    int k = 0;
    for (int v : labels) k = std::max(k, v + 1);
    return k;
  }
};

// Draw a graph with independent edges: Bernoulli(p_ij) per dyad.  Undirected
// graphs sample each unordered pair once.  The dyad order is fixed
// (row-major upper triangle), so a seed fully determines the draw.
inline Graph sample_graph(const ProbMatrix& p, std::uint64_t seed) {
  const int n = p.n();
  Graph g(n, p.directed);
  Rng rng(seed);
  if (p.directed) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && rng.bernoulli(p.p(i, j))) g.adj(i, j) = 1.0;
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.bernoulli(p.p(i, j))) g.adj(i, j) = g.adj(j, i) = 1.0;
  }
  return g;
}

// Aggregate a complete graph into ARD: counts(i, j) = number of ties from
// respondents[i] into groups[j].  A respondent inside its own group is never
// counted as a tie to itself (no self loops exist).
inline ArdMatrix extract_ard(const Graph& g, const std::vector<std::vector<int>>& groups,
                             const std::vector<int>& respondents) {
  if (groups.empty() || respondents.empty())
    throw std::invalid_argument("extract_ard: need at least one group and one respondent");
  const int n = g.n();
  ArdMatrix ard;
  ard.counts = Eigen::MatrixXd::Zero(static_cast<int>(respondents.size()),
                                     static_cast<int>(groups.size()));
  ard.group_sizes.resize(groups.size());
  for (std::size_t j = 0; j < groups.size(); ++j) {
    if (groups[j].empty()) throw std::invalid_argument("extract_ard: empty group");
    for (int v : groups[j])
      if (v < 0 || v >= n) throw std::out_of_range("extract_ard: group member out of range");
    ard.group_sizes[j] = static_cast<double>(groups[j].size());
  }
  for (std::size_t i = 0; i < respondents.size(); ++i) {
    const int r = respondents[i];
    if (r < 0 || r >= n) throw std::out_of_range("extract_ard: respondent out of range");
    for (std::size_t j = 0; j < groups.size(); ++j) {
      double y = 0.0;
      for (int v : groups[j]) y += g.adj(r, v);
      ard.counts(static_cast<int>(i), static_cast<int>(j)) = y;
    }
  }
  return ard;
}

inline Eigen::VectorXd degrees(const Graph& g) {
  if (g.directed) throw std::invalid_argument("degrees: undirected graphs only");
  return g.adj.rowwise().sum();
}

inline Eigen::VectorXd out_degrees(const Graph& g) { return g.adj.rowwise().sum(); }
inline Eigen::VectorXd in_degrees(const Graph& g) { return g.adj.colwise().sum(); }

}  // namespace netgof
