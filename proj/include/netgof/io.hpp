#pragma once

// File formats: whitespace/comma separated edge lists, ARD count tables as
// CSV, and JSON serialization for every core type.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "netgof/graph.hpp"

namespace netgof {

using json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Comment headers written by write_edge_list; ignored when absent.
struct EdgeListHints {
  std::optional<int> nodes;
  std::optional<bool> directed;
};

inline void parse_hint(const std::string& line, EdgeListHints& hints) {
  const auto fields = split_fields(line.substr(1));
  for (const auto& f : fields) {
    const auto eq = f.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = f.substr(0, eq);
    const std::string val = f.substr(eq + 1);
    if (key == "nodes") hints.nodes = std::stoi(val);
    if (key == "directed") hints.directed = (val == "1" || val == "true");
  }
}

}  // namespace detail

// Load a graph from a text edge list: one "u v" (or "u,v") pair per line,
// '#' lines ignored apart from optional "nodes="/"directed=" hints.
// Indexing is auto-detected: if the smallest index seen is >= 1 the file is
// treated as 1-indexed.  Self loops are dropped (counted through
// `dropped_self_loops` when given); duplicate edges collapse.
inline Graph load_edge_list(const std::string& path, std::optional<int> n = std::nullopt,
                            std::optional<bool> directed = std::nullopt,
                            int* dropped_self_loops = nullptr) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_edge_list: cannot open " + path);
  detail::EdgeListHints hints;
  std::vector<std::pair<long, long>> pairs;
  long min_idx = std::numeric_limits<long>::max();
  long max_idx = -1;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      detail::parse_hint(line, hints);
      continue;
    }
    const auto fields = detail::split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() != 2)
      throw std::runtime_error("load_edge_list: line " + std::to_string(lineno) +
                               ": expected two fields");
    long u, v;
    try {
      u = std::stol(fields[0]);
      v = std::stol(fields[1]);
    } catch (const std::exception&) {
      throw std::runtime_error("load_edge_list: line " + std::to_string(lineno) +
                               ": not an integer pair");
    }
    if (u < 0 || v < 0)
      throw std::runtime_error("load_edge_list: negative node index");
    pairs.emplace_back(u, v);
    min_idx = std::min({min_idx, u, v});
    max_idx = std::max({max_idx, u, v});
  }

  // With a "nodes=" hint the file was written by this library and is
  // 0-indexed by construction; otherwise detect by the minimum index.
  const long shift = (!hints.nodes && !pairs.empty() && min_idx >= 1) ? 1 : 0;
  int nodes;
  if (n)
    nodes = *n;
  else if (hints.nodes)
    nodes = *hints.nodes;
  else if (pairs.empty())
    throw std::runtime_error("load_edge_list: empty edge list and no node count given");
  else
    nodes = static_cast<int>(max_idx - shift + 1);

  const bool dir = directed ? *directed : hints.directed.value_or(false);
  Graph g(nodes, dir);
  int dropped = 0;
  for (auto [u, v] : pairs) {
    const long a = u - shift, b = v - shift;
    if (a >= nodes || b >= nodes)
      throw std::out_of_range("load_edge_list: node index " +
                              std::to_string(std::max(u, v)) + " outside 0.." +
                              std::to_string(nodes - 1));
    if (a == b) {
      ++dropped;
      continue;
    }
    g.set_edge(static_cast<int>(a), static_cast<int>(b), true);
  }
  if (dropped_self_loops) *dropped_self_loops = dropped;
  return g;
}

// Write a 0-indexed edge list with hints so that a reload reproduces the
// graph exactly (including isolated nodes and directedness).
inline void write_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_edge_list: cannot open " + path);
  out << "# nodes=" << g.n() << " directed=" << (g.directed ? 1 : 0) << "\n";
  const int n = g.n();
  for (int i = 0; i < n; ++i) {
    const int j0 = g.directed ? 0 : i + 1;
    for (int j = j0; j < n; ++j)
      if (j != i && g.adj(i, j) != 0.0) out << i << " " << j << "\n";
  }
}

// ARD CSV: header row of "name:size" cells (optionally preceded by a
// "respondent_group" column), then one row of counts per respondent.
inline ArdMatrix load_ard_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_ard_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("load_ard_csv: empty file");
  auto header = detail::split_fields(line);
  if (header.empty()) throw std::runtime_error("load_ard_csv: empty header");
  bool with_groups = header[0] == "respondent_group";
  if (with_groups) header.erase(header.begin());

  ArdMatrix ard;
  for (const auto& cell : header) {
    const auto colon = cell.rfind(':');
    if (colon == std::string::npos)
      throw std::runtime_error("load_ard_csv: header cell '" + cell +
                               "' must be name:size");
    ard.group_sizes.push_back(std::stod(cell.substr(colon + 1)));
  }
  const int k = static_cast<int>(ard.group_sizes.size());
  std::vector<std::vector<double>> rows;
  std::vector<int> rgroups;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = detail::split_fields(line);
    if (static_cast<int>(fields.size()) != k + (with_groups ? 1 : 0))
      throw std::runtime_error("load_ard_csv: line " + std::to_string(lineno) +
                               ": wrong field count");
    std::size_t off = 0;
    if (with_groups) {
      rgroups.push_back(std::stoi(fields[0]));
      off = 1;
    }
    std::vector<double> row(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) row[static_cast<std::size_t>(j)] = std::stod(fields[off + j]);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("load_ard_csv: no respondent rows");
  ard.counts = Eigen::MatrixXd(static_cast<int>(rows.size()), k);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < k; ++j) ard.counts(static_cast<int>(i), j) = rows[i][static_cast<std::size_t>(j)];
  if (with_groups) ard.respondent_groups = std::move(rgroups);
  ard.validate();
  return ard;
}

inline void save_ard_csv(const ArdMatrix& ard, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_ard_csv: cannot open " + path);
  const bool with_groups = ard.respondent_groups.has_value();
  if (with_groups) out << "respondent_group,";
  for (int j = 0; j < ard.groups(); ++j) {
    out << "g" << j << ":" << ard.group_sizes[static_cast<std::size_t>(j)];
    out << (j + 1 < ard.groups() ? "," : "\n");
  }
  for (int i = 0; i < ard.respondents(); ++i) {
    if (with_groups) out << (*ard.respondent_groups)[static_cast<std::size_t>(i)] << ",";
    for (int j = 0; j < ard.groups(); ++j) {
      out << ard.counts(i, j);
      out << (j + 1 < ard.groups() ? "," : "\n");
    }
  }
}

// --- JSON serialization ---

inline json to_json(const Graph& g) {
  json edges = json::array();
  const int n = g.n();
  for (int i = 0; i < n; ++i) {
    const int j0 = g.directed ? 0 : i + 1;
    for (int j = j0; j < n; ++j)
      if (j != i && g.adj(i, j) != 0.0) edges.push_back({i, j});
  }
  return json{{"nodes", g.n()}, {"directed", g.directed}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const json& j) {
  Graph g(j.at("nodes").get<int>(), j.at("directed").get<bool>());
  for (const auto& e : j.at("edges"))
    g.set_edge(e.at(0).get<int>(), e.at(1).get<int>(), true);
  return g;
}

inline json to_json(const ProbMatrix& p) {
  json rows = json::array();
  for (int i = 0; i < p.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < p.n(); ++j) row.push_back(p.p(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"directed", p.directed}, {"p", std::move(rows)}};
}

inline ProbMatrix prob_matrix_from_json(const json& j) {
  const auto& rows = j.at("p");
  const int n = static_cast<int>(rows.size());
  Eigen::MatrixXd p(n, n);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < n; ++c) p(i, c) = rows.at(i).at(c).get<double>();
  return ProbMatrix(std::move(p), j.at("directed").get<bool>());
}

inline json to_json(const ArdMatrix& ard) {
  json rows = json::array();
  for (int i = 0; i < ard.respondents(); ++i) {
    json row = json::array();
    for (int j = 0; j < ard.groups(); ++j) row.push_back(ard.counts(i, j));
    rows.push_back(std::move(row));
  }
  json out{{"group_sizes", ard.group_sizes}, {"counts", std::move(rows)}};
  if (ard.respondent_groups) out["respondent_groups"] = *ard.respondent_groups;
  return out;
}

inline ArdMatrix ard_from_json(const json& j) {
  ArdMatrix ard;
  ard.group_sizes = j.at("group_sizes").get<std::vector<double>>();
  const auto& rows = j.at("counts");
  const int m = static_cast<int>(rows.size());
  const int k = static_cast<int>(ard.group_sizes.size());
  ard.counts = Eigen::MatrixXd(m, k);
  for (int i = 0; i < m; ++i)
    for (int c = 0; c < k; ++c) ard.counts(i, c) = rows.at(i).at(c).get<double>();
  if (j.contains("respondent_groups"))
    ard.respondent_groups = j.at("respondent_groups").get<std::vector<int>>();
  ard.validate();
  return ard;
}

inline json to_json(const NodeLabeling& l) { return json{{"labels", l.labels}}; }

inline NodeLabeling labeling_from_json(const json& j) {
  return NodeLabeling(j.at("labels").get<std::vector<int>>());
}

// Community labels as a one-column CSV (optional "label" header).
inline NodeLabeling load_labels_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_labels_csv: cannot open " + path);
  std::vector<int> labels;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto fields = detail::split_fields(line);
    if (fields.empty()) continue;
    if (fields[0] == "label") continue;
    labels.push_back(std::stoi(fields[0]));
  }
  if (labels.empty()) throw std::runtime_error("load_labels_csv: no labels found");
  return NodeLabeling(std::move(labels));
}

}  // namespace netgof
