#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hdepth/errors.hpp"

namespace hdepth {

/// Simple undirected graph with a fixed 0-based vertex ordering.
/// Edges are stored canonically: u < v, lexicographically sorted, no
/// duplicates. The edge set is the generator list of the edge ideal, so
/// the ordering is part of the contract.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  static Graph from_edges(int n, std::vector<std::pair<int, int>> raw) {
    if (n < 0) throw ParameterError("graph: vertex count must be nonnegative");
    Graph g;
    g.n = n;
    g.edges.reserve(raw.size());
    std::size_t idx = 0;
    for (auto [u, v] : raw) {
      const std::string where = "edges[" + std::to_string(idx) + "]";
      if (u < 0 || u >= n || v < 0 || v >= n) {
        throw ParameterError(where + ": endpoint out of range [0," + std::to_string(n) +
                             "): (" + std::to_string(u) + "," + std::to_string(v) + ")");
      }
      if (u == v) throw ParameterError(where + ": loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
      g.edges.emplace_back(u, v);
      ++idx;
    }
    std::sort(g.edges.begin(), g.edges.end());
    const auto dup = std::adjacent_find(g.edges.begin(), g.edges.end());
    if (dup != g.edges.end()) {
      throw ParameterError("duplicate edge (" + std::to_string(dup->first) + "," +
                           std::to_string(dup->second) + ")");
    }
    return g;
  }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
  }

  bool operator==(const Graph&) const = default;
};

// ---------------------------------------------------------------------------
// Raw family constructors. Vertex ordering conventions (normative):
//   path/cycle : x_i -> i-1, edges (i-1,i) and, for the cycle, (n-1,0)
//   star       : leaves x_i -> i-1, center y -> n
//   gen. star  : center y -> 0, branch i occupies the next n_i indices in
//                branch order; edges y-x_{1,i} and the branch chain
//   dbl broom  : x_1..x_{n1} -> 0..n1-1, y_1..y_n -> n1..n1+n-1,
//                z_1..z_{n2} -> n1+n..n1+n+n2-1; edges x_i-y_1, the
//                y-chain, y_n-z_j
// ---------------------------------------------------------------------------

inline Graph path_graph(int n) {
  if (n < 2) throw ParameterError("path: requires n >= 2, got " + std::to_string(n));
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(e));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw ParameterError("cycle: requires n >= 3, got " + std::to_string(n));
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 1, 0);
  return Graph::from_edges(n, std::move(e));
}

inline Graph star_graph(int n) {
  if (n < 1) throw ParameterError("star: requires n >= 1, got " + std::to_string(n));
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, n);
  return Graph::from_edges(n + 1, std::move(e));
}

inline Graph generalized_star_graph(const std::vector<int>& branches) {
  if (branches.empty()) throw ParameterError("generalized star: requires k >= 1 branches");
  for (int b : branches) {
    if (b < 1) throw ParameterError("generalized star: branch lengths must be >= 1, got " + std::to_string(b));
  }
  const int total = std::accumulate(branches.begin(), branches.end(), 0);
  std::vector<std::pair<int, int>> e;
  int next = 1;
  for (int b : branches) {
    e.emplace_back(0, next);
    for (int j = 0; j + 1 < b; ++j) e.emplace_back(next + j, next + j + 1);
    next += b;
  }
  return Graph::from_edges(total + 1, std::move(e));
}

/// Broom-shaped tree: n1 pendants on one end of an n-vertex chain, n2 on
/// the other. Accepts n1, n2 >= 1 so degenerate brooms (used by the
/// double-star alpha formulas) can be built; the FamilySpec surface is
/// stricter, see below.
inline Graph double_broom_graph(int n1, int n, int n2) {
  if (n1 < 1 || n2 < 1) throw ParameterError("double broom: requires n1, n2 >= 1");
  if (n < 2) throw ParameterError("double broom: requires chain length n >= 2, got " + std::to_string(n));
  std::vector<std::pair<int, int>> e;
  const int y0 = n1;
  for (int i = 0; i < n1; ++i) e.emplace_back(i, y0);
  for (int j = 0; j + 1 < n; ++j) e.emplace_back(y0 + j, y0 + j + 1);
  const int yn = y0 + n - 1;
  for (int j = 0; j < n2; ++j) e.emplace_back(yn, yn + 1 + j);
  return Graph::from_edges(n1 + n + n2, std::move(e));
}

// ---------------------------------------------------------------------------
// FamilySpec: the parametric families exposed by the CLI, with the bounds
// under which each family is defined.
// ---------------------------------------------------------------------------

struct PathSpec { int n; };
struct CycleSpec { int n; };
struct StarSpec { int n; };
struct GeneralizedStarSpec { std::vector<int> branches; };
struct DoubleBroomSpec { int n1; int n; int n2; };
struct DoubleStarSpec { int n1; int n2; };
struct CustomSpec { std::string path; };

using FamilySpec = std::variant<PathSpec, CycleSpec, StarSpec, GeneralizedStarSpec,
                                DoubleBroomSpec, DoubleStarSpec, CustomSpec>;

inline Graph load_graph(const std::string& path);

inline Graph build(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> Graph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PathSpec>) {
          return path_graph(s.n);
        } else if constexpr (std::is_same_v<T, CycleSpec>) {
          return cycle_graph(s.n);
        } else if constexpr (std::is_same_v<T, StarSpec>) {
          return star_graph(s.n);
        } else if constexpr (std::is_same_v<T, GeneralizedStarSpec>) {
          return generalized_star_graph(s.branches);
        } else if constexpr (std::is_same_v<T, DoubleBroomSpec>) {
          if (s.n1 < 2 || s.n < 2 || s.n2 < 2) {
            throw ParameterError("double broom family: requires n1, n, n2 >= 2");
          }
          return double_broom_graph(s.n1, s.n, s.n2);
        } else if constexpr (std::is_same_v<T, DoubleStarSpec>) {
          if (s.n1 < 2 || s.n2 < 2) {
            throw ParameterError("double star family: requires n1, n2 >= 2");
          }
          return double_broom_graph(s.n1, 2, s.n2);
        } else {
          return load_graph(s.path);
        }
      },
      spec);
}

// ---------------------------------------------------------------------------
// JSON graph files: {"n": <int>, "edges": [[u,v], ...]}, 0-based.
// ---------------------------------------------------------------------------

inline Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw InputError("graph json: expected object with \"n\" and \"edges\"");
  }
  if (!j["n"].is_number_integer()) throw InputError("graph json: \"n\" must be an integer");
  const int n = j["n"].get<int>();
  if (!j["edges"].is_array()) throw InputError("graph json: \"edges\" must be an array");
  std::vector<std::pair<int, int>> edges;
  std::size_t idx = 0;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw InputError("graph json: edges[" + std::to_string(idx) + "] must be a pair of integers");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    ++idx;
  }
  try {
    return Graph::from_edges(n, std::move(edges));
  } catch (const ParameterError& pe) {
    throw InputError(std::string("graph json: ") + pe.what());
  }
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  try {
    return graph_from_json(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline nlohmann::ordered_json graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n;
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

// ---------------------------------------------------------------------------
// Forest structure. The tree DP engine requires an acyclic graph; every
// family here except the cycle is a tree.
// ---------------------------------------------------------------------------

struct ForestInfo {
  bool is_forest = true;
  std::vector<int> component;  // component id per vertex
  std::vector<int> roots;      // smallest vertex of each component
};

inline ForestInfo analyze_forest(const Graph& g) {
  ForestInfo info;
  info.component.assign(static_cast<std::size_t>(g.n), -1);
  const auto adj = g.adjacency();
  for (int start = 0; start < g.n; ++start) {
    if (info.component[static_cast<std::size_t>(start)] != -1) continue;
    const int cid = static_cast<int>(info.roots.size());
    info.roots.push_back(start);
    // Iterative DFS carrying the parent; a visited non-parent neighbour
    // closes a cycle.
    std::vector<std::pair<int, int>> stack{{start, -1}};
    info.component[static_cast<std::size_t>(start)] = cid;
    while (!stack.empty()) {
      auto [v, parent] = stack.back();
      stack.pop_back();
      bool skipped_parent_once = false;
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (w == parent && !skipped_parent_once) {
          skipped_parent_once = true;
          continue;
        }
        if (info.component[static_cast<std::size_t>(w)] != -1) {
          info.is_forest = false;
          continue;
        }
        info.component[static_cast<std::size_t>(w)] = cid;
        stack.emplace_back(w, v);
      }
    }
  }
  return info;
}

inline bool is_forest(const Graph& g) { return analyze_forest(g).is_forest; }

}  // namespace hdepth
