#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algraph/errors.hpp"

namespace algraph {

inline constexpr int kMaxGraphVertices = 512;

/// Undirected simple graph with labelled vertices; dense symmetric adjacency
/// with a false diagonal. Equality is label-sensitive.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::vector<std::string> labels);

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(v); }

  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  void set_edge(int u, int v, bool present = true);

  /// Edge list with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  bool operator==(const SimpleGraph& other) const = default;

 private:
  int n_;
  std::vector<std::string> labels_;
  std::vector<char> adj_;
};

/// Directed graph; loops are excluded from storage (the relations stored here
/// are reflexive, callers add loops when treating them as preorders).
class Digraph {
 public:
  explicit Digraph(std::vector<std::string> labels);

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(v); }

  bool arc(int u, int v) const { return arcs_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  void set_arc(int u, int v, bool present = true);

  /// Arc list, sorted.
  std::vector<std::pair<int, int>> arcs() const;

  /// Forgets directions (collapses double arcs).
  SimpleGraph underlying_graph() const;

  bool operator==(const Digraph& other) const = default;

 private:
  int n_;
  std::vector<std::string> labels_;
  std::vector<char> arcs_;
};

SimpleGraph complement_graph(const SimpleGraph& g);
SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const int> vertices);
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& vertices);

/// True iff every edge of h is an edge of g; the graphs must carry the same
/// labels in the same order (InputError otherwise).
bool is_spanning_subgraph(const SimpleGraph& h, const SimpleGraph& g);

/// Edges of g1 that are not edges of g2, on the shared vertex set.
SimpleGraph edge_difference(const SimpleGraph& g1, const SimpleGraph& g2);

// Exports. DOT emission is byte-stable: vertices sorted by label, edges
// sorted lexicographically by label pair.
std::string to_dot(const SimpleGraph& g, const std::string& name);
std::string to_dot(const Digraph& g, const std::string& name);
std::string to_json_text(const SimpleGraph& g);
std::string to_json_text(const Digraph& g);
SimpleGraph graph_from_json_text(const std::string& text);

}  // namespace algraph
