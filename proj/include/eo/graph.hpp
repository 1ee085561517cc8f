#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "eo/bitset.hpp"
#include "eo/rational.hpp"

namespace eo {

// Endpoints stored with lo < hi; loops are rejected at construction.
struct Edge {
  int lo;
  int hi;
};

// Finite undirected multigraph. Edge index = position in the input list and
// is the identity every bitmask in the library refers to. Immutable after
// construction.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }

  int degree(int v) const { return static_cast<int>(incident_[v].size()); }
  // Edge indices incident to v, increasing. A parallel edge appears once per index.
  const std::vector<int>& incident(int v) const { return incident_[v]; }

  bool is_eulerian() const;
  bool is_regular(int d) const;
  int max_degree() const;
  int components() const;

  std::map<int, int> degree_histogram() const;
  std::map<int, Rat> degree_fractions() const;

  // Shortest cycle length; a parallel pair counts as a 2-cycle. nullopt = forest.
  std::optional<int> girth() const;

  // Fundamental cycles of a spanning forest, size e - v + components.
  std::vector<EdgeSet> cycle_space_basis() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

inline Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  return Graph(vertex_count, edges);
}

struct VertexOrigin {
  enum Kind { vertex, edge } kind;
  int index;  // original vertex or edge id
};

struct Subdivision {
  Graph graph;
  std::vector<VertexOrigin> origin;  // per vertex of the new graph
};

// One new vertex per edge; edge i becomes edges 2i (lo side) and 2i+1 (hi side).
Subdivision subdivide(const Graph& g);

// Vertices of b shifted past a's; edge order: a's edges then b's.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace eo
