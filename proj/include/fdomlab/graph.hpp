#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fdomlab/vertex_set.hpp"

namespace fdom {

struct Edge {
  int u;
  int v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1.
// Bitset neighbourhoods are kept when n fits in a VertexSet; set-based
// algorithms refuse larger graphs with CapExceeded.
class Graph {
 public:
  Graph() = default;
  // Throws InvalidArgument on loops, repeated edges or out-of-range ids.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  int edge_count() const { return m_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int min_degree() const;
  int max_degree() const;
  bool adjacent(int u, int v) const;
  bool has_bitsets() const { return !nbr_.empty() || n_ == 0; }
  const VertexSet& neighborhood(int v) const;
  const VertexSet& closed_neighborhood(int v) const;
  VertexSet vertices() const { return VertexSet::range(n_); }
  std::vector<Edge> edges() const;  // u < v, sorted

  const std::vector<std::string>& labels() const { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;

 private:
  friend Graph remove_edge(const Graph& g, int u, int v);

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<VertexSet> nbr_;
  std::vector<VertexSet> closed_;
  std::vector<std::string> labels_;
};

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

// Undirected multigraph without loops; edges listed once per copy.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int multiplicity(int u, int v) const;
  int degree(int v) const;
  int min_degree() const;
  int max_multiplicity() const;
  // Distinct vertex pairs with their multiplicities, u < v, sorted.
  std::vector<std::pair<Edge, int>> grouped() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// A graph together with the ids its vertices carry in some parent graph.
struct Subgraph {
  GraphPtr graph;
  std::vector<int> to_parent;
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);
Subgraph induced_subgraph(const Graph& g, const std::vector<int>& keep);
Graph remove_edge(const Graph& g, int u, int v);
Graph add_edge(const Graph& g, int u, int v);
Graph relabel(const Graph& g, const std::vector<int>& perm);  // vertex v becomes perm[v]

}  // namespace fdom
