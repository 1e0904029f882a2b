#include "fdomlab/graph.hpp"

#include <algorithm>
#include <map>

#include "fdomlab/errors.hpp"

namespace fdom {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n), adj_(n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw InvalidArgument("edge endpoint out of range");
    if (e.u == e.v) throw InvalidArgument("loop at vertex " + std::to_string(e.u));
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (int v = 0; v < n; ++v) {
    auto& a = adj_[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw InvalidArgument("repeated edge at vertex " + std::to_string(v));
  }
  m_ = static_cast<int>(edges.size());
  if (n <= VertexSet::kCapacity) {
    nbr_.resize(n);
    closed_.resize(n);
    for (int v = 0; v < n; ++v) {
      for (int w : adj_[v]) nbr_[v].insert(w);
      closed_[v] = nbr_[v];
      closed_[v].insert(v);
    }
  }
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::adjacent(int u, int v) const {
  if (!nbr_.empty()) return nbr_[u].contains(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const VertexSet& Graph::neighborhood(int v) const {
  if (nbr_.empty()) throw CapExceeded("graph too large for bitset operations");
  return nbr_[v];
}

const VertexSet& Graph::closed_neighborhood(int v) const {
  if (closed_.empty()) throw CapExceeded("graph too large for bitset operations");
  return closed_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (static_cast<int>(labels.size()) != n_) throw InvalidArgument("label count mismatch");
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw InvalidArgument("edge endpoint out of range");
    if (e.u == e.v) throw InvalidArgument("multigraphs may not contain loops");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
}

int MultiGraph::multiplicity(int u, int v) const {
  if (u > v) std::swap(u, v);
  return static_cast<int>(std::count(edges_.begin(), edges_.end(), Edge{u, v}));
}

int MultiGraph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges_) d += (e.u == v) + (e.v == v);
  return d;
}

int MultiGraph::min_degree() const {
  int d = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int MultiGraph::max_multiplicity() const {
  int m = 0;
  for (const auto& [e, k] : grouped()) m = std::max(m, k);
  return m;
}

std::vector<std::pair<Edge, int>> MultiGraph::grouped() const {
  std::map<Edge, int> count;
  for (const auto& e : edges_) ++count[e];
  return {count.begin(), count.end()};
}

Subgraph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) index[keep[i]] = i;
  std::vector<Edge> es;
  for (int i = 0; i < static_cast<int>(keep.size()); ++i)
    for (int w : g.neighbors(keep[i]))
      if (index[w] > i) es.push_back({i, index[w]});
  return {share(Graph(static_cast<int>(keep.size()), es)), keep};
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  return induced_subgraph(g, keep.to_vector());
}

Graph remove_edge(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
    throw InvalidArgument("edge not present");
  Graph h = g;
  for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
    auto& adj = h.adj_[a];
    adj.erase(std::find(adj.begin(), adj.end(), b));
    if (!h.nbr_.empty()) {
      h.nbr_[a].erase(b);
      h.closed_[a].erase(b);
    }
  }
  --h.m_;
  return h;
}

Graph add_edge(const Graph& g, int u, int v) {
  auto es = g.edges();
  es.push_back({u, v});
  return Graph(g.order(), es);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) es.push_back({perm[e.u], perm[e.v]});
  return Graph(g.order(), es);
}

}  // namespace fdom
