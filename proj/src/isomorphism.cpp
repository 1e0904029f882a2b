#include "fdomlab/isomorphism.hpp"

#include <algorithm>

namespace fdom {

namespace {

struct EmbeddingSearch {
  const Graph& pattern;
  const Graph& host;
  const std::function<bool(const VertexMap&)>& visit;
  std::vector<int> order;
  VertexMap map;
  std::vector<char> used;
  bool stopped = false;

  void run(std::size_t depth) {
    if (stopped) return;
    if (depth == order.size()) {
      if (!visit(map)) stopped = true;
      return;
    }
    int p = order[depth];
    auto try_host = [&](int h) {
      if (used[h] || host.degree(h) < pattern.degree(p)) return;
      for (int q : pattern.neighbors(p))
        if (map[q] >= 0 && !host.adjacent(map[q], h)) return;
      map[p] = h;
      used[h] = 1;
      run(depth + 1);
      used[h] = 0;
      map[p] = -1;
    };
    if (map[p] >= 0) {
      // Pinned vertex: re-check against earlier choices only.
      int h = map[p];
      for (int q : pattern.neighbors(p))
        if (map[q] >= 0 && std::find(order.begin(), order.begin() + depth, q) != order.begin() + depth &&
            !host.adjacent(map[q], h))
          return;
      run(depth + 1);
      return;
    }
    for (int h = 0; h < host.order() && !stopped; ++h) try_host(h);
  }
};

}  // namespace

void for_each_spanning_embedding(const Graph& pattern, const Graph& host,
                                 std::span<const std::pair<int, int>> pins,
                                 const std::function<bool(const VertexMap&)>& visit) {
  int n = pattern.order();
  if (host.order() != n || host.edge_count() < pattern.edge_count()) return;
  EmbeddingSearch s{pattern, host, visit, {}, VertexMap(n, -1), std::vector<char>(n, 0)};
  std::vector<char> placed(n, 0);
  for (auto [p, h] : pins) {
    if (p < 0 || p >= n || h < 0 || h >= n) return;
    if (s.map[p] >= 0 || s.used[h]) {
      if (s.map[p] != h) return;
      continue;
    }
    if (host.degree(h) < pattern.degree(p)) return;
    s.map[p] = h;
    s.used[h] = 1;
    s.order.push_back(p);
    placed[p] = 1;
  }
  // Grow the order so each vertex has as many placed neighbours as possible.
  while (static_cast<int>(s.order.size()) < n) {
    int best = -1, best_links = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int w : pattern.neighbors(v)) links += placed[w];
      if (links > best_links || (links == best_links && pattern.degree(v) > pattern.degree(best))) {
        best = v;
        best_links = links;
      }
    }
    placed[best] = 1;
    s.order.push_back(best);
  }
  s.run(0);
}

std::optional<VertexMap> find_spanning_embedding(const Graph& pattern, const Graph& host,
                                                 std::span<const std::pair<int, int>> pins) {
  std::optional<VertexMap> out;
  for_each_spanning_embedding(pattern, host, pins, [&](const VertexMap& m) {
    out = m;
    return false;
  });
  return out;
}

std::optional<VertexMap> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  return find_spanning_embedding(a, b);
}

bool isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

std::vector<VertexMap> automorphisms(const Graph& g) {
  std::vector<VertexMap> out;
  for_each_spanning_embedding(g, g, {}, [&](const VertexMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace fdom
