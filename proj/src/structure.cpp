#include "fdomlab/structure.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "fdomlab/errors.hpp"

namespace fdom {

std::vector<int> components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  int next = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  auto comp = components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

BlockDecomposition blocks(const Graph& g) {
  int n = g.order();
  BlockDecomposition out;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<Edge> stack;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        stack.push_back({v, w});
        ++children;
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (parent >= 0 || children > 1) is_cut[v] = 1;
          std::vector<int> block;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e.u);
            block.push_back(e.v);
            if (e.u == v && e.v == w) break;
          }
          std::sort(block.begin(), block.end());
          block.erase(std::unique(block.begin(), block.end()), block.end());
          out.blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back({v, w});
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };

  for (int v = 0; v < n; ++v) {
    if (disc[v] >= 0) continue;
    if (g.degree(v) == 0) {
      disc[v] = timer++;
      out.blocks.push_back({v});
      continue;
    }
    dfs(v, -1);
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  return out;
}

std::vector<int> cut_vertices(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), next(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<int> stack;
  stack.reserve(n);
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    int root_children = 0;
    disc[root] = low[root] = timer++;
    stack.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      const auto& nb = g.neighbors(v);
      if (next[v] < static_cast<int>(nb.size())) {
        int w = nb[next[v]++];
        if (disc[w] < 0) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          if (v == root) ++root_children;
          stack.push_back(w);
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      int u = parent[v];
      if (u >= 0) {
        low[u] = std::min(low[u], low[v]);
        if (u != root && low[v] >= disc[u]) is_cut[u] = 1;
      }
    }
    if (root_children > 1) is_cut[root] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(v);
  return out;
}

bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

int girth(const Graph& g) {
  int best = kInfiniteGirth;
  int n = g.order();
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (2 * dist[v] + 1 >= best) break;
      for (int w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (w != parent[v]) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

std::vector<SuspendedPath> suspended_paths(const Graph& g) {
  std::vector<SuspendedPath> out;
  for (int s = 0; s < g.order(); ++s) {
    if (g.degree(s) < 3) continue;
    for (int first : g.neighbors(s)) {
      std::vector<int> path{s, first};
      int prev = s, cur = first;
      while (g.degree(cur) == 2) {
        int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
        prev = cur;
        cur = nxt;
        path.push_back(cur);
        if (cur == s) break;
      }
      if (g.degree(cur) < 3 || cur <= s) continue;
      out.push_back({std::move(path)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SuspendedPath& a, const SuspendedPath& b) { return a.vertices < b.vertices; });
  return out;
}

std::vector<Hammock> hammocks(const Graph& g) {
  std::vector<Hammock> out;
  auto paths = suspended_paths(g);
  for (const auto& p2 : paths) {
    if (p2.length() != 2 || g.adjacent(p2.front(), p2.back())) continue;
    for (const auto& p3 : paths)
      if (p3.length() == 3 && p3.front() == p2.front() && p3.back() == p2.back())
        out.push_back({p2.front(), p2.back(), p2, p3});
  }
  return out;
}

std::vector<std::pair<SuspendedPath, SuspendedPath>> twin_paths(const Graph& g) {
  std::vector<std::pair<SuspendedPath, SuspendedPath>> out;
  auto paths = suspended_paths(g);
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = i + 1; j < paths.size(); ++j)
      if (paths[i].front() == paths[j].front() && paths[i].back() == paths[j].back() &&
          paths[i].length() == paths[j].length())
        out.emplace_back(paths[i], paths[j]);
  return out;
}

std::optional<SuspendedPath> find_long_suspended_path(const Graph& g, int min_length) {
  if (!is_two_connected(g)) throw InvalidArgument("graph is not 2-connected");
  if (g.min_degree() < 2) throw InvalidArgument("minimum degree below 2");
  if (g.max_degree() < 3) throw InvalidArgument("maximum degree below 3");
  std::optional<SuspendedPath> best;
  for (auto& p : suspended_paths(g))
    if (p.length() >= min_length + 1 && (!best || p.length() > best->length())) best = p;
  return best;
}

StructureReport structure_report(const Graph& g) {
  StructureReport r;
  r.min_degree = g.min_degree();
  r.max_degree = g.max_degree();
  r.connected = is_connected(g);
  r.blocks = blocks(g);
  r.two_connected = g.order() >= 3 && r.connected && r.blocks.cut_vertices.empty();
  r.girth = girth(g);
  r.suspended_paths = suspended_paths(g);
  r.hammocks = hammocks(g);
  r.twins = twin_paths(g);
  return r;
}

}  // namespace fdom
