#include "fdomlab/domset.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>

#include "fdomlab/errors.hpp"

namespace fdom {

namespace {

void require_bitsets(const Graph& g) {
  if (!g.has_bitsets()) throw CapExceeded("graph exceeds the vertex-set capacity");
}

void require_weights(const Graph& g, const WeightVector& w) {
  if (static_cast<int>(w.size()) != g.order()) throw InvalidArgument("weight vector length mismatch");
  for (const auto& x : w)
    if (x.sign() < 0) throw InvalidArgument("negative weight");
}

// Minimal dominating sets by include/exclude over vertices 0..n-1, with
// 64-bit masks. A branch dies when a settled vertex is undominated or a
// chosen vertex has lost every private neighbour.
struct MinimalEnumerator {
  int n;
  std::vector<std::uint64_t> closed;
  std::vector<std::uint64_t> settled;  // settled[i]: N[v] within {0..i-1}
  const std::function<bool(const VertexSet&)>& visit;
  bool stopped = false;

  void run(int i, std::uint64_t chosen, std::uint64_t once, std::uint64_t covered) {
    if (stopped || (settled[i] & ~covered)) return;
    if (i == n) {
      VertexSet s;
      for (std::uint64_t m = chosen; m; m &= m - 1) s.insert(std::countr_zero(m));
      if (!visit(s)) stopped = true;
      return;
    }
    std::uint64_t nb = closed[i];
    std::uint64_t once2 = (once & ~nb) | (nb & ~covered);
    std::uint64_t chosen2 = chosen | (1ULL << i);
    bool ok = true;
    for (std::uint64_t m = chosen2; m && ok; m &= m - 1)
      if (!(closed[std::countr_zero(m)] & once2)) ok = false;
    if (ok) run(i + 1, chosen2, once2, covered | nb);
    run(i + 1, chosen, once, covered);
  }
};

VertexSet greedy_dominating(const Graph& g) {
  VertexSet cov, s;
  VertexSet all = g.vertices();
  while (cov != all) {
    int best = -1, gain = -1;
    for (int v = 0; v < g.order(); ++v) {
      int x = (g.closed_neighborhood(v) - cov).size();
      if (x > gain) {
        gain = x;
        best = v;
      }
    }
    s.insert(best);
    cov |= g.closed_neighborhood(best);
  }
  return s;
}

struct GammaSearch {
  const Graph& g;
  VertexSet all;
  int best;
  VertexSet best_set;

  void run(VertexSet chosen, int size, const VertexSet& cov, VertexSet forbidden) {
    if (cov == all) {
      if (size < best) {
        best = size;
        best_set = chosen;
      }
      return;
    }
    if (size + 1 >= best) return;
    VertexSet open = all - cov;
    int missing = open.size();
    int max_gain = 0;
    for (int x = 0; x < g.order(); ++x)
      if (!forbidden.contains(x)) max_gain = std::max(max_gain, (g.closed_neighborhood(x) & open).size());
    if (max_gain == 0 || size + (missing + max_gain - 1) / max_gain >= best) return;
    int pivot = -1, fewest = 1 << 30;
    for (int u : open) {
      int c = (g.closed_neighborhood(u) - forbidden).size();
      if (c < fewest) {
        fewest = c;
        pivot = u;
      }
    }
    if (fewest == 0) return;
    std::vector<std::pair<int, int>> cand;
    for (int x : g.closed_neighborhood(pivot) - forbidden)
      cand.emplace_back(-(g.closed_neighborhood(x) & open).size(), x);
    std::sort(cand.begin(), cand.end());
    for (auto [neg_gain, x] : cand) {
      VertexSet c2 = chosen;
      c2.insert(x);
      run(c2, size + 1, cov | g.closed_neighborhood(x), forbidden);
      forbidden.insert(x);
    }
  }
};

// Exact weighted search. W is std::int64_t (scaled weights) or Rational.
template <typename W>
struct WeightedSearch {
  const Graph& g;
  std::vector<W> w;
  std::vector<double> wd;
  VertexSet all;
  bool have = false;
  W best{};
  double best_d = 0;
  VertexSet best_set;

  void offer(const VertexSet& s, const W& weight) {
    if (!have || weight < best || (weight == best && s < best_set)) {
      have = true;
      best = weight;
      best_d = static_cast<double>(to_double(weight));
      best_set = s;
    }
  }

  static double to_double(const W& x) {
    if constexpr (std::is_same_v<W, Rational>) return x.to_double();
    else return static_cast<double>(x);
  }

  // Each open vertex needs a chosen neighbour; charging that neighbour's
  // weight evenly over the open vertices it covers gives a lower bound.
  double lower_bound(const VertexSet& open, const VertexSet& forbidden, bool& dead) const {
    double lb = 0;
    for (int u : open) {
      double m = INFINITY;
      for (int x : g.closed_neighborhood(u) - forbidden)
        m = std::min(m, wd[x] / (g.closed_neighborhood(x) & open).size());
      if (m == INFINITY) {
        dead = true;
        return lb;
      }
      lb += m;
    }
    return lb;
  }

  void run(VertexSet chosen, const W& weight, double weight_d, const VertexSet& cov, VertexSet forbidden) {
    if (have && weight > best) return;
    if (cov == all) {
      offer(chosen, weight);
      return;
    }
    VertexSet open = all - cov;
    bool dead = false;
    double lb = lower_bound(open, forbidden, dead);
    if (dead) return;
    if (have && weight_d + lb > best_d * (1 + 1e-9) + 1e-12) return;
    int pivot = -1, fewest = 1 << 30;
    for (int u : open) {
      int c = (g.closed_neighborhood(u) - forbidden).size();
      if (c < fewest) {
        fewest = c;
        pivot = u;
      }
    }
    std::vector<std::pair<double, int>> cand;
    for (int x : g.closed_neighborhood(pivot) - forbidden)
      cand.emplace_back(wd[x] / (g.closed_neighborhood(x) & open).size(), x);
    std::sort(cand.begin(), cand.end());
    for (auto [ratio, x] : cand) {
      VertexSet c2 = chosen;
      c2.insert(x);
      run(c2, weight + w[x], weight_d + wd[x], cov | g.closed_neighborhood(x), forbidden);
      forbidden.insert(x);
    }
  }
};

template <typename W>
WeightedDominatingSet solve_weighted(const Graph& g, std::vector<W> w, const WeightVector& exact) {
  WeightedSearch<W> s{g, std::move(w), {}, g.vertices(), false, W{}, 0.0, {}};
  for (const auto& x : s.w) s.wd.push_back(WeightedSearch<W>::to_double(x));
  // Zero-weight vertices are taken for free.
  VertexSet start, cov;
  for (int v = 0; v < g.order(); ++v)
    if (exact[v].is_zero()) {
      start.insert(v);
      cov |= g.closed_neighborhood(v);
    }
  s.run(start, W{}, 0.0, cov, VertexSet{});
  Rational total;
  for (int v : s.best_set) total += exact[v];
  return {s.best_set, total};
}

struct DomaticSearch {
  const Graph& g;
  int k;
  std::vector<int> order;
  std::vector<int> colour;
  std::vector<std::vector<int>> count;  // count[v][c]: vertices of colour c in N[v]
  std::vector<int> seen;                // colours present in N[v]
  std::vector<int> open;                // uncoloured vertices in N[v]

  bool assign(int x, int c) {
    colour[x] = c;
    bool ok = true;
    auto touch = [&](int y) {
      if (count[y][c]++ == 0) ++seen[y];
      --open[y];
      if (k - seen[y] > open[y]) ok = false;
    };
    touch(x);
    for (int y : g.neighbors(x)) touch(y);
    return ok;
  }
  void unassign(int x) {
    int c = colour[x];
    auto touch = [&](int y) {
      if (--count[y][c] == 0) --seen[y];
      ++open[y];
    };
    touch(x);
    for (int y : g.neighbors(x)) touch(y);
    colour[x] = -1;
  }
  bool run(std::size_t i, int used) {
    if (i == order.size()) return true;
    int x = order[i];
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      bool ok = assign(x, c);
      if (ok && run(i + 1, std::max(used, c + 1))) return true;
      unassign(x);
    }
    return false;
  }
};

std::vector<int> bfs_order(const Graph& g) {
  std::vector<int> order;
  std::vector<char> seen(g.order(), 0);
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
  }
  return order;
}

}  // namespace

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  require_bitsets(g);
  VertexSet out;
  for (int v : s) out |= g.closed_neighborhood(v);
  return out;
}

bool is_dominating(const Graph& g, const VertexSet& s) { return closed_neighborhood(g, s) == g.vertices(); }

bool is_minimal_dominating(const Graph& g, const VertexSet& s) {
  if (!is_dominating(g, s)) return false;
  for (int v : s) {
    VertexSet t = s;
    t.erase(v);
    if (is_dominating(g, t)) return false;
  }
  return true;
}

void for_each_minimal_dominating_set(const Graph& g, const std::function<bool(const VertexSet&)>& visit,
                                     int cap) {
  int n = g.order();
  if (n > std::min(cap, 64))
    throw CapExceeded("minimal dominating set enumeration capped at " + std::to_string(std::min(cap, 64)) +
                      " vertices");
  MinimalEnumerator e{n, std::vector<std::uint64_t>(n), std::vector<std::uint64_t>(n + 1, 0), visit};
  std::vector<int> last(n, 0);
  for (int v = 0; v < n; ++v) {
    e.closed[v] = 1ULL << v;
    last[v] = v;
    for (int w : g.neighbors(v)) {
      e.closed[v] |= 1ULL << w;
      last[v] = std::max(last[v], w);
    }
  }
  for (int i = 0; i <= n; ++i)
    for (int v = 0; v < n; ++v)
      if (last[v] < i) e.settled[i] |= 1ULL << v;
  e.run(0, 0, 0, 0);
}

std::vector<VertexSet> minimal_dominating_sets(const Graph& g, int cap) {
  std::vector<VertexSet> out;
  for_each_minimal_dominating_set(
      g,
      [&](const VertexSet& s) {
        out.push_back(s);
        return true;
      },
      cap);
  return out;
}

DominationResult domination_number(const Graph& g) {
  require_bitsets(g);
  if (g.order() == 0) return {0, {}};
  VertexSet greedy = greedy_dominating(g);
  GammaSearch s{g, g.vertices(), greedy.size(), greedy};
  s.run({}, 0, {}, {});
  return {s.best, s.best_set};
}

WeightedDominatingSet min_weight_dominating_set(const Graph& g, const WeightVector& w) {
  require_bitsets(g);
  require_weights(g, w);
  // Scale to integers when the common denominator and the total stay small.
  bool small = true;
  std::int64_t den = 1;
  for (const auto& x : w) {
    if (!x.is_small()) {
      small = false;
      break;
    }
    std::int64_t d = x.small_den();
    std::int64_t l = std::lcm(den, d);
    if (l > (std::int64_t{1} << 40) || l <= 0) {
      small = false;
      break;
    }
    den = l;
  }
  if (small) {
    std::vector<std::int64_t> scaled;
    __int128 total = 0;
    for (const auto& x : w) {
      __int128 v = static_cast<__int128>(x.small_num()) * (den / x.small_den());
      total += v;
      scaled.push_back(static_cast<std::int64_t>(v));
      if (total > (static_cast<__int128>(1) << 62)) {
        small = false;
        break;
      }
    }
    if (small) return solve_weighted<std::int64_t>(g, std::move(scaled), w);
  }
  return solve_weighted<Rational>(g, w, w);
}

std::vector<VertexSet> domatic_partition(const Graph& g, int k) {
  require_bitsets(g);
  int n = g.order();
  if (k < 1 || n == 0) return {};
  DomaticSearch s{g, k, bfs_order(g), std::vector<int>(n, -1), std::vector<std::vector<int>>(n, std::vector<int>(k, 0)),
                  std::vector<int>(n, 0), std::vector<int>(n, 0)};
  for (int v = 0; v < n; ++v) s.open[v] = g.degree(v) + 1;
  for (int v = 0; v < n; ++v)
    if (s.open[v] < k) return {};
  if (!s.run(0, 0)) return {};
  std::vector<VertexSet> classes(k);
  for (int v = 0; v < n; ++v) classes[s.colour[v]].insert(v);
  return classes;
}

DomaticResult domatic_number(const Graph& g, int cap) {
  if (g.order() > cap) throw CapExceeded("domatic search capped at " + std::to_string(cap) + " vertices");
  if (g.order() == 0) return {0, {}};
  for (int k = g.min_degree() + 1; k >= 1; --k) {
    auto classes = domatic_partition(g, k);
    if (!classes.empty()) return {k, classes};
  }
  throw InternalError("no domatic partition found");
}

BottleneckCheck verify_bottleneck(const Graph& g, const WeightVector& w) {
  require_weights(g, w);
  Rational total;
  for (const auto& x : w) total += x;
  auto best = min_weight_dominating_set(g, w);
  return {best.weight >= Rational(1), total, best.weight, best.set};
}

}  // namespace fdom
