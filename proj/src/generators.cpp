#include "fdomlab/generators.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "embedded_data.hpp"
#include "fdomlab/bad_family.hpp"
#include "fdomlab/errors.hpp"
#include "fdomlab/graph_io.hpp"

namespace fdom {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw InvalidArgument(msg);
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

bool is_automorphism(const Graph& g, const std::vector<int>& p) {
  if (static_cast<int>(p.size()) != g.order()) return false;
  std::vector<char> seen(g.order(), 0);
  for (int x : p) {
    if (x < 0 || x >= g.order() || seen[x]) return false;
    seen[x] = 1;
  }
  for (const Edge& e : g.edges())
    if (!g.adjacent(p[e.u], p[e.v])) return false;
  return true;
}

}  // namespace

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return Graph(n, es);
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph(n, es);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  return Graph(n, es);
}

Graph complete_bipartite(int m, int n) {
  require(m >= 1 && n >= 1, "complete bipartite needs both parts non-empty");
  std::vector<Edge> es;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) es.push_back({a, m + b});
  return Graph(m + n, es);
}

Graph kneser_graph(int a, int b) {
  require(b >= 1 && a >= 2 * b, "kneser needs a >= 2b >= 2");
  auto sets = subsets(a, b);
  std::vector<unsigned> masks;
  for (const auto& s : sets) {
    unsigned m = 0;
    for (int x : s) m |= 1u << x;
    masks.push_back(m);
  }
  std::vector<Edge> es;
  for (int i = 0; i < static_cast<int>(masks.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(masks.size()); ++j)
      if ((masks[i] & masks[j]) == 0) es.push_back({i, j});
  return Graph(static_cast<int>(masks.size()), es);
}

std::vector<std::vector<int>> kneser_automorphisms(int a, int b) {
  auto sets = subsets(a, b);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(sets.size()); ++i) index[sets[i]] = i;
  auto induced = [&](const std::vector<int>& ground) {
    std::vector<int> perm;
    for (const auto& s : sets) {
      std::vector<int> img;
      for (int x : s) img.push_back(ground[x]);
      std::sort(img.begin(), img.end());
      perm.push_back(index.at(img));
    }
    return perm;
  };
  std::vector<int> rot(a), swap01(a);
  for (int i = 0; i < a; ++i) {
    rot[i] = (i + 1) % a;
    swap01[i] = i;
  }
  std::swap(swap01[0], swap01[1]);
  return {induced(rot), induced(swap01)};
}

Graph hypercube_graph(int d) {
  require(d >= 1 && d <= 8, "hypercube dimension must be in 1..8");
  int n = 1 << d;
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (v < (v ^ (1 << b))) es.push_back({v, v ^ (1 << b)});
  return Graph(n, es);
}

Graph theta_graph(int a, int b, int c) {
  require(a >= 1 && b >= 1 && c >= 1, "theta path lengths must be positive");
  require((a > 1) + (b > 1) + (c > 1) >= 2, "theta graph would have parallel edges");
  std::vector<Edge> es;
  int next = 2;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 1; i < len; ++i) {
      es.push_back({prev, next});
      prev = next++;
    }
    es.push_back({prev, 1});
  }
  return Graph(next, es);
}

Graph coxeter_graph() {
  static const Graph g = parse_graph(data::kCoxeterGraph);
  return g;
}

const std::vector<std::vector<int>>& coxeter_automorphisms() {
  static const std::vector<std::vector<int>> gens = [] {
    auto gs = parse_permutations(data::kCoxeterGenerators);
    Graph g = coxeter_graph();
    for (const auto& p : gs)
      if (!is_automorphism(g, p)) throw InternalError("embedded Coxeter generator is not an automorphism");
    return gs;
  }();
  return gens;
}

Graph petersen_graph() { return kneser_graph(5, 2); }

Graph generate_named(const std::string& family, const std::vector<int>& params) {
  auto want = [&](std::size_t k) {
    if (params.size() != k)
      throw InvalidArgument(family + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (family == "cycle") return want(1), cycle_graph(params[0]);
  if (family == "path") return want(1), path_graph(params[0]);
  if (family == "complete") return want(1), complete_graph(params[0]);
  if (family == "complete-bipartite") return want(2), complete_bipartite(params[0], params[1]);
  if (family == "kneser") return want(2), kneser_graph(params[0], params[1]);
  if (family == "hypercube") return want(1), hypercube_graph(params[0]);
  if (family == "theta") return want(3), theta_graph(params[0], params[1], params[2]);
  if (family == "incidence") return want(2), gen_incidence(params[0], params[1]);
  if (family == "girth6") return want(1), gen_girth6_family(params[0]);
  if (family == "coxeter") return want(0), coxeter_graph();
  if (family == "petersen") return want(0), petersen_graph();
  if (family == "bad-family") return want(1), bad_family_graph(params[0]);
  throw InvalidArgument("unknown graph family '" + family + "'");
}

Graph gen_incidence(int n, int d) {
  require(d >= 1 && d < n, "incidence graph needs 1 <= d < n");
  auto sets = subsets(n, d);
  std::vector<Edge> es;
  for (int i = 0; i < static_cast<int>(sets.size()); ++i)
    for (int a : sets[i]) es.push_back({a, n + i});
  return Graph(n + static_cast<int>(sets.size()), es);
}

Graph gen_girth6_family(int n) {
  require(n >= 2, "girth-6 family needs n >= 2");
  std::vector<Edge> es;
  int next = 2 * n;
  for (int side = 0; side < 2; ++side)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        es.push_back({side * n + i, next});
        es.push_back({side * n + j, next});
        ++next;
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int x = next++, y = next++;
      es.push_back({i, x});
      es.push_back({x, y});
      es.push_back({y, n + j});
    }
  return Graph(next, es);
}

Graph subdivide(const Graph& g, int k) {
  require(k >= 1, "subdivision factor must be >= 1");
  std::vector<Edge> es;
  int next = g.order();
  for (const Edge& e : g.edges()) {
    int prev = e.u;
    for (int i = 1; i < k; ++i) {
      es.push_back({prev, next});
      prev = next++;
    }
    es.push_back({prev, e.v});
  }
  return Graph(next, es);
}

Graph split_construction(const Graph& g) {
  require(g.edge_count() >= 1, "split construction needs at least one edge");
  std::vector<Edge> es;
  int n = g.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  int next = n;
  for (const Edge& e : g.edges()) {
    es.push_back({e.u, next});
    es.push_back({e.v, next});
    ++next;
  }
  return Graph(next, es);
}

Graph graph_square(const Graph& g) {
  std::vector<Edge> es;
  for (int u = 0; u < g.order(); ++u) {
    std::vector<char> near(g.order(), 0);
    for (int w : g.neighbors(u)) {
      near[w] = 1;
      for (int x : g.neighbors(w)) near[x] = 1;
    }
    for (int v = u + 1; v < g.order(); ++v)
      if (near[v]) es.push_back({u, v});
  }
  return Graph(g.order(), es);
}

Graph join_clique(const Graph& g, int t) {
  require(t >= 0, "clique size must be non-negative");
  auto es = g.edges();
  int n = g.order();
  for (int i = 0; i < t; ++i) {
    for (int v = 0; v < n; ++v) es.push_back({v, n + i});
    for (int j = i + 1; j < t; ++j) es.push_back({n + i, n + j});
  }
  return Graph(n + t, es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto es = a.edges();
  for (const Edge& e : b.edges()) es.push_back({e.u + a.order(), e.v + a.order()});
  return Graph(a.order() + b.order(), es);
}

HammockExpansion hammock_expand(const MultiGraph& h) {
  if (h.max_multiplicity() > 2) throw InvalidArgument("multiplicity above 2");
  if (h.order() > 0 && h.min_degree() < 3) throw InvalidArgument("minimum degree below 3");
  int n = h.order();
  std::vector<HammockRole> roles(n, HammockRole::kHubFree);
  std::vector<Edge> es;
  int next = n;
  for (const auto& [e, mult] : h.grouped()) {
    int mid = next++;
    roles.push_back(HammockRole::kShortMid);
    es.push_back({e.u, mid});
    es.push_back({mid, e.v});
    if (mult == 2) {
      int x = next++, y = next++;
      roles.push_back(HammockRole::kLongInner);
      roles.push_back(HammockRole::kLongInner);
      es.push_back({e.u, x});
      es.push_back({x, y});
      es.push_back({y, e.v});
      roles[e.u] = roles[e.v] = HammockRole::kHubPaired;
    }
  }
  return {Graph(next, es), roles};
}

}  // namespace fdom
