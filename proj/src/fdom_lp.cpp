#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <random>
#include <unordered_set>

#include "fdomlab/errors.hpp"
#include "fdomlab/fdom.hpp"
#include "fdomlab/generators.hpp"
#include "fdomlab/lp.hpp"

namespace fdom {

namespace {

// Packing LP: rows are vertices, columns are the given sets.
LpSolution solve_packing(const Graph& g, const std::vector<VertexSet>& cols) {
  int n = g.order();
  int k = static_cast<int>(cols.size());
  std::vector<std::int64_t> a(static_cast<std::size_t>(n) * k, 0);
  for (int j = 0; j < k; ++j)
    for (int v : cols[j]) a[static_cast<std::size_t>(v) * k + j] = 1;
  return simplex_integer(n, k, a, std::vector<std::int64_t>(n, 1), std::vector<std::int64_t>(k, 1));
}

FdomResult package(const std::vector<VertexSet>& cols, const LpSolution& sol) {
  FdomResult r;
  r.value = sol.value;
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (!sol.x[j].is_zero()) r.primal.columns.push_back({cols[j], sol.x[j]});
  r.primal.objective = sol.value;
  r.dual = make_dual(sol.y);
  return r;
}

// Drops vertices (highest id first) while the set still dominates.
VertexSet minimalise(const Graph& g, VertexSet s) {
  auto vs = s.to_vector();
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
    VertexSet t = s;
    t.erase(*it);
    if (is_dominating(g, t)) s = t;
  }
  return s;
}

std::vector<VertexSet> seed_columns(const Graph& g) {
  std::vector<VertexSet> out;
  std::unordered_set<VertexSet> seen;
  auto add = [&](const VertexSet& s) {
    if (seen.insert(s).second) out.push_back(s);
  };
  // Greedy domatic partition: peel off dominating sets from the unused vertices.
  VertexSet unused = g.vertices();
  while (is_dominating(g, unused)) {
    VertexSet d = minimalise(g, unused);
    add(d);
    unused -= d;
  }
  int n = g.order();
  for (int v = 0; v < n; ++v) {
    // Rotated minimalisation of V - {v} gives spread-out columns.
    VertexSet s = g.vertices();
    s.erase(v);
    if (!is_dominating(g, s)) s = g.vertices();
    for (int i = 1; i <= n; ++i) {
      int x = (v + i) % n;
      if (!s.contains(x)) continue;
      VertexSet t = s;
      t.erase(x);
      if (is_dominating(g, t)) s = t;
    }
    add(s);
  }
  return out;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(mpq_class(r));
}

bool is_automorphism(const Graph& g, const std::vector<int>& p) {
  if (static_cast<int>(p.size()) != g.order()) return false;
  std::vector<char> hit(g.order(), 0);
  for (int x : p) {
    if (x < 0 || x >= g.order() || hit[x]) return false;
    hit[x] = 1;
  }
  for (const Edge& e : g.edges())
    if (!g.adjacent(p[e.u], p[e.v])) return false;
  return true;
}

// Uniform integer in [0, bound) by rejection, identical on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  while (true) {
    std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

struct PqSearch {
  const Graph& g;
  int p, q;
  std::int64_t cap;
  std::int64_t nodes = 0;
  std::vector<int> order{};
  std::vector<std::uint32_t> subsets{};
  std::vector<std::uint32_t> assigned{};
  std::vector<std::uint32_t> seen{};  // colours on N[v]
  std::vector<int> open{};            // unassigned vertices in N[v]
  std::uint32_t full = 0;

  bool feasible_at(int v) const {
    return std::popcount(full & ~seen[v]) <= q * open[v];
  }

  bool run(std::size_t i, int used) {
    if (++nodes > cap) throw CapExceeded("(p:q)-colouring search exceeded its node cap");
    if (i == order.size()) return true;
    int x = order[i];
    std::vector<int> touched{x};
    for (int w : g.neighbors(x)) touched.push_back(w);
    for (std::uint32_t s : subsets) {
      // New colours must be the next unused ones, in order.
      std::uint32_t fresh = s >> used;
      if (fresh & (fresh + 1)) continue;
      int now = used + std::popcount(fresh);
      std::vector<std::uint32_t> saved;
      for (int y : touched) saved.push_back(seen[y]);
      bool ok = true;
      for (int y : touched) {
        seen[y] |= s;
        --open[y];
        ok = ok && feasible_at(y);
      }
      assigned[x] = s;
      if (ok && run(i + 1, now)) return true;
      for (std::size_t t = 0; t < touched.size(); ++t) {
        seen[touched[t]] = saved[t];
        ++open[touched[t]];
      }
      assigned[x] = 0;
    }
    return false;
  }
};

}  // namespace

DualCertificate make_dual(WeightVector w) {
  DualCertificate d;
  for (const auto& x : w) d.total += x;
  d.weights = std::move(w);
  return d;
}

FdomResult fdom_exact(const Graph& g, int cap) {
  if (g.order() == 0) throw InvalidArgument("empty graph");
  auto cols = minimal_dominating_sets(g, cap);
  return package(cols, solve_packing(g, cols));
}

FdomResult fdom_colgen(const Graph& g, const ColgenOptions& options) {
  if (g.order() == 0) throw InvalidArgument("empty graph");
  if (!g.has_bitsets()) throw CapExceeded("graph exceeds the vertex-set capacity");
  auto cols = seed_columns(g);
  std::unordered_set<VertexSet> pool(cols.begin(), cols.end());
  for (int it = 0; it < options.max_iterations; ++it) {
    LpSolution sol = solve_packing(g, cols);
    auto price = min_weight_dominating_set(g, sol.y);
    if (price.weight >= Rational(1)) return package(cols, sol);
    VertexSet d = minimalise(g, price.set);
    if (!pool.insert(d).second) throw InternalError("pricing returned an existing column");
    cols.push_back(d);
    if (it + 1 == options.max_iterations) {
      // Scaling the duals by the pricing weight gives a feasible bottleneck.
      Rational upper = price.weight.is_zero() ? Rational(g.order()) : min(Rational(g.order()), sol.value / price.weight);
      throw CapExceeded("column generation iteration cap reached; fdom in [" + sol.value.str() + ", " +
                        upper.str() + "]");
    }
  }
  throw CapExceeded("column generation iteration cap reached");
}

CheckResult verify_primal(const Graph& g, const PrimalCertificate& c) {
  std::vector<Rational> load(g.order());
  Rational total;
  for (std::size_t i = 0; i < c.columns.size(); ++i) {
    const auto& col = c.columns[i];
    std::string where = "column " + std::to_string(i);
    if (col.x.sign() < 0) return {false, where + " has negative weight"};
    for (int v : col.set)
      if (v >= g.order()) return {false, where + " mentions vertex " + std::to_string(v)};
    if (!is_dominating(g, col.set)) return {false, where + " is not dominating"};
    for (int v : col.set) load[v] += col.x;
    total += col.x;
  }
  for (int v = 0; v < g.order(); ++v)
    if (load[v] > Rational(1)) return {false, "load " + load[v].str() + " at vertex " + std::to_string(v)};
  if (total != c.objective) return {false, "objective " + c.objective.str() + " but weights sum to " + total.str()};
  return {};
}

CheckResult verify_dual(const Graph& g, const DualCertificate& c) {
  if (static_cast<int>(c.weights.size()) != g.order()) return {false, "weight vector length mismatch"};
  Rational total;
  for (int v = 0; v < g.order(); ++v) {
    if (c.weights[v].sign() < 0) return {false, "negative weight at vertex " + std::to_string(v)};
    total += c.weights[v];
  }
  if (total != c.total) return {false, "total " + c.total.str() + " but weights sum to " + total.str()};
  auto r = verify_bottleneck(g, c.weights);
  if (!r.valid) {
    std::string set;
    for (int v : r.min_set) set += (set.empty() ? "" : ",") + std::to_string(v);
    return {false, "dominating set {" + set + "} has weight " + r.min_weight.str()};
  }
  return {};
}

DualCertificate neighbourhood_certificate(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw InvalidArgument("vertex out of range");
  WeightVector w(g.order(), Rational(0));
  w[v] = Rational(1);
  for (int x : g.neighbors(v)) w[x] = Rational(1);
  return make_dual(std::move(w));
}

DualCertificate uniform_certificate(const Graph& g) {
  int gamma = domination_number(g).size;
  return make_dual(WeightVector(g.order(), Rational(1, gamma)));
}

DualCertificate hammock_certificate(const Graph& g, const Hammock& h) {
  WeightVector w(g.order(), Rational(0));
  for (int v : h.two_path.vertices) w[v] = Rational(1, 2);
  for (int v : h.three_path.vertices) w[v] = Rational(1, 2);
  return make_dual(std::move(w));
}

int hnd_threshold(int d, int q) {
  if (d < 2 || q < 1) throw InvalidArgument("hnd certificate needs d >= 2 and q >= 1");
  int n = d * (q + 1);
  double ld = std::log(static_cast<double>(d));
  long m = std::lround((ld - 2 * std::log(ld)) * q);
  return static_cast<int>(std::clamp<long>(m, 1, n - d));
}

DualCertificate hnd_certificate(int d, int q) {
  int m = hnd_threshold(d, q);
  int n = d * (q + 1);
  Graph h = gen_incidence(n, d);
  WeightVector w(h.order());
  for (int a = 0; a < n; ++a) w[a] = Rational(1, m);
  Rational wb = Rational(1) / binomial(n - m, d);
  for (int b = n; b < h.order(); ++b) w[b] = wb;
  return make_dual(std::move(w));
}

DualCertificate girth6_certificate(int n) {
  Graph g = gen_girth6_family(n);
  WeightVector w(g.order(), Rational(1, n * (2 * n - 1)));
  for (int v = 0; v < 2 * n; ++v) w[v] = Rational(1, 2 * n);
  return make_dual(std::move(w));
}

DualCertificate kmn_dual_certificate(int m, int n) {
  if (m < 1 || n < 1) throw InvalidArgument("complete bipartite sides must be positive");
  WeightVector w;
  for (int a = 0; a < m; ++a) w.emplace_back(1, m);
  for (int b = 0; b < n; ++b) w.push_back(Rational(1) - Rational(1, m));
  return make_dual(std::move(w));
}

PrimalCertificate kmn_primal_certificate(int m, int n) {
  if (n < 1 || n > m) throw InvalidArgument("complete bipartite packing needs 1 <= n <= m");
  PrimalCertificate c;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) c.columns.push_back({VertexSet{a, m + b}, Rational(1, m)});
  Rational rest = Rational(1) - Rational(n, m);
  if (!rest.is_zero()) c.columns.push_back({VertexSet::range(m), rest});
  for (const auto& col : c.columns) c.objective += col.x;
  return c;
}

PrimalCertificate symmetric_certificate(const Graph& g, const std::vector<std::vector<int>>& generators,
                                        const VertexSet& d_min, std::size_t orbit_cap) {
  int n = g.order();
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (!is_automorphism(g, generators[i]))
      throw InvalidArgument("generator " + std::to_string(i) + " is not an automorphism");
  if (!is_dominating(g, d_min)) throw InvalidArgument("seed set is not dominating");
  // Transitivity: the orbit of vertex 0 must be everything.
  std::vector<char> reached(n, 0);
  std::vector<int> stack{0};
  reached[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& p : generators)
      if (!reached[p[v]]) {
        reached[p[v]] = 1;
        ++count;
        stack.push_back(p[v]);
      }
  }
  if (count != n) throw InvalidArgument("generators do not act transitively");
  std::unordered_set<VertexSet> orbit{d_min};
  std::deque<VertexSet> queue{d_min};
  while (!queue.empty()) {
    VertexSet s = queue.front();
    queue.pop_front();
    for (const auto& p : generators) {
      VertexSet img;
      for (int v : s) img.insert(p[v]);
      if (orbit.insert(img).second) {
        if (orbit.size() > orbit_cap) throw CapExceeded("orbit exceeds its cap");
        queue.push_back(img);
      }
    }
  }
  std::vector<VertexSet> sets(orbit.begin(), orbit.end());
  std::sort(sets.begin(), sets.end());
  Rational x = Rational(n) / (Rational(d_min.size()) * Rational(static_cast<long long>(sets.size())));
  PrimalCertificate c;
  for (const auto& s : sets) c.columns.push_back({s, x});
  c.objective = x * Rational(static_cast<long long>(sets.size()));
  return c;
}

SampleReport sample_lnbound(const Graph& g, const Rational& p, std::int64_t trials, std::uint64_t seed) {
  if (p.sign() < 0 || p > Rational(1)) throw InvalidArgument("p must lie in [0,1]");
  if (trials < 1) throw InvalidArgument("trials must be positive");
  if (!p.is_small()) throw InvalidArgument("p must have a 64-bit numerator and denominator");
  std::uint64_t num = static_cast<std::uint64_t>(p.small_num());
  std::uint64_t den = static_cast<std::uint64_t>(p.small_den());
  std::mt19937_64 rng(seed);
  int n = g.order();
  std::vector<std::int64_t> hits(n, 0);
  SampleReport r;
  r.trials = trials;
  for (std::int64_t t = 0; t < trials; ++t) {
    VertexSet x;
    for (int v = 0; v < n; ++v)
      if (uniform_below(rng, den) < num) x.insert(v);
    VertexSet d = x | (g.vertices() - closed_neighborhood(g, x));
    if (!is_dominating(g, d)) r.all_dominating = false;
    for (int v : d) ++hits[v];
  }
  for (int v = 0; v < n; ++v) {
    r.frequency.push_back(static_cast<double>(hits[v]) / static_cast<double>(trials));
    r.max_frequency = std::max(r.max_frequency, r.frequency.back());
  }
  double pd = p.to_double();
  r.bound = pd + std::pow(1 - pd, g.min_degree() + 1);
  return r;
}

std::optional<FractionalColouring> pq_colouring_exists(const Graph& g, int p, int q, std::int64_t node_cap) {
  if (q < 1 || q > p) throw InvalidArgument("need 1 <= q <= p");
  if (p > 24) throw CapExceeded("at most 24 colours supported");
  int n = g.order();
  PqSearch s{.g = g, .p = p, .q = q, .cap = node_cap};
  s.full = (1u << p) - 1;
  for (std::uint32_t m = 0; m <= s.full; ++m)
    if (std::popcount(m) == q) s.subsets.push_back(m);
  s.order.resize(n);
  for (int v = 0; v < n; ++v) s.order[v] = v;
  std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  s.assigned.assign(n, 0);
  s.seen.assign(n, 0);
  s.open.resize(n);
  for (int v = 0; v < n; ++v) {
    s.open[v] = g.degree(v) + 1;
    if (!s.feasible_at(v)) return std::nullopt;
  }
  if (!s.run(0, 0)) return std::nullopt;
  FractionalColouring c{p, q, std::vector<std::vector<int>>(n)};
  for (int v = 0; v < n; ++v)
    for (int col = 0; col < p; ++col)
      if ((s.assigned[v] >> col) & 1u) c.phi[v].push_back(col + 1);
  return c;
}

}  // namespace fdom
