#include <gtest/gtest.h>

#include <random>

#include "fdomlab/bad_family.hpp"
#include "fdomlab/domset.hpp"
#include "fdomlab/errors.hpp"
#include "fdomlab/generators.hpp"
#include "fdomlab/structure.hpp"

using namespace fdom;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) es.push_back({i, j});
  return Graph(n, es);
}

// Subset oracle over masks, independent of the library's search code.
bool dominates_mask(const Graph& g, unsigned mask) {
  for (int v = 0; v < g.order(); ++v) {
    bool ok = (mask >> v) & 1u;
    for (int w : g.neighbors(v)) ok = ok || ((mask >> w) & 1u);
    if (!ok) return false;
  }
  return true;
}

std::vector<VertexSet> brute_minimal(const Graph& g) {
  std::vector<VertexSet> out;
  int n = g.order();
  for (unsigned m = 0; m < (1u << n); ++m) {
    if (!dominates_mask(g, m)) continue;
    bool minimal = true;
    for (int v = 0; v < n && minimal; ++v)
      if (((m >> v) & 1u) && dominates_mask(g, m & ~(1u << v))) minimal = false;
    if (minimal) {
      VertexSet s;
      for (int v = 0; v < n; ++v)
        if ((m >> v) & 1u) s.insert(v);
      out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational brute_min_weight(const Graph& g, const WeightVector& w) {
  Rational best(1000000);
  for (unsigned m = 0; m < (1u << g.order()); ++m) {
    if (!dominates_mask(g, m)) continue;
    Rational t;
    for (int v = 0; v < g.order(); ++v)
      if ((m >> v) & 1u) t += w[v];
    best = min(best, t);
  }
  return best;
}

}  // namespace

TEST(Domset, IsDominating) {
  Graph c5 = cycle_graph(5);
  EXPECT_TRUE(is_dominating(c5, {0, 2}));
  EXPECT_FALSE(is_dominating(c5, {0, 1}));
  EXPECT_TRUE(is_dominating(c5, c5.vertices()));
}

TEST(Domset, MinimalEnumerationExamples) {
  auto c5 = minimal_dominating_sets(cycle_graph(5));
  std::sort(c5.begin(), c5.end());
  std::vector<VertexSet> pairs;
  for (int i = 0; i < 5; ++i) pairs.push_back({i, (i + 2) % 5});
  std::sort(pairs.begin(), pairs.end());
  EXPECT_EQ(c5, pairs);
  EXPECT_EQ(minimal_dominating_sets(complete_graph(3)).size(), 3u);
  auto k22 = minimal_dominating_sets(complete_bipartite(2, 2));
  std::sort(k22.begin(), k22.end());
  EXPECT_EQ(k22, brute_minimal(complete_bipartite(2, 2)));
  EXPECT_THROW(minimal_dominating_sets(cycle_graph(21)), CapExceeded);
}

TEST(Domset, MinimalEnumerationMatchesBruteForce) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 60; ++t) {
    int n = 3 + t % 10;
    Graph g = random_graph(n, 0.15 + 0.1 * (t % 5), rng);
    auto got = minimal_dominating_sets(g);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, brute_minimal(g));
    for (const auto& s : got) EXPECT_TRUE(is_minimal_dominating(g, s));
    int smallest = 1 << 20;
    for (const auto& s : got) smallest = std::min(smallest, s.size());
    auto gam = domination_number(g);
    EXPECT_EQ(gam.size, smallest);
    EXPECT_TRUE(is_dominating(g, gam.witness));
    EXPECT_EQ(gam.witness.size(), gam.size);
    WeightVector ones(n, Rational(1));
    EXPECT_EQ(min_weight_dominating_set(g, ones).weight, Rational(gam.size));
  }
}

TEST(Domset, DominationNumber) {
  EXPECT_EQ(domination_number(cycle_graph(6)).size, 2);
  EXPECT_EQ(domination_number(coxeter_graph()).size, 7);
  EXPECT_EQ(domination_number(kneser_graph(7, 3)).size, 7);
}

TEST(Domset, WeightedMatchesBruteForce) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> num(0, 6), den(1, 5);
  for (int t = 0; t < 60; ++t) {
    int n = 3 + t % 9;
    Graph g = random_graph(n, 0.3, rng);
    WeightVector w;
    for (int v = 0; v < n; ++v) w.emplace_back(num(rng), den(rng));
    auto got = min_weight_dominating_set(g, w);
    EXPECT_TRUE(is_dominating(g, got.set));
    Rational sum;
    for (int v : got.set) sum += w[v];
    EXPECT_EQ(sum, got.weight);
    EXPECT_EQ(got.weight, brute_min_weight(g, w));
  }
}

TEST(Domset, WeightedExamples) {
  Graph c5 = cycle_graph(5);
  EXPECT_EQ(min_weight_dominating_set(c5, WeightVector(5, Rational(1, 2))).weight, Rational(1));
  EXPECT_EQ(min_weight_dominating_set(c5, WeightVector(5, Rational(0))).weight, Rational(0));
  // Hammock poles 0,1 with inner vertices 2 (2-path) and 3,4 (3-path); the
  // rest of the graph hangs off the poles through a third long path.
  Graph h = theta_graph(2, 3, 5);
  WeightVector w(h.order(), Rational(0));
  for (int v : {0, 1, 2, 3, 4}) w[v] = Rational(1, 2);
  EXPECT_GE(min_weight_dominating_set(h, w).weight, Rational(1));
}

TEST(Domset, Domatic) {
  EXPECT_EQ(domatic_number(cycle_graph(4)).number, 2);
  EXPECT_EQ(domatic_number(complete_graph(4)).number, 4);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 40; ++t) {
    Graph g = random_graph(4 + t % 7, 0.45, rng);
    auto r = domatic_number(g);
    EXPECT_LE(r.number, g.min_degree() + 1);
    VertexSet all;
    int total = 0;
    for (const auto& c : r.classes) {
      EXPECT_TRUE(is_dominating(g, c));
      all |= c;
      total += c.size();
    }
    EXPECT_EQ(all, g.vertices());
    EXPECT_EQ(total, g.order());
    EXPECT_TRUE(domatic_partition(g, r.number + 1).empty());
  }
}

TEST(Domset, Bottleneck) {
  auto ok = verify_bottleneck(cycle_graph(5), WeightVector(5, Rational(1, 2)));
  EXPECT_TRUE(ok.valid);
  EXPECT_EQ(ok.total, Rational(5, 2));
  auto bad = verify_bottleneck(cycle_graph(5), WeightVector(5, Rational(1, 3)));
  EXPECT_FALSE(bad.valid);
  EXPECT_EQ(bad.min_weight, Rational(2, 3));
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= m; ++n) {
      WeightVector w;
      for (int a = 0; a < m; ++a) w.emplace_back(1, m);
      for (int b = 0; b < n; ++b) w.push_back(Rational(1) - Rational(1, m));
      auto r = verify_bottleneck(complete_bipartite(m, n), w);
      EXPECT_TRUE(r.valid);
      EXPECT_EQ(r.total, Rational(1) + Rational(n) * (Rational(1) - Rational(1, m)));
    }
}

TEST(Domset, NeighbourhoodBottleneck) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    Graph g = random_graph(8, 0.4, rng);
    int v = 0;
    for (int x = 0; x < g.order(); ++x)
      if (g.degree(x) < g.degree(v)) v = x;
    WeightVector w(g.order(), Rational(0));
    for (int x : g.closed_neighborhood(v)) w[x] = Rational(1);
    auto r = verify_bottleneck(g, w);
    EXPECT_TRUE(r.valid);
    EXPECT_EQ(r.total, Rational(g.min_degree() + 1));
  }
}
