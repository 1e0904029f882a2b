#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <random>

#include "fdomlab/errors.hpp"
#include "fdomlab/fdom.hpp"
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

void expect_certified(const Graph& g, const FdomResult& r) {
  EXPECT_TRUE(verify_primal(g, r.primal).ok);
  auto d = verify_dual(g, r.dual);
  EXPECT_TRUE(d.ok) << d.message;
  EXPECT_EQ(r.primal.objective, r.value);
  EXPECT_EQ(r.dual.total, r.value);
}

}  // namespace

TEST(Fdom, ExactExamples) {
  EXPECT_EQ(fdom_exact(cycle_graph(7)).value, Rational(7, 3));
  EXPECT_EQ(fdom_exact(complete_bipartite(3, 2)).value, Rational(7, 3));
  EXPECT_EQ(fdom_exact(gen_girth6_family(2)).value, Rational(8, 3));
  EXPECT_EQ(fdom_exact(cycle_graph(4)).value, Rational(2));
  EXPECT_THROW(fdom_exact(cycle_graph(21)), CapExceeded);
}

TEST(Fdom, CycleFormula) {
  for (int n = 3; n <= 12; ++n) {
    auto r = fdom_exact(cycle_graph(n));
    EXPECT_EQ(r.value, Rational(n, (n + 2) / 3));
    expect_certified(cycle_graph(n), r);
  }
}

TEST(Fdom, ColgenAgreesWithEnumeration) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + t % 11;
    Graph g = random_graph(n, 0.2 + 0.1 * (t % 5), rng);
    auto a = fdom_exact(g);
    auto b = fdom_colgen(g);
    EXPECT_EQ(a.value, b.value);
    expect_certified(g, a);
    expect_certified(g, b);
    EXPECT_LE(a.value, Rational(g.min_degree() + 1));
    EXPECT_LE(a.value, Rational(n, domination_number(g).size));
  }
  EXPECT_EQ(fdom_colgen(cycle_graph(5)).value, Rational(5, 2));
}

TEST(Fdom, ColgenNamedGraphs) {
  Graph cox = coxeter_graph();
  auto r = fdom_colgen(cox);
  EXPECT_EQ(r.value, Rational(4));
  expect_certified(cox, r);
  Graph g3 = gen_girth6_family(3);
  auto r3 = fdom_colgen(g3);
  EXPECT_EQ(r3.value, Rational(13, 5));
  expect_certified(g3, r3);
}

TEST(Fdom, WeakDuality) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    Graph g = random_graph(7, 0.5, rng);
    auto r = fdom_exact(g);
    for (int v = 0; v < g.order(); ++v) {
      auto d = neighbourhood_certificate(g, v);
      ASSERT_TRUE(verify_dual(g, d).ok);
      EXPECT_GE(d.total, r.primal.objective);
    }
  }
}

TEST(Fdom, JoinAddsCliqueSize) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 8; ++t) {
    Graph g = random_graph(4 + t % 5, 0.4, rng);
    Rational base = fdom_exact(g).value;
    for (int k = 1; k <= 2; ++k) EXPECT_EQ(fdom_exact(join_clique(g, k)).value, base + Rational(k));
  }
}

TEST(Certificates, ClosedForms) {
  Graph c5 = cycle_graph(5);
  auto nb = neighbourhood_certificate(c5, 0);
  EXPECT_TRUE(verify_dual(c5, nb).ok);
  EXPECT_EQ(nb.total, Rational(3));

  Graph h = theta_graph(2, 3, 4);
  auto hs = hammocks(h);
  ASSERT_FALSE(hs.empty());
  auto hc = hammock_certificate(h, hs[0]);
  EXPECT_TRUE(verify_dual(h, hc).ok);
  EXPECT_EQ(hc.total, Rational(5, 2));

  for (int n = 2; n <= 3; ++n) {
    auto gc = girth6_certificate(n);
    EXPECT_TRUE(verify_dual(gen_girth6_family(n), gc).ok);
    EXPECT_EQ(gc.total, Rational(5 * n - 2, 2 * n - 1));
  }

  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= m; ++n) {
      Graph k = complete_bipartite(m, n);
      auto p = kmn_primal_certificate(m, n);
      auto d = kmn_dual_certificate(m, n);
      EXPECT_TRUE(verify_primal(k, p).ok);
      EXPECT_TRUE(verify_dual(k, d).ok);
      EXPECT_EQ(p.objective, d.total);
    }

  auto u = uniform_certificate(cycle_graph(6));
  EXPECT_EQ(u.total, Rational(3));
  EXPECT_TRUE(verify_dual(cycle_graph(6), u).ok);
}

TEST(Certificates, IncidenceBottleneck) {
  for (auto [d, q] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    auto c = hnd_certificate(d, q);
    Graph h = gen_incidence(d * (q + 1), d);
    auto r = verify_dual(h, c);
    EXPECT_TRUE(r.ok) << r.message;
  }
}

TEST(Certificates, Symmetric) {
  Graph c5 = cycle_graph(5);
  auto c = symmetric_certificate(c5, {{1, 2, 3, 4, 0}}, VertexSet{0, 2});
  EXPECT_EQ(c.objective, Rational(5, 2));
  EXPECT_TRUE(verify_primal(c5, c).ok);

  Graph cox = coxeter_graph();
  auto cc = symmetric_certificate(cox, coxeter_automorphisms(), VertexSet{2, 10, 18, 24, 25, 26, 27});
  EXPECT_EQ(cc.objective, Rational(4));
  EXPECT_TRUE(verify_primal(cox, cc).ok);

  EXPECT_THROW(symmetric_certificate(c5, {{1, 0, 2, 3, 4}}, VertexSet{0, 2}), InvalidArgument);
  EXPECT_THROW(symmetric_certificate(c5, {{0, 4, 3, 2, 1}}, VertexSet{0, 2}), InvalidArgument);
}

TEST(Sampler, Prop1Bound) {
  auto r = sample_lnbound(cycle_graph(9), Rational(366204, 1000000), 100000, 0);
  EXPECT_TRUE(r.all_dominating);
  EXPECT_LE(r.max_frequency, r.bound + 0.01);
  auto one = sample_lnbound(cycle_graph(6), Rational(1), 50, 3);
  for (double f : one.frequency) EXPECT_EQ(f, 1.0);
  auto zero = sample_lnbound(complete_graph(5), Rational(0), 50, 3);
  for (double f : zero.frequency) EXPECT_EQ(f, 1.0);
  auto again = sample_lnbound(cycle_graph(9), Rational(1, 3), 1000, 42);
  EXPECT_EQ(again.frequency, sample_lnbound(cycle_graph(9), Rational(1, 3), 1000, 42).frequency);
}

TEST(PqColouring, Examples) {
  EXPECT_FALSE(pq_colouring_exists(gen_incidence(4, 2), 3, 1));
  EXPECT_FALSE(pq_colouring_exists(cycle_graph(4), 3, 1));
  auto c7 = pq_colouring_exists(cycle_graph(7), 7, 3);
  ASSERT_TRUE(c7);
  EXPECT_TRUE(is_dominating_colouring(cycle_graph(7), *c7));
  auto c6 = pq_colouring_exists(cycle_graph(6), 3, 1);
  ASSERT_TRUE(c6);
  EXPECT_TRUE(is_dominating_colouring(cycle_graph(6), *c6));
}
