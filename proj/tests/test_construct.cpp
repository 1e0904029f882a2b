#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fdomlab/bad_family.hpp"
#include "fdomlab/construct.hpp"
#include "fdomlab/errors.hpp"
#include "fdomlab/fdom.hpp"
#include "fdomlab/generators.hpp"
#include "fdomlab/structure.hpp"

using namespace fdom;

namespace {

void expect_two_fifths(const DominatingDistribution& d, const Graph& g) {
  EXPECT_EQ(d.host().order(), g.order());
  auto c = check_f_dominating(d, degree_demand(g), Rational(2, 5));
  EXPECT_TRUE(c.ok) << c.message;
}

// Random multigraph with minimum degree >= 3 and multiplicity <= 2.
MultiGraph random_multigraph(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (;;) {
    std::vector<Edge> es;
    std::vector<int> mult(n * n, 0);
    for (int i = 0; i < 3 * n; ++i) {
      int u = pick(rng), v = pick(rng);
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (mult[u * n + v] == 2) continue;
      ++mult[u * n + v];
      es.push_back({u, v});
    }
    MultiGraph h(n, es);
    if (h.min_degree() >= 3) return h;
  }
}

}  // namespace

TEST(Construct, FiveCycle) {
  Graph g = cycle_graph(5);
  auto d = construct52(g);
  for (int v = 0; v < 5; ++v) {
    EXPECT_EQ(membership(d, v), Rational(2, 5));
    EXPECT_EQ(dominated_prob(d, v), Rational(1));
  }
}

TEST(Construct, SevenCycleIsExceptional) {
  try {
    construct52(cycle_graph(7));
    FAIL() << "expected an exceptional-family error";
  } catch (const BadFamilyError& e) {
    EXPECT_EQ(std::string(e.what()), "bad-family:C7");
  }
}

TEST(Construct, AllExceptionalGraphsRejected) {
  for (int i = 1; i <= kBadFamilySize; ++i)
    EXPECT_THROW(construct52(bad_family_graph(i)), BadFamilyError) << bad_family_name(i);
}

TEST(Construct, RejectsDisconnectedAndTrivial) {
  EXPECT_THROW(construct52(disjoint_union(cycle_graph(5), cycle_graph(5))), InvalidArgument);
  EXPECT_THROW(construct52(Graph(1, {})), InvalidArgument);
}

TEST(Construct, ThetaTwoTwoFive) {
  Graph g = theta_graph(2, 2, 5);
  expect_two_fifths(construct52(g), g);
}

TEST(Construct, NamedGraphs) {
  for (const Graph& g : {complete_graph(2), path_graph(2), path_graph(5), complete_graph(4), complete_graph(6),
                         petersen_graph(), hypercube_graph(3), complete_bipartite(3, 3), theta_graph(3, 3, 4),
                         theta_graph(2, 5, 5), cycle_graph(6), cycle_graph(8), cycle_graph(13)})
    expect_two_fifths(construct52(g), g);
}

TEST(Construct, TreesUseDegreeDemand) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 10;
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) es.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
    Graph g(n, es);
    expect_two_fifths(construct52(g), g);
  }
}

TEST(Construct, RandomGraphsMatchExactValue) {
  std::mt19937_64 rng(9);
  int built = 0;
  for (int trial = 0; trial < 150; ++trial) {
    int n = 4 + trial % 8;
    std::bernoulli_distribution coin(0.35);
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) es.push_back({i, j});
    Graph g(n, es);
    if (!is_connected(g) || g.min_degree() < 2 || in_bad_family(g)) continue;
    ++built;
    expect_two_fifths(construct52(g), g);
    EXPECT_FALSE(fdom_exact(g).value < Rational(5, 2));
  }
  EXPECT_GT(built, 20);
}

TEST(Construct, TraceCountsReductions) {
  ConstructTrace trace;
  construct52(theta_graph(4, 4, 4), kDefaultCoinCap, &trace);
  std::int64_t total = 0;
  for (auto c : trace.counts) total += c;
  EXPECT_GT(total, 0);
  EXPECT_EQ(reduction_name(Reduction::kHammockBase), "hammock-base");
  EXPECT_EQ(reduction_name(Reduction::kCutVertex), "cut-vertex");
}

TEST(Construct, HammockBaseFromCompleteGraph) {
  std::vector<Edge> es;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) es.push_back({i, j});
  auto x = hammock_expand(MultiGraph(4, es));
  EXPECT_EQ(hammock_roles(x.graph), x.roles);
  auto g = share(x.graph);
  auto raw = base_case_hammock(g, x.roles, kDefaultCoinCap, false);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(membership(raw, v), Rational(2, 5));
  for (int v = 0; v < g->order(); ++v) {
    EXPECT_FALSE(Rational(2, 5) < membership(raw, v));
    EXPECT_EQ(dominated_prob(raw, v), Rational(1));
  }
  auto done = base_case_hammock(g, x.roles);
  EXPECT_TRUE(verify_f_dominating(done, constant_demand(g->order(), Rational(1)), Rational(2, 5)));
}

TEST(Construct, HammockBaseRandomMultigraphs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    auto h = random_multigraph(4 + trial % 3, rng);
    auto x = hammock_expand(h);
    EXPECT_EQ(hammock_roles(x.graph), x.roles);
    auto g = share(x.graph);
    auto raw = base_case_hammock(g, x.roles, 32, false);
    for (int v = 0; v < g->order(); ++v) {
      auto role = x.roles[v];
      if (role == HammockRole::kShortMid) {
        EXPECT_FALSE(Rational(2, 5) < membership(raw, v));
      } else {
        EXPECT_EQ(membership(raw, v), Rational(2, 5)) << trial << " " << v;
      }
      EXPECT_EQ(dominated_prob(raw, v), Rational(1));
    }
    auto done = base_case_hammock(g, x.roles, 32);
    EXPECT_TRUE(verify_f_dominating(done, constant_demand(g->order(), Rational(1)), Rational(2, 5)));
  }
}

TEST(Construct, HammockBaseCoinCap) {
  std::mt19937_64 rng(4);
  auto x = hammock_expand(random_multigraph(6, rng));
  EXPECT_THROW(base_case_hammock(share(x.graph), x.roles, 2), CapExceeded);
}

TEST(Construct, HammockRolesRejectsOtherGraphs) {
  EXPECT_THROW(hammock_roles(petersen_graph()), InvalidArgument);
  EXPECT_THROW(hammock_roles(path_graph(4)), InvalidArgument);
}

TEST(PlanarConstruct, LongCycle) {
  Graph g = cycle_graph(16);
  auto d = planar_girth_construct(g, 2);
  EXPECT_TRUE(verify_f_dominating(d, constant_demand(16, Rational(1)), Rational(2, 5)));
}

TEST(PlanarConstruct, ThetaOfEightPaths) {
  Graph g = theta_graph(8, 8, 8);
  EXPECT_EQ(girth(g), 16);
  auto d = planar_girth_construct(g, 2);
  EXPECT_TRUE(verify_f_dominating(d, constant_demand(g.order(), Rational(1)), Rational(2, 5)));
}

TEST(PlanarConstruct, LargerK) {
  Graph g = theta_graph(16, 16, 20);
  auto d = planar_girth_construct(g, 3);
  EXPECT_TRUE(verify_f_dominating(d, constant_demand(g.order(), Rational(1)), Rational(3, 8)));
}

TEST(PlanarConstruct, Errors) {
  EXPECT_THROW(planar_girth_construct(cycle_graph(15), 2), InvalidArgument);
  EXPECT_THROW(planar_girth_construct(path_graph(20), 2), InvalidArgument);
  EXPECT_THROW(planar_girth_construct(cycle_graph(20), 1), InvalidArgument);
}

TEST(IntersectingFamily, SmallCases) {
  struct Case {
    int a, b;
    std::int64_t t;
  };
  for (auto c : {Case{2, 0, 20}, Case{0, 1, 25}, Case{1, 1, 50}, Case{3, 1, 200}}) {
    auto f = intersecting_family(c.a, c.b);
    EXPECT_EQ(f.t, c.t);
    ASSERT_EQ(static_cast<int>(f.sets.size()), c.a + c.b);
    std::vector<std::set<std::int64_t>> sets;
    for (const auto& s : f.sets) sets.emplace_back(s.begin(), s.end());
    for (const auto& s : sets) {
      EXPECT_EQ(static_cast<std::int64_t>(s.size()) * 5, 2 * f.t);
      for (auto x : s) EXPECT_TRUE(x >= 0 && x < f.t);
    }
    auto meet = [&](int i, int j) {
      std::int64_t n = 0;
      for (auto x : sets[i]) n += sets[j].count(x);
      return n;
    };
    for (int i = 0; i < c.a; ++i)
      for (int j = i + 1; j < c.a; ++j) EXPECT_EQ(meet(i, j) * 5, f.t);
    for (int i = c.a; i < c.a + c.b; ++i)
      for (int j = 0; j < c.a + c.b; ++j)
        if (j != i) EXPECT_EQ(meet(i, j) * 25, 4 * f.t);
    EXPECT_TRUE(f.ok());
  }
}

TEST(IntersectingFamily, Cap) { EXPECT_THROW(intersecting_family(20, 10, 1000), CapExceeded); }
