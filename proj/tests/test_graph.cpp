#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "fdomlab/bad_family.hpp"
#include "fdomlab/errors.hpp"
#include "fdomlab/generators.hpp"
#include "fdomlab/graph_io.hpp"
#include "fdomlab/isomorphism.hpp"
#include "fdomlab/structure.hpp"

using namespace fdom;

namespace {

bool all_degrees(const Graph& g, int d) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

// Floyd-Warshall distances, independent of the BFS code under test.
std::vector<std::vector<int>> distances(const Graph& g) {
  int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> st{s};
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          st.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) es.push_back({i, j});
  return Graph(n, es);
}

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace

TEST(Graph, RejectsLoopsAndRepeats) {
  EXPECT_THROW(Graph(3, {{0, 0}}), InvalidArgument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InvalidArgument);
  EXPECT_THROW(Graph(3, {{0, 3}}), InvalidArgument);
}

TEST(Generators, NamedFamilies) {
  Graph c4 = generate_named("cycle", {4});
  EXPECT_EQ(c4.order(), 4);
  EXPECT_EQ(c4.edge_count(), 4);
  EXPECT_TRUE(all_degrees(c4, 2));

  Graph cox = generate_named("coxeter", {});
  EXPECT_EQ(cox.order(), 28);
  EXPECT_TRUE(all_degrees(cox, 3));
  EXPECT_EQ(girth(cox), 7);
  EXPECT_EQ(coxeter_automorphisms().size(), 4u);

  Graph kg = generate_named("kneser", {7, 3});
  EXPECT_EQ(kg.order(), 35);
  EXPECT_TRUE(all_degrees(kg, 4));

  EXPECT_THROW(generate_named("nosuch", {}), InvalidArgument);
  EXPECT_THROW(generate_named("cycle", {2}), InvalidArgument);
  EXPECT_THROW(generate_named("kneser", {5, 3}), InvalidArgument);
}

TEST(Generators, KneserAutomorphismsPreserveEdges) {
  Graph kg = kneser_graph(7, 3);
  for (const auto& p : kneser_automorphisms(7, 3))
    for (const Edge& e : kg.edges()) EXPECT_TRUE(kg.adjacent(p[e.u], p[e.v]));
}

TEST(Generators, Incidence) {
  EXPECT_TRUE(isomorphic(gen_incidence(4, 2), subdivide(complete_graph(4), 2)));
  Graph m = gen_incidence(3, 1);
  EXPECT_EQ(m.order(), 6);
  EXPECT_TRUE(all_degrees(m, 1));
  Graph h = gen_incidence(6, 3);
  EXPECT_EQ(h.order(), 6 + 20);
  EXPECT_EQ(h.min_degree(), 3);
  for (int a = 0; a < 6; ++a) EXPECT_EQ(h.degree(a), 10);
  EXPECT_THROW(gen_incidence(3, 3), InvalidArgument);
  EXPECT_THROW(gen_incidence(3, 0), InvalidArgument);
}

TEST(Generators, GirthSixFamily) {
  for (int n = 2; n <= 5; ++n) {
    Graph g = gen_girth6_family(n);
    EXPECT_EQ(g.order(), 2 * n + n * (n - 1) + 2 * n * n);
    EXPECT_TRUE(is_bipartite(g));
    EXPECT_EQ(g.min_degree(), 2);
    for (int w = 0; w < 2 * n; ++w) EXPECT_EQ(g.degree(w), 2 * n - 1);
    for (int v = 2 * n; v < g.order(); ++v) EXPECT_EQ(g.degree(v), 2);
    // With n = 2 the two K_2 subdivisions leave no 6-cycle.
    EXPECT_EQ(girth(g), n == 2 ? 8 : 6);
  }
  EXPECT_EQ(gen_girth6_family(2).order(), 14);
  EXPECT_THROW(gen_girth6_family(1), InvalidArgument);
}

TEST(Generators, Subdivide) {
  Graph k3 = complete_graph(3);
  EXPECT_TRUE(isomorphic(subdivide(k3, 1), k3));
  EXPECT_TRUE(isomorphic(subdivide(k3, 2), cycle_graph(6)));
  EXPECT_TRUE(isomorphic(subdivide(cycle_graph(4), 3), cycle_graph(12)));
  EXPECT_THROW(subdivide(k3, 0), InvalidArgument);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    Graph g = random_graph(7, 0.4, rng);
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(subdivide(g, k).order(), 7 + (k - 1) * g.edge_count());
  }
}

TEST(Generators, SplitConstruction) {
  EXPECT_TRUE(isomorphic(split_construction(complete_graph(2)), complete_graph(3)));
  Graph s = split_construction(cycle_graph(5));
  EXPECT_EQ(s.order(), 10);
  EXPECT_EQ(s.min_degree(), 2);
  for (int v = 5; v < 10; ++v) EXPECT_EQ(s.degree(v), 2);
  EXPECT_THROW(split_construction(Graph(3, {})), InvalidArgument);
}

TEST(Generators, SquareMatchesDistanceOracle) {
  EXPECT_TRUE(isomorphic(graph_square(cycle_graph(5)), complete_graph(5)));
  EXPECT_TRUE(all_degrees(graph_square(cycle_graph(6)), 4));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    Graph g = random_graph(9, 0.25, rng);
    Graph sq = graph_square(g);
    auto d = distances(g);
    for (int u = 0; u < 9; ++u)
      for (int v = 0; v < 9; ++v)
        if (u != v) EXPECT_EQ(sq.adjacent(u, v), d[u][v] <= 2);
  }
  Graph s = graph_square(subdivide(complete_graph(4), 2));
  EXPECT_TRUE(s.adjacent(0, 1) && s.adjacent(0, 2) && s.adjacent(1, 2));
}

TEST(Generators, JoinClique) {
  Graph g = join_clique(cycle_graph(5), 2);
  EXPECT_EQ(g.order(), 7);
  EXPECT_EQ(g.edge_count(), 5 + 10 + 1);
  for (int v = 0; v < 5; ++v) EXPECT_TRUE(g.adjacent(v, 5) && g.adjacent(v, 6));
}

TEST(Generators, HammockExpand) {
  // K4 with all edges simple.
  std::vector<Edge> k4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.push_back({i, j});
  auto ex = hammock_expand(MultiGraph(4, k4));
  EXPECT_TRUE(isomorphic(ex.graph, subdivide(complete_graph(4), 2)));
  for (int v = 4; v < ex.graph.order(); ++v) EXPECT_EQ(ex.roles[v], HammockRole::kShortMid);

  auto k4d = k4;
  k4d.push_back({0, 1});
  MultiGraph h(4, k4d);
  auto ex2 = hammock_expand(h);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(ex2.graph.degree(v), h.degree(v));
  auto hs = hammocks(ex2.graph);
  ASSERT_EQ(hs.size(), 1u);
  EXPECT_EQ(hs[0].u, 0);
  EXPECT_EQ(hs[0].v, 1);
  EXPECT_EQ(ex2.roles[0], HammockRole::kHubPaired);
  EXPECT_EQ(ex2.roles[2], HammockRole::kHubFree);

  EXPECT_THROW(hammock_expand(MultiGraph(4, {{0, 1}, {0, 1}, {0, 1}})), InvalidArgument);
  EXPECT_THROW(hammock_expand(MultiGraph(3, {{0, 1}, {1, 2}, {2, 0}})), InvalidArgument);
}

TEST(GraphIO, RoundTripAndGraph6) {
  Graph g = coxeter_graph();
  Graph back = parse_graph(format_graph(g));
  EXPECT_EQ(back.edges(), g.edges());
  EXPECT_EQ(parse_graph6(to_graph6(g)).edges(), g.edges());
  EXPECT_EQ(parse_graph6("Dhc").edges(), cycle_graph(5).edges());
  EXPECT_THROW(parse_graph("p 3 2\ne 0 1\n"), InvalidArgument);
}

TEST(Structure, Basics) {
  auto r = structure_report(cycle_graph(5));
  EXPECT_TRUE(r.connected);
  EXPECT_TRUE(r.two_connected);
  EXPECT_TRUE(r.suspended_paths.empty());

  auto r2 = structure_report(bad_family_graph(4));
  EXPECT_EQ(r2.blocks.cut_vertices, std::vector<int>{3});
  EXPECT_EQ(r2.blocks.blocks.size(), 2u);

  // Hammock between poles 0 and 1 of a theta graph with a third long path.
  auto r3 = structure_report(theta_graph(2, 3, 4));
  ASSERT_EQ(r3.hammocks.size(), 1u);
  EXPECT_EQ(r3.hammocks[0].two_path.length(), 2);
  EXPECT_EQ(r3.hammocks[0].three_path.length(), 3);

  auto r4 = structure_report(theta_graph(3, 3, 3));
  EXPECT_EQ(r4.twins.size(), 3u);
}

TEST(Structure, SuspendedPathsPartitionDegreeTwo) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    Graph base = random_graph(6, 0.6, rng);
    if (!is_two_connected(base) || base.max_degree() < 3) continue;
    std::uniform_int_distribution<int> k(1, 3);
    Graph g = subdivide(base, k(rng));
    std::vector<int> hits(g.order(), 0);
    for (const auto& p : suspended_paths(g))
      for (int v : p.inner()) ++hits[v];
    for (int v = 0; v < g.order(); ++v) EXPECT_EQ(hits[v], g.degree(v) == 2 ? 1 : 0);
  }
}

TEST(Structure, LongSuspendedPath) {
  // C12 with a chord between 0 and 6.
  std::vector<Edge> es;
  for (int i = 0; i < 12; ++i) es.push_back({i, (i + 1) % 12});
  es.push_back({0, 6});
  Graph g(12, es);
  auto p = find_long_suspended_path(g, 5);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->length(), 6);
  EXPECT_FALSE(find_long_suspended_path(subdivide(complete_graph(4), 2), 2));
  EXPECT_THROW(find_long_suspended_path(cycle_graph(5), 1), InvalidArgument);
}

TEST(Structure, GirthOracle) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    Graph g = random_graph(8, 0.3, rng);
    auto d = distances(g);
    // Shortest cycle through edge uv = 1 + dist(u,v) in G - uv.
    int best = kInfiniteGirth;
    for (const Edge& e : g.edges()) {
      auto d2 = distances(remove_edge(g, e.u, e.v));
      if (d2[e.u][e.v] < (1 << 20)) best = std::min(best, d2[e.u][e.v] + 1);
    }
    EXPECT_EQ(girth(g), best);
  }
  EXPECT_EQ(girth(gen_girth6_family(3)), 6);
}

TEST(BadFamily, Recognition) {
  EXPECT_EQ(bad_family_check(cycle_graph(7))->index, 3);
  EXPECT_FALSE(bad_family_check(cycle_graph(8)));
  EXPECT_EQ(bad_family_check(complete_bipartite(2, 3))->index, 2);
  EXPECT_EQ(bad_family_check(cycle_graph(4))->index, 1);
  std::mt19937_64 rng(13);
  for (int i = 1; i <= kBadFamilySize; ++i) {
    const Graph& g = bad_family_graph(i);
    EXPECT_EQ(g.min_degree(), 2);
    EXPECT_TRUE(is_connected(g));
    for (int t = 0; t < 10; ++t) {
      Graph h = shuffled(g, rng);
      auto m = bad_family_match(h);
      ASSERT_TRUE(m);
      EXPECT_EQ(m->id.index, i);
      for (const Edge& e : h.edges()) EXPECT_TRUE(g.adjacent(m->to_reference[e.u], m->to_reference[e.v]));
    }
  }
}

TEST(Isomorphism, PinnedEmbedding) {
  // C7 spans every 7-vertex member, with any vertex pinned to any vertex.
  for (int i = 5; i <= 8; ++i)
    for (int h = 0; h < 7; ++h) {
      std::pair<int, int> pin{0, h};
      EXPECT_TRUE(find_spanning_embedding(cycle_graph(7), bad_family_graph(i), {&pin, 1}));
    }
  EXPECT_EQ(automorphisms(cycle_graph(6)).size(), 12u);
  EXPECT_EQ(automorphisms(petersen_graph()).size(), 120u);
}
