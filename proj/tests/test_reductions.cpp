#include <gtest/gtest.h>

#include <cstdio>
#include <memory>
#include <random>

#include "fdomlab/domset.hpp"
#include "fdomlab/errors.hpp"
#include "fdomlab/generators.hpp"
#include "fdomlab/graph_io.hpp"
#include "fdomlab/reductions.hpp"
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

bool independent(const Graph& g, const VertexSet& s) {
  for (int u : s)
    for (int v : s)
      if (g.adjacent(u, v)) return false;
  return true;
}

// Brute force independence number, n <= 16.
int alpha(const Graph& g) {
  int n = g.order(), best = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) s.insert(v);
    if (s.size() > best && independent(g, s)) best = s.size();
  }
  return best;
}

std::vector<std::string> geng(const std::string& args) {
  std::string cmd = std::string(FDOMLAB_GENG) + " -q " + args;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::vector<std::string> lines;
  char buf[256];
  while (pipe && std::fgets(buf, sizeof buf, pipe.get())) {
    std::string line(buf);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

void expect_valid_fractional(const Graph& g, const FractionalChromaticResult& r) {
  auto c = verify_fractional_chromatic(g, r);
  EXPECT_TRUE(c.ok) << c.message;
  Rational total;
  std::vector<Rational> cover(g.order());
  for (const auto& col : r.classes) {
    EXPECT_TRUE(independent(g, col.set));
    total = total + col.x;
    for (int v : col.set) cover[v] = cover[v] + col.x;
  }
  EXPECT_EQ(total, r.value);
  for (int v = 0; v < g.order(); ++v) EXPECT_FALSE(cover[v] < Rational(1));
  Rational dual;
  for (const auto& w : r.dual) dual = dual + w;
  EXPECT_EQ(dual, r.value);
  auto pc = proper_colouring(g, r);
  EXPECT_TRUE(is_proper_colouring(g, pc));
  EXPECT_EQ(Rational(pc.p, pc.q), r.value);
}

}  // namespace

TEST(FractionalChromatic, Classical) {
  EXPECT_EQ(fractional_chromatic(cycle_graph(5)).value, Rational(5, 2));
  EXPECT_EQ(fractional_chromatic(complete_graph(4)).value, Rational(4));
  EXPECT_EQ(fractional_chromatic(cycle_graph(7)).value, Rational(7, 3));
  EXPECT_EQ(fractional_chromatic(petersen_graph()).value, Rational(5, 2));
  EXPECT_EQ(fractional_chromatic(kneser_graph(7, 3)).value, Rational(7, 3));
  for (const Graph& g : {cycle_graph(5), cycle_graph(7), petersen_graph(), complete_graph(4)})
    expect_valid_fractional(g, fractional_chromatic(g));
}

TEST(FractionalChromatic, AboveCliqueAndIndependenceBounds) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(4 + trial % 9, 0.45, rng);
    auto r = fractional_chromatic(g);
    expect_valid_fractional(g, r);
    EXPECT_FALSE(r.value < Rational(clique_number(g)));
    EXPECT_FALSE(r.value < Rational(g.order(), alpha(g)));
  }
}

TEST(FractionalChromatic, RowGenerationOnLargerGraphs) {
  Graph g = graph_square(cycle_graph(29));
  auto r = fractional_chromatic(g);
  EXPECT_EQ(r.value, Rational(29, 9));
  expect_valid_fractional(g, r);
}

TEST(FractionalChromatic, MaxWeightIndependentSet) {
  WeightVector w(5, Rational(1));
  w[0] = Rational(3);
  auto r = max_weight_independent_set(cycle_graph(5), w);
  EXPECT_EQ(r.weight, Rational(4));
  EXPECT_TRUE(r.set.contains(0));
  EXPECT_EQ(clique_number(petersen_graph()), 2);
  EXPECT_EQ(clique_number(complete_graph(6)), 6);
}

TEST(Chromatic, SmallGraphs) {
  auto k5 = chromatic_number(graph_square(cycle_graph(5)));
  EXPECT_TRUE(k5.exact());
  EXPECT_EQ(k5.upper, 5);
  auto bip = chromatic_number(complete_bipartite(4, 3));
  EXPECT_EQ(bip.upper, 2);
  EXPECT_TRUE(bip.exact());
  auto pet = chromatic_number(petersen_graph());
  EXPECT_EQ(pet.upper, 3);
  for (const auto& r : {k5, bip, pet}) EXPECT_EQ(static_cast<int>(r.colouring.size()) > 0, true);
  Graph p = petersen_graph();
  for (const auto& e : p.edges()) EXPECT_NE(pet.colouring[e.u], pet.colouring[e.v]);
  EXPECT_THROW(chromatic_number(cycle_graph(50), 40), CapExceeded);
}

TEST(Chromatic, CoxeterSquareNeedsFive) {
  auto r = chromatic_number(graph_square(coxeter_graph()));
  EXPECT_GE(r.lower, 5);
  EXPECT_LE(r.upper, 5);
}

TEST(Chromatic, BudgetYieldsBounds) {
  auto r = chromatic_number(graph_square(coxeter_graph()), kDefaultChromaticCap, 0);
  EXPECT_LE(r.lower, r.upper);
  Graph sq = graph_square(coxeter_graph());
  for (const auto& e : sq.edges()) EXPECT_NE(r.colouring[e.u], r.colouring[e.v]);
}

TEST(SplitReduction, Examples) {
  auto c5 = check_reduction(cycle_graph(5));
  EXPECT_TRUE(c5.ok());
  EXPECT_TRUE(c5.chi_side);
  EXPECT_TRUE(c5.fdom_side);
  EXPECT_TRUE(c5.extension_checked);
  EXPECT_TRUE(c5.restriction_checked);
  auto k4 = check_reduction(complete_graph(4));
  EXPECT_TRUE(k4.ok());
  EXPECT_FALSE(k4.chi_side);
  EXPECT_FALSE(k4.fdom_side);
  EXPECT_TRUE(k4.fdom_split < Rational(3));
  auto k2 = check_reduction(complete_graph(2));
  EXPECT_EQ(k2.chi_f, Rational(2));
  EXPECT_EQ(k2.fdom_split, Rational(3));
  EXPECT_TRUE(k2.ok());
}

TEST(SplitReduction, AllConnectedGraphsUpToSeven) {
  int n_graphs = 0;
  for (int n = 2; n <= 7; ++n)
    for (const auto& line : geng("-c " + std::to_string(n))) {
      ++n_graphs;
      auto r = check_reduction(parse_graph6(line));
      EXPECT_TRUE(r.ok()) << line;
    }
  EXPECT_EQ(n_graphs, 1 + 2 + 6 + 21 + 112 + 853);
}

TEST(Fullness, SixCycle) {
  auto r = fullness_check(cycle_graph(6), {true, true});
  EXPECT_EQ(r.degree, 2);
  ASSERT_TRUE(r.dom_full.has_value());
  EXPECT_TRUE(*r.dom_full);
  EXPECT_TRUE(r.fdom_full);
  EXPECT_EQ(*r.dom_direct, 3);
  EXPECT_TRUE(r.consistent);
}

TEST(Fullness, Coxeter) {
  auto r = fullness_check(coxeter_graph(), {true, true});
  ASSERT_TRUE(r.dom_full.has_value());
  EXPECT_FALSE(*r.dom_full);
  EXPECT_TRUE(r.fdom_full);
  EXPECT_EQ(r.chi_f_square, Rational(4));
  EXPECT_EQ(*r.dom_direct, 3);
  EXPECT_EQ(*r.fdom_direct, Rational(4));
  EXPECT_TRUE(r.consistent);
}

TEST(Fullness, RequiresRegular) { EXPECT_THROW(fullness_check(path_graph(4)), InvalidArgument); }

TEST(JoinClique, Examples) {
  EXPECT_EQ(join_check(cycle_graph(5), 1).fdom_join, Rational(7, 2));
  auto k1 = join_check(Graph(1, {}), 2);
  EXPECT_EQ(k1.fdom_join, Rational(3));
  EXPECT_TRUE(k1.ok());
  auto c4 = join_check(cycle_graph(4), 1);
  EXPECT_EQ(c4.fdom_join, Rational(3));
  EXPECT_TRUE(c4.ok());
}

TEST(JoinClique, RandomGraphs) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = random_graph(3 + trial % 6, 0.4, rng);
    for (int t = 1; t <= 2; ++t) EXPECT_TRUE(join_check(g, t).ok());
  }
}
