#include <gtest/gtest.h>

#include <algorithm>
#include <iterator>
#include <random>
#include <set>

#include "fdomlab/colouring.hpp"
#include "fdomlab/distribution.hpp"
#include "fdomlab/errors.hpp"
#include "fdomlab/generators.hpp"
#include "fdomlab/structure.hpp"
#include "fdomlab/tables.hpp"

using namespace fdom;

namespace {

VertexSet set_of(std::initializer_list<int> vs) {
  VertexSet s;
  for (int v : vs) s.insert(v);
  return s;
}

DominatingDistribution c5_pairs() {
  std::vector<Atom> atoms;
  for (int i = 0; i < 5; ++i) atoms.push_back({set_of({i, (i + 2) % 5}), Rational(1, 5)});
  return DominatingDistribution(share(cycle_graph(5)), atoms);
}

// Direct sums over the atom list.
Rational naive_membership(const DominatingDistribution& d, int v) {
  Rational s;
  for (const auto& a : d.atoms())
    if (a.set.contains(v)) s = s + a.p;
  return s;
}

Rational naive_dominated(const DominatingDistribution& d, int v) {
  Rational s;
  for (const auto& a : d.atoms()) {
    bool hit = a.set.contains(v);
    for (int u : d.host().neighbors(v)) hit = hit || a.set.contains(u);
    if (hit) s = s + a.p;
  }
  return s;
}

void expect_matches_naive(const DominatingDistribution& d) {
  Rational total;
  for (const auto& a : d.atoms()) {
    EXPECT_TRUE(Rational(0) < a.p);
    total = total + a.p;
  }
  EXPECT_EQ(total, Rational(1));
  for (int v = 0; v < d.host().order(); ++v) {
    EXPECT_EQ(membership(d, v), naive_membership(d, v));
    EXPECT_EQ(dominated_prob(d, v), naive_dominated(d, v));
  }
}

}  // namespace

TEST(Distribution, CyclePairsHaveMembershipTwoFifths) {
  auto d = c5_pairs();
  expect_matches_naive(d);
  for (int v = 0; v < 5; ++v) {
    EXPECT_EQ(membership(d, v), Rational(2, 5));
    EXPECT_EQ(dominated_prob(d, v), Rational(1));
  }
}

TEST(Distribution, PointMassOnAllVertices) {
  auto g = share(petersen_graph());
  DominatingDistribution d(g, {{g->vertices(), Rational(1)}});
  for (int v = 0; v < 10; ++v) EXPECT_EQ(membership(d, v), Rational(1));
}

TEST(Distribution, RejectsBadMasses) {
  auto g = share(cycle_graph(3));
  EXPECT_THROW(DominatingDistribution(g, {{set_of({0}), Rational(1, 2)}}), InvalidArgument);
  EXPECT_THROW(DominatingDistribution(g, {{set_of({0}), Rational(3, 2)}, {set_of({1}), Rational(-1, 2)}}),
               InvalidArgument);
  EXPECT_THROW(DominatingDistribution(g, {{set_of({5}), Rational(1)}}), InvalidArgument);
}

TEST(Distribution, MergesRepeatedSets) {
  auto g = share(cycle_graph(3));
  DominatingDistribution d(g, {{set_of({0}), Rational(1, 2)}, {set_of({0}), Rational(1, 2)}});
  EXPECT_EQ(d.size(), 1u);
}

TEST(Distribution, VerifyFDominating) {
  auto d = c5_pairs();
  EXPECT_TRUE(verify_f_dominating(d, constant_demand(5, Rational(1)), Rational(2, 5)));
  EXPECT_FALSE(verify_f_dominating(d, constant_demand(5, Rational(1)), Rational(1, 2)));
  auto k2 = share(complete_graph(2));
  DominatingDistribution single(k2, {{set_of({0}), Rational(1)}});
  EXPECT_FALSE(verify_f_dominating(single, constant_demand(2, Rational(1)), Rational(1)));
  EXPECT_FALSE(check_f_dominating(single, constant_demand(2, Rational(1)), Rational(1)).message.empty());
}

TEST(Distribution, DegreeDemand) {
  auto f = degree_demand(path_graph(3));
  EXPECT_EQ(f[0], Rational(4, 5));
  EXPECT_EQ(f[1], Rational(1));
  EXPECT_EQ(f[2], Rational(4, 5));
}

TEST(Distribution, SevenThreeColouringOfC7) {
  auto g = share(cycle_graph(7));
  auto d = colouring_to_distribution(g, exceptional_colouring("c7-dom73"));
  EXPECT_EQ(d.size(), 7u);
  for (const auto& a : d.atoms()) EXPECT_EQ(a.p, Rational(1, 7));
  for (int v = 0; v < 7; ++v) {
    EXPECT_EQ(membership(d, v), Rational(3, 7));
    EXPECT_EQ(dominated_prob(d, v), Rational(1));
  }
}

TEST(Distribution, SevenThreeColouringOfK23) {
  const auto& t = colouring_table("k23-dom73");
  auto d = colouring_to_distribution(share(t.graph), t.colouring);
  for (int v = 0; v < t.graph.order(); ++v) EXPECT_EQ(dominated_prob(d, v), Rational(1));
}

TEST(Distribution, ConstantColouringIsPointMass) {
  FractionalColouring c{1, 1, {{1}, {1}, {1}}};
  auto d = colouring_to_distribution(share(cycle_graph(3)), c);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.atoms()[0].set, VertexSet::range(3));
}

TEST(Distribution, ToColouring) {
  auto c = distribution_to_colouring(c5_pairs());
  EXPECT_EQ(c.p, 5);
  EXPECT_EQ(c.q, 2);
  EXPECT_TRUE(is_dominating_colouring(cycle_graph(5), c));

  auto g = share(cycle_graph(3));
  DominatingDistribution all(g, {{g->vertices(), Rational(1)}});
  auto one = distribution_to_colouring(all);
  EXPECT_EQ(one.p, 1);
  EXPECT_EQ(one.q, 1);

  // 1/2 on V and 1/6 on each singleton: 3 + 1 + 1 + 1 colours.
  DominatingDistribution mixed(g, {{g->vertices(), Rational(1, 2)},
                                   {set_of({0}), Rational(1, 6)},
                                   {set_of({1}), Rational(1, 6)},
                                   {set_of({2}), Rational(1, 6)}});
  auto m = distribution_to_colouring(mixed);
  EXPECT_EQ(m.p, 6);
  EXPECT_EQ(m.q, 4);

  DominatingDistribution uneven(g, {{set_of({0}), Rational(1, 2)}, {set_of({1, 2}), Rational(1, 2)}});
  EXPECT_NO_THROW(distribution_to_colouring(uneven));
  DominatingDistribution skewed(g, {{set_of({0}), Rational(1, 3)}, {set_of({0, 1, 2}), Rational(2, 3)}});
  EXPECT_THROW(distribution_to_colouring(skewed), InvalidArgument);
}

TEST(Distribution, RoundTripKeepsMarginals) {
  for (const auto& t : colouring_tables()) {
    auto d = colouring_to_distribution(share(t.graph), t.colouring);
    auto back = colouring_to_distribution(share(t.graph), distribution_to_colouring(d));
    for (int v = 0; v < t.graph.order(); ++v) {
      EXPECT_EQ(membership(back, v), membership(d, v)) << t.key;
      EXPECT_EQ(dominated_prob(back, v), dominated_prob(d, v)) << t.key;
    }
  }
}

TEST(Distribution, CompleteToR) {
  auto same = complete_to_r(c5_pairs(), Rational(2, 5));
  EXPECT_EQ(same.atoms(), c5_pairs().atoms());

  auto k2 = share(complete_graph(2));
  DominatingDistribution single(k2, {{set_of({0}), Rational(1)}});
  EXPECT_THROW(complete_to_r(single, Rational(1, 2)), InvalidArgument);

  DominatingDistribution half(k2, {{set_of({0}), Rational(1, 2)}, {VertexSet(), Rational(1, 2)}});
  auto d = complete_to_r(half, Rational(1, 2));
  expect_matches_naive(d);
  EXPECT_EQ(membership(d, 0), Rational(1, 2));
  EXPECT_EQ(membership(d, 1), Rational(1, 2));
}

TEST(Distribution, CompleteToRRandom) {
  std::mt19937_64 rng(3);
  auto g = share(cycle_graph(6));
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Atom> atoms;
    std::uniform_int_distribution<int> mask(0, 63);
    for (int i = 0; i < 4; ++i) {
      VertexSet s;
      int m = mask(rng);
      for (int v = 0; v < 6; ++v)
        if (m >> v & 1) s.insert(v);
      atoms.push_back({s, Rational(1, 4)});
    }
    DominatingDistribution d(g, atoms);
    Rational top;
    for (int v = 0; v < 6; ++v) top = max(top, membership(d, v));
    auto c = complete_to_r(d, top);
    expect_matches_naive(c);
    for (int v = 0; v < 6; ++v) EXPECT_EQ(membership(c, v), top);
  }
}

TEST(Distribution, GlueTwoFiveCycles) {
  auto d = glue_at_cutvertex(c5_pairs(), 0, c5_pairs(), 0, Rational(2, 5));
  EXPECT_EQ(d.host().order(), 9);
  EXPECT_EQ(d.host().edge_count(), 10);
  EXPECT_EQ(cut_vertices(d.host()), std::vector<int>{0});
  expect_matches_naive(d);
  EXPECT_TRUE(verify_f_dominating(d, constant_demand(9, Rational(1)), Rational(2, 5)));
}

TEST(Distribution, GluePointMasses) {
  auto g = share(complete_graph(2));
  DominatingDistribution all(g, {{g->vertices(), Rational(1)}});
  auto d = glue_at_cutvertex(all, 1, all, 0, Rational(1));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.atoms()[0].set, VertexSet::range(3));
}

TEST(Distribution, GlueQuasiCycleWithDominatingBlock) {
  const auto& quasi = colouring_table("c4-quasi");
  auto d0 = colouring_to_distribution(share(quasi.graph), quasi.colouring);
  EXPECT_EQ(dominated_prob(d0, quasi.marked), Rational(3, 5));
  const auto& part = colouring_table("k2-partial");
  auto d1 = colouring_to_distribution(share(part.graph), part.colouring);
  EXPECT_EQ(dominated_prob(d1, 0), Rational(4, 5));
  auto d = glue_at_cutvertex(d0, quasi.marked, d1, 0, Rational(2, 5));
  EXPECT_EQ(dominated_prob(d, quasi.marked), Rational(1));
}

TEST(Distribution, CornerStatsOrdering) {
  // For r < 1/2 the conditional non-membership dominates the conditional membership.
  for (int n : {5, 6, 8, 9, 11}) {
    auto d = cycle_distribution(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        auto s = corner_stats(d, u, v);
        EXPECT_FALSE(s.beta < s.alpha) << n << " " << u << " " << v;
        EXPECT_FALSE(Rational(1) < s.alpha);
      }
  }
}

TEST(Distribution, PathTables) {
  for (int len = 2; len <= 12; ++len) {
    auto t = path_tables(len);
    int k = (len + 2) / 3;
    EXPECT_EQ(t.k, k);
    Graph path = path_graph(len + 1);
    for (const auto* c : {&t.phi0, &t.phi1}) {
      check_shape(path, *c);
      EXPECT_EQ(c->p, 3 * k - 1);
      EXPECT_EQ(c->q, k);
      for (int i = 1; i < len; ++i) {
        std::set<int> seen;
        for (int j = i - 1; j <= i + 1; ++j) seen.insert(c->phi[j].begin(), c->phi[j].end());
        EXPECT_EQ(static_cast<int>(seen.size()), 3 * k - 1) << len << " " << i;
      }
    }
    EXPECT_EQ(t.phi1.phi[0], t.phi1.phi[len]) << len;
    std::vector<int> common;
    std::set_intersection(t.phi0.phi[0].begin(), t.phi0.phi[0].end(), t.phi0.phi[len].begin(),
                          t.phi0.phi[len].end(), std::back_inserter(common));
    EXPECT_TRUE(common.empty()) << len;
  }
  auto four = path_tables(4);
  std::vector<std::vector<int>> lambda{{1, 2}, {3, 4}, {4, 5}, {1, 2}, {3, 4}};
  EXPECT_EQ(four.lambda.phi, lambda);
  auto three = path_tables(3);
  EXPECT_EQ(three.mu.phi, (std::vector<std::vector<int>>{{1}, {2}, {1}, {2}}));
}

TEST(Distribution, AttachPathToFiveCycle) {
  auto base = c5_pairs();
  for (int len = 4; len <= 9; ++len) {
    auto d = attach_path(base, 0, 2, len, Rational(2, 5));
    EXPECT_EQ(d.host().order(), 5 + len - 1);
    expect_matches_naive(d);
    EXPECT_TRUE(verify_f_dominating(d, constant_demand(d.host().order(), Rational(1)), Rational(2, 5))) << len;
    for (int v = 0; v < 5; ++v) EXPECT_EQ(membership(d, v), Rational(2, 5));
  }
}

TEST(Distribution, AttachPathThresholds) {
  auto base = c5_pairs();
  auto d6 = attach_path(base, 1, 3, 6, Rational(2, 5));
  EXPECT_TRUE(verify_f_dominating(d6, constant_demand(d6.host().order(), Rational(1)), Rational(2, 5)));
  // A 3-path needs r >= 1/2.
  EXPECT_THROW(attach_path(base, 1, 3, 3, Rational(2, 5)), InvalidArgument);
  EXPECT_THROW(attach_path(base, 1, 3, 2, Rational(2, 5)), InvalidArgument);
}

TEST(Distribution, CycleDistribution) {
  auto d5 = cycle_distribution(5);
  EXPECT_EQ(d5.size(), 5u);
  EXPECT_TRUE(verify_f_dominating(d5, constant_demand(5, Rational(1)), Rational(2, 5)));
  auto d3 = cycle_distribution(3);
  for (const auto& a : d3.atoms()) EXPECT_EQ(a.set.size(), 1);
  EXPECT_EQ(membership(d3, 0), Rational(1, 3));
  auto d7 = cycle_distribution(7);
  EXPECT_EQ(membership(d7, 0), Rational(3, 7));
  EXPECT_TRUE(Rational(2, 5) < membership(d7, 0));
}

TEST(Distribution, ColouringTablesHoldTheirGuarantees) {
  for (const auto& t : colouring_tables()) {
    check_shape(t.graph, t.colouring);
    for (int v = 0; v < t.graph.order(); ++v) {
      std::set<int> seen(t.colouring.phi[v].begin(), t.colouring.phi[v].end());
      for (int u : t.graph.neighbors(v)) seen.insert(t.colouring.phi[u].begin(), t.colouring.phi[u].end());
      int span = static_cast<int>(seen.size());
      if (v == t.marked) {
        EXPECT_EQ(span, t.marked_span) << t.key;
      } else {
        EXPECT_GE(span, t.min_span) << t.key;
      }
    }
  }
  EXPECT_TRUE(colouring_table("k24-dom104").dominating());
  EXPECT_EQ(colouring_table("k24-dom104").colouring.p, 10);
  EXPECT_EQ(colouring_table("k24-dom104").colouring.q, 4);
  EXPECT_EQ(colouring_table("c4-quasi").colouring.p, 5);
  EXPECT_THROW(colouring_table("no-such-table"), InvalidArgument);
}
