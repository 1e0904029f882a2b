#include <algorithm>

#include "fdomlab/bad_family.hpp"
#include "fdomlab/errors.hpp"
#include "fdomlab/generators.hpp"
#include "fdomlab/isomorphism.hpp"
#include "fdomlab/tables.hpp"

namespace fdom {

namespace {

using Lists = std::vector<std::vector<int>>;

// Vertex layouts shared by the tables below.
//   C4, C7: the cycle 0..n-1.
//   K23: 0..3 form the 4-cycle, 4 is joined to 1 and 3 (so 1 and 3 have degree 3).
//   2C4: the path 0..6 plus the edges 03 and 36 (3 is the shared vertex).
std::vector<Edge> cycle_edges(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return es;
}

std::vector<Edge> k23_edges() { return {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 1}}; }

std::vector<Edge> two_c4_edges() {
  std::vector<Edge> es;
  for (int i = 0; i < 6; ++i) es.push_back({i, i + 1});
  es.push_back({0, 3});
  es.push_back({3, 6});
  return es;
}

std::vector<Edge> plus(std::vector<Edge> es, std::initializer_list<Edge> extra) {
  es.insert(es.end(), extra);
  return es;
}

struct Spec {
  const char* key;
  const char* description;
  int n;
  std::vector<Edge> edges;
  int p;
  Lists phi;
  int marked = -1;
  int marked_span = 0;
  int min_span = -1;  // -1: all p colours
  // Sanity check on the graph: the base it must be isomorphic to after
  // removing `extra` edges.
  Graph base;
  std::vector<Edge> extra;
};

std::vector<Spec> specs() {
  const Graph k23 = bad_family_graph(2);
  const Graph c7 = bad_family_graph(3);
  const Graph two_c4 = bad_family_graph(4);
  const Graph c4 = bad_family_graph(1);
  std::vector<Spec> s;

  // Dominating (7:3)-colourings.
  s.push_back({"k23-dom73", "dominating (7:3)-colouring of K23", 5, k23_edges(), 7,
               {{1, 6, 7}, {2, 4, 5}, {1, 2, 3}, {3, 6, 7}, {1, 4, 5}}, -1, 0, -1, k23, {}});
  s.push_back({"c7-dom73", "dominating (7:3)-colouring of C7", 7, cycle_edges(7), 7,
               {{1, 2, 3}, {4, 5, 6}, {1, 2, 7}, {3, 4, 5}, {1, 6, 7}, {2, 3, 4}, {5, 6, 7}}, -1, 0, -1, c7, {}});
  s.push_back({"2c4-dom73", "dominating (7:3)-colouring of two C4 sharing a vertex", 7, two_c4_edges(), 7,
               {{3, 5, 6}, {1, 2, 7}, {3, 4, 6}, {1, 4, 5}, {2, 5, 7}, {1, 3, 6}, {2, 4, 7}}, -1, 0, -1, two_c4, {}});

  // (5:2)-colourings that miss colours only at the marked vertex.
  s.push_back({"c4-quasi", "C4, marked vertex sees 3 of 5 colours", 4, cycle_edges(4), 5,
               {{1, 2}, {1, 3}, {4, 5}, {2, 3}}, 0, 3, -1, c4, {}});
  s.push_back({"k23-quasi-hub", "K23, marked degree-3 vertex", 5, k23_edges(), 5,
               {{1, 4}, {2, 4}, {1, 2}, {3, 5}, {1, 3}}, 1, 4, -1, k23, {}});
  s.push_back({"k23-quasi-inner", "K23, marked degree-2 vertex", 5, k23_edges(), 5,
               {{1, 4}, {2, 4}, {1, 2}, {3, 5}, {3, 5}}, 4, 4, -1, k23, {}});
  s.push_back({"c7-quasi", "C7, marked vertex", 7, cycle_edges(7), 5,
               {{1, 2}, {1, 3}, {4, 5}, {2, 3}, {1, 4}, {3, 5}, {2, 4}}, 0, 4, -1, c7, {}});
  s.push_back({"2c4-quasi-centre", "two C4 sharing a vertex, marked shared vertex", 7, two_c4_edges(), 5,
               {{1, 4}, {2, 3}, {1, 5}, {4, 5}, {3, 4}, {1, 2}, {3, 5}}, 3, 4, -1, two_c4, {}});
  s.push_back({"2c4-quasi-far", "two C4 sharing a vertex, marked vertex opposite the shared one", 7,
               two_c4_edges(), 5, {{4, 5}, {1, 2}, {3, 4}, {3, 5}, {1, 2}, {1, 4}, {2, 3}}, 5, 4, -1, two_c4, {}});
  s.push_back({"2c4-quasi-near", "two C4 sharing a vertex, marked neighbour of the shared one", 7,
               two_c4_edges(), 5, {{3, 5}, {1, 2}, {3, 4}, {2, 5}, {1, 2}, {3, 4}, {1, 5}}, 0, 4, -1, two_c4, {}});

  // Dominating (5:2)-colourings of exceptional graphs plus one edge.
  s.push_back({"c4-chord", "C4 plus a chord", 4, plus(cycle_edges(4), {{0, 2}}), 5,
               {{1, 2}, {1, 5}, {3, 4}, {1, 5}}, -1, 0, -1, c4, {{0, 2}}});
  s.push_back({"k23-edge-inner", "K23 plus an edge between degree-2 vertices", 5, plus(k23_edges(), {{0, 4}}), 5,
               {{1, 2}, {3, 4}, {1, 5}, {2, 3}, {4, 5}}, -1, 0, -1, k23, {{0, 4}}});
  s.push_back({"k23-edge-hubs", "K23 plus an edge between the degree-3 vertices", 5, plus(k23_edges(), {{1, 3}}), 5,
               {{1, 5}, {1, 2}, {1, 5}, {3, 4}, {1, 5}}, -1, 0, -1, k23, {{1, 3}}});
  s.push_back({"c7-chord", "C7 plus a chord joining vertices at distance 2", 7, plus(cycle_edges(7), {{1, 6}}), 5,
               {{3, 4}, {1, 5}, {3, 4}, {2, 5}, {1, 5}, {3, 4}, {2, 5}}, -1, 0, -1, c7, {{1, 6}}});
  s.push_back({"c7-two-chords", "C7 plus two crossing chords", 7, plus(cycle_edges(7), {{2, 5}, {0, 3}}), 5,
               {{2, 3}, {4, 5}, {1, 2}, {4, 5}, {1, 2}, {3, 4}, {1, 5}}, -1, 0, -1, c7, {{2, 5}, {0, 3}}});
  s.push_back({"2c4-edge-far", "two C4 sharing a vertex plus an edge between their far vertices", 7,
               plus(two_c4_edges(), {{1, 5}}), 5, {{3, 4}, {1, 2}, {3, 4}, {1, 5}, {2, 3}, {4, 5}, {2, 3}}, -1, 0,
               -1, two_c4, {{1, 5}}});
  s.push_back({"2c4-edge-cross", "two C4 sharing a vertex plus an edge from a far vertex to a near one", 7,
               plus(two_c4_edges(), {{2, 5}}), 5, {{3, 4}, {1, 2}, {1, 5}, {1, 5}, {1, 2}, {3, 4}, {1, 2}}, -1, 0,
               -1, two_c4, {{2, 5}}});

  // Larger graphs met when a reduction lands on an exceptional graph.
  s.push_back({"k24-dom104", "dominating (10:4)-colouring of K24", 6,
               {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {5, 1}, {5, 2}, {5, 3}, {5, 4}}, 10,
               {{3, 4, 5, 6}, {1, 2, 3, 7}, {1, 2, 4, 8}, {1, 2, 5, 9}, {1, 2, 6, 10}, {7, 8, 9, 10}}, -1, 0, -1,
               complete_bipartite(2, 4), {}});
  s.push_back({"theta-2-2-5", "theta graph with paths of lengths 2, 2, 5", 8,
               plus({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 1}}, {{0, 2}, {0, 7}}), 5,
               {{2, 5}, {1, 5}, {1, 3}, {3, 4}, {2, 5}, {1, 4}, {3, 5}, {2, 4}}, -1, 0, -1, theta_graph(2, 2, 5), {}});
  s.push_back({"theta-3-3-4", "theta graph with paths of lengths 3, 3, 4", 9,
               plus(cycle_edges(7), {{7, 2}, {7, 8}, {8, 5}}), 5,
               {{3, 5}, {1, 4}, {2, 3}, {4, 5}, {1, 2}, {3, 4}, {1, 2}, {2, 4}, {1, 5}}, -1, 0, -1,
               theta_graph(3, 3, 4), {}});
  s.push_back({"theta-2-5-5", "theta graph with paths of lengths 2, 5, 5", 11,
               plus(cycle_edges(10), {{10, 0}, {10, 5}}), 5,
               {{1, 2}, {3, 5}, {3, 4}, {1, 2}, {4, 5}, {2, 3}, {1, 4}, {1, 5}, {2, 3}, {4, 5}, {4, 5}}, -1, 0, -1,
               theta_graph(2, 5, 5), {}});
  s.push_back({"theta-3-4-4", "theta graph with paths of lengths 3, 4, 4", 10,
               plus(cycle_edges(8), {{8, 0}, {9, 4}, {8, 9}}), 5,
               {{1, 2}, {3, 4}, {1, 5}, {2, 4}, {1, 3}, {2, 5}, {1, 4}, {3, 5}, {3, 4}, {2, 5}}, -1, 0, -1,
               theta_graph(3, 4, 4), {}});

  s.push_back({"k2-partial", "K2, each vertex sees 4 of 5 colours", 2, {{0, 1}}, 5, {{1, 2}, {3, 4}}, -1, 0, 4,
               complete_graph(2), {}});
  return s;
}

std::vector<ColouringTable> build() {
  std::vector<ColouringTable> out;
  for (auto& s : specs()) {
    ColouringTable t;
    t.key = s.key;
    t.description = s.description;
    t.graph = Graph(s.n, s.edges);
    t.colouring.p = s.p;
    t.colouring.q = static_cast<int>(s.phi.at(0).size());
    t.colouring.phi = s.phi;
    for (auto& cols : t.colouring.phi) std::sort(cols.begin(), cols.end());
    t.marked = s.marked;
    t.marked_span = s.marked_span;
    t.min_span = s.min_span < 0 ? s.p : s.min_span;

    auto fail = [&](const std::string& why) { throw InternalError("colouring table " + t.key + ": " + why); };
    try {
      check_shape(t.graph, t.colouring);
    } catch (const InvalidArgument& e) {
      fail(e.what());
    }
    Graph stripped = t.graph;
    for (const Edge& e : s.extra) stripped = remove_edge(stripped, e.u, e.v);
    if (!isomorphic(stripped, s.base)) fail("graph does not match its description");
    for (int v = 0; v < t.graph.order(); ++v) {
      int span = span_at(t.graph, t.colouring, v);
      if (v == t.marked) {
        if (span != t.marked_span) fail("marked vertex sees " + std::to_string(span) + " colours");
      } else if (span < t.min_span) {
        fail("vertex " + std::to_string(v) + " sees only " + std::to_string(span) + " colours");
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

const std::vector<ColouringTable>& colouring_tables() {
  static const std::vector<ColouringTable> tables = build();
  return tables;
}

const ColouringTable& colouring_table(const std::string& key) {
  for (const auto& t : colouring_tables())
    if (t.key == key) return t;
  throw InvalidArgument("unknown colouring table: " + key);
}

FractionalColouring exceptional_colouring(const std::string& key) { return colouring_table(key).colouring; }

std::vector<std::string> colouring_table_keys() {
  std::vector<std::string> keys;
  for (const auto& t : colouring_tables()) keys.push_back(t.key);
  return keys;
}

}  // namespace fdom
