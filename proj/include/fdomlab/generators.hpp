#pragma once

#include <string>
#include <vector>

#include "fdomlab/graph.hpp"

namespace fdom {

// Vertex labelling used by each generator:
//   cycle/path        0..n-1 along the cycle/path
//   complete_bipartite  part A = 0..m-1, part B = m..m+n-1
//   kneser(a,b)       b-subsets of {0..a-1} in lexicographic order
//   incidence(n,d)    A = 0..n-1, then d-subsets of A in lexicographic order
//   girth6(n)         W0 = 0..n-1, W1 = n..2n-1, then subdivision vertices of
//                     the two cliques, then the two inner vertices of each
//                     W0-W1 path (first the one next to W0)
//   theta(a,b,c)      poles 0 and 1, then the inner vertices of each path
//   hypercube(d)      bit strings, adjacent when they differ in one bit
//   coxeter           24-cycle 0..23 plus centres 24..27
//   bad-family(i)     the i-th exceptional graph, 1..8
Graph cycle_graph(int n);
Graph path_graph(int n);  // n vertices
Graph complete_graph(int n);
Graph complete_bipartite(int m, int n);
Graph kneser_graph(int a, int b);
Graph hypercube_graph(int d);
Graph theta_graph(int a, int b, int c);  // path lengths a, b, c between two poles
Graph coxeter_graph();
Graph petersen_graph();

// Automorphism generators of coxeter_graph(), validated on load.
const std::vector<std::vector<int>>& coxeter_automorphisms();
// Generators of the symmetric group on the ground set, acting on kneser_graph(a,b).
std::vector<std::vector<int>> kneser_automorphisms(int a, int b);

// Name + integer parameters, e.g. ("cycle", {7}), ("kneser", {7,3}), ("coxeter", {}).
Graph generate_named(const std::string& family, const std::vector<int>& params);

Graph gen_incidence(int n, int d);
Graph gen_girth6_family(int n);
Graph subdivide(const Graph& g, int k);
Graph split_construction(const Graph& g);
Graph graph_square(const Graph& g);
Graph join_clique(const Graph& g, int t);  // G + K_t, clique vertices appended
Graph disjoint_union(const Graph& a, const Graph& b);

// Vertex roles in a graph obtained by expanding a multigraph with hammocks.
enum class HammockRole {
  kHubFree,     // degree >= 3, not an end of a suspended 3-path
  kHubPaired,   // degree >= 3, end of a suspended 3-path
  kShortMid,    // middle of a suspended 2-path
  kLongInner,   // inner vertex of a suspended 3-path
};

struct HammockExpansion {
  Graph graph;
  std::vector<HammockRole> roles;
};

// Simple edges become suspended 2-paths, double edges become hammocks.
// Original vertices keep ids 0..n-1.
HammockExpansion hammock_expand(const MultiGraph& h);

}  // namespace fdom
