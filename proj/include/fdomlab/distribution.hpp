#pragma once

#include <vector>

#include "fdomlab/colouring.hpp"
#include "fdomlab/fdom.hpp"
#include "fdomlab/graph.hpp"
#include "fdomlab/isomorphism.hpp"
#include "fdomlab/rational.hpp"
#include "fdomlab/structure.hpp"
#include "fdomlab/vertex_set.hpp"

namespace fdom {

struct Atom {
  VertexSet set;
  Rational p;
  friend bool operator==(const Atom&, const Atom&) = default;
};

// A random vertex subset of a host graph given by its finite support.
class DominatingDistribution {
 public:
  DominatingDistribution() = default;
  // Merges repeated sets and drops zero masses. Throws InvalidArgument on a
  // negative mass, a total other than 1, or a vertex outside the host.
  DominatingDistribution(GraphPtr host, std::vector<Atom> atoms);

  const Graph& host() const { return *host_; }
  const GraphPtr& host_ptr() const { return host_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

 private:
  GraphPtr host_;
  std::vector<Atom> atoms_;  // sorted by set
};

// Per-vertex required domination probability.
using DemandFunction = std::vector<Rational>;

DemandFunction constant_demand(int n, const Rational& value);
// 4/5 on degree-1 vertices, 1 elsewhere.
DemandFunction degree_demand(const Graph& g);

Rational membership(const DominatingDistribution& d, int v);
Rational dominated_prob(const DominatingDistribution& d, int v);
std::vector<Rational> memberships(const DominatingDistribution& d);
std::vector<Rational> dominated_probs(const DominatingDistribution& d);

// membership(v) == r and dominated_prob(v) >= f(v) for every vertex.
bool verify_f_dominating(const DominatingDistribution& d, const DemandFunction& f, const Rational& r);
CheckResult check_f_dominating(const DominatingDistribution& d, const DemandFunction& f, const Rational& r);

// Uniformly random colour class.
DominatingDistribution colouring_to_distribution(GraphPtr g, const FractionalColouring& c);
// Needs constant membership; p is the common denominator of the masses.
FractionalColouring distribution_to_colouring(const DominatingDistribution& d);

// Raises every membership to exactly r by adding vertices to slices of
// existing atoms. Throws InvalidArgument if some membership exceeds r.
DominatingDistribution complete_to_r(const DominatingDistribution& d, const Rational& r);

// Glues distributions of two graphs that share exactly one vertex of g.
// map_i sends host_i vertices into g; the images must cover g, meet in one
// vertex, and together carry exactly the edges of g.
DominatingDistribution glue_at_cutvertex(GraphPtr g, const DominatingDistribution& d0, const VertexMap& map0,
                                         const DominatingDistribution& d1, const VertexMap& map1,
                                         const Rational& r);
// Identifies v0 of d0's host with v1 of d1's host. The result keeps d0's ids
// and appends the remaining vertices of d1's host in order.
DominatingDistribution glue_at_cutvertex(const DominatingDistribution& d0, int v0,
                                         const DominatingDistribution& d1, int v1, const Rational& r);

struct CornerStats {
  Rational alpha;  // P[u in D | v in D]
  Rational beta;   // P[u not in D | v not in D]
};

CornerStats corner_stats(const DominatingDistribution& d, int u, int v);

// Combines d' (on one side of a 2-separation {u, v} of g) with two
// distributions d0, d1 of the other side H. In d0, u and v never appear
// together; in d1 they always appear together. The common images of map_prime
// and map_h are u and v. Requires r < 1/2 and membership r in all three.
DominatingDistribution extend_over_pair(GraphPtr g, const DominatingDistribution& d_prime,
                                        const VertexMap& map_prime, const DominatingDistribution& d0,
                                        const DominatingDistribution& d1, const VertexMap& map_h,
                                        const Rational& r);

// (3k-1 : k)-colourings of the path u_0 .. u_length, k = ceil(length / 3).
// Internal vertices see all colours. phi0 gives the ends disjoint colour
// sets, phi1 gives them equal ones.
struct PathColouringTable {
  int length = 0;
  int k = 0;
  FractionalColouring lambda;
  FractionalColouring mu;
  FractionalColouring nu;
  FractionalColouring phi0;
  FractionalColouring phi1;
};

PathColouringTable path_tables(int length);

// d_prime lives on g minus the inner vertices of p, embedded by map_prime.
// Needs k/(3k-1) <= r < 1/2 with k = ceil(length / 3).
DominatingDistribution attach_suspended_path(GraphPtr g, const DominatingDistribution& d_prime,
                                            const VertexMap& map_prime, const SuspendedPath& p,
                                            const Rational& r);
// Adds a new path of the given length between u and v of d_prime's host.
// New vertices are appended from the u end.
DominatingDistribution attach_path(const DominatingDistribution& d_prime, int u, int v, int length,
                                   const Rational& r);

// Uniform over the rotations of {0, 3, 6, ...} on cycle_graph(n).
DominatingDistribution cycle_distribution(int n);

}  // namespace fdom
