#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fdomlab/colouring.hpp"
#include "fdomlab/domset.hpp"
#include "fdomlab/graph.hpp"
#include "fdomlab/rational.hpp"
#include "fdomlab/structure.hpp"

namespace fdom {

struct PrimalColumn {
  VertexSet set;
  Rational x;
};

// Weights on dominating sets with every vertex load at most 1.
struct PrimalCertificate {
  std::vector<PrimalColumn> columns;
  Rational objective;
};

// Vertex weights under which every dominating set weighs at least 1.
struct DualCertificate {
  WeightVector weights;
  Rational total;
};

struct FdomResult {
  Rational value;
  PrimalCertificate primal;
  DualCertificate dual;
};

struct CheckResult {
  bool ok = true;
  std::string message;  // first violated constraint when !ok
};

// Exact LP over all minimal dominating sets.
FdomResult fdom_exact(const Graph& g, int cap = kDefaultEnumerationCap);

struct ColgenOptions {
  int max_iterations = 2000;
};
// Column generation with exact pricing. On the iteration cap, throws
// CapExceeded whose message carries the current lower and upper bounds.
FdomResult fdom_colgen(const Graph& g, const ColgenOptions& options = {});

CheckResult verify_primal(const Graph& g, const PrimalCertificate& c);
CheckResult verify_dual(const Graph& g, const DualCertificate& c);

DualCertificate make_dual(WeightVector w);

// Closed-form fractional bottlenecks and packings.
DualCertificate neighbourhood_certificate(const Graph& g, int v);
DualCertificate uniform_certificate(const Graph& g);  // 1/gamma everywhere
DualCertificate hammock_certificate(const Graph& g, const Hammock& h);
// Bottleneck of gen_incidence(d(q+1), d) with A-weight 1/m and B-weight
// 1/C(n-m, d), m = hnd_threshold(d, q).
int hnd_threshold(int d, int q);
DualCertificate hnd_certificate(int d, int q);
DualCertificate girth6_certificate(int n);  // on gen_girth6_family(n)
DualCertificate kmn_dual_certificate(int m, int n);
PrimalCertificate kmn_primal_certificate(int m, int n);  // needs n <= m

// Uniform packing over the orbit of a minimum dominating set under a
// vertex-transitive group given by generators. Objective n/|d_min|.
PrimalCertificate symmetric_certificate(const Graph& g, const std::vector<std::vector<int>>& generators,
                                        const VertexSet& d_min, std::size_t orbit_cap = 1000000);

struct SampleReport {
  std::vector<double> frequency;  // empirical P[v in D]
  double max_frequency = 0;
  double bound = 0;  // p + (1-p)^(delta+1)
  bool all_dominating = true;
  std::int64_t trials = 0;
};
// Random set X with independent p-coins, then D = X plus the vertices X misses.
SampleReport sample_lnbound(const Graph& g, const Rational& p, std::int64_t trials, std::uint64_t seed);

// Exhaustive search for a dominating (p:q)-colouring. Throws CapExceeded
// after node_cap search nodes.
std::optional<FractionalColouring> pq_colouring_exists(const Graph& g, int p, int q,
                                                       std::int64_t node_cap = 50000000);

}  // namespace fdom
