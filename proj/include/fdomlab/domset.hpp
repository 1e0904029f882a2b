#pragma once

#include <functional>
#include <vector>

#include "fdomlab/graph.hpp"
#include "fdomlab/rational.hpp"
#include "fdomlab/vertex_set.hpp"

namespace fdom {

inline constexpr int kDefaultEnumerationCap = 20;
inline constexpr int kDefaultDomaticCap = 30;

using WeightVector = std::vector<Rational>;

// N[s].
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
bool is_dominating(const Graph& g, const VertexSet& s);
bool is_minimal_dominating(const Graph& g, const VertexSet& s);

// Calls visit once per inclusion-minimal dominating set; visit returns false
// to stop early. Throws CapExceeded when g.order() > cap (cap itself <= 64).
void for_each_minimal_dominating_set(const Graph& g, const std::function<bool(const VertexSet&)>& visit,
                                     int cap = kDefaultEnumerationCap);
std::vector<VertexSet> minimal_dominating_sets(const Graph& g, int cap = kDefaultEnumerationCap);

struct DominationResult {
  int size;
  VertexSet witness;
};
DominationResult domination_number(const Graph& g);

struct WeightedDominatingSet {
  VertexSet set;
  Rational weight;
};
// Minimum total weight over dominating sets. Among optimal sets the smallest
// under VertexSet ordering is returned. Weights must be non-negative.
WeightedDominatingSet min_weight_dominating_set(const Graph& g, const WeightVector& w);

struct DomaticResult {
  int number;
  std::vector<VertexSet> classes;  // a partition of V into dominating sets
};
// Exact: exhibits a partition and refutes one more class by exhaustive search.
DomaticResult domatic_number(const Graph& g, int cap = kDefaultDomaticCap);
// Partition of V into k dominating sets, or empty when none exists.
std::vector<VertexSet> domatic_partition(const Graph& g, int k);

struct BottleneckCheck {
  bool valid;
  Rational total;
  Rational min_weight;
  VertexSet min_set;
};
// w is a fractional bottleneck iff every dominating set has weight >= 1.
BottleneckCheck verify_bottleneck(const Graph& g, const WeightVector& w);

}  // namespace fdom
