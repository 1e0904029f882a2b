#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fdomlab/colouring.hpp"
#include "fdomlab/fdom.hpp"
#include "fdomlab/graph.hpp"
#include "fdomlab/rational.hpp"

namespace fdom {

inline constexpr int kDefaultIndependentEnumerationOrder = 25;
inline constexpr int kDefaultChromaticCap = 40;
inline constexpr std::int64_t kDefaultTimeBudgetMs = 60000;

// Budget for exhaustive searches: FDOMLAB_TIME_BUDGET_MS when set, else the default.
std::int64_t time_budget_ms();

struct FractionalChromaticResult {
  Rational value;
  // Independent sets with weights summing to value; every vertex is covered
  // with total weight at least 1.
  std::vector<PrimalColumn> classes;
  // Vertex weights with total value and weight at most 1 on every independent set.
  WeightVector dual;
};

// Exact LP over maximal independent sets, enumerated up to
// kDefaultIndependentEnumerationOrder vertices and generated on demand
// (exact maximum-weight independent set pricing) beyond.
FractionalChromaticResult fractional_chromatic(const Graph& g);
CheckResult verify_fractional_chromatic(const Graph& g, const FractionalChromaticResult& r);
// Proper (p:q)-colouring with p/q equal to the fractional chromatic number.
FractionalColouring proper_colouring(const Graph& g, const FractionalChromaticResult& r);

struct MaxWeightIndependentSet {
  VertexSet set;
  Rational weight;
};
MaxWeightIndependentSet max_weight_independent_set(const Graph& g, const WeightVector& w);
int clique_number(const Graph& g);

struct ChromaticResult {
  int lower = 0;
  int upper = 0;
  std::vector<int> colouring;  // proper, colours 0..upper-1
  bool exact() const { return lower == upper; }
};

// DSATUR branch and bound with a clique lower bound. When the time budget
// runs out the result carries the bounds reached so far (exact() is false).
// Throws CapExceeded when g.order() > cap.
ChromaticResult chromatic_number(const Graph& g, int cap = kDefaultChromaticCap,
                                 std::int64_t budget_ms = time_budget_ms());

struct ReductionReport {
  Rational chi_f;
  Rational fdom_split;      // fractional domatic number of the split graph
  bool chi_side = false;    // chi_f <= 3
  bool fdom_side = false;   // fdom of the split graph >= 3
  bool extension_checked = false;
  bool extension_ok = false;    // colouring of g extended to the edge vertices dominates
  bool restriction_checked = false;
  bool restriction_ok = false;  // dominating colouring of the split graph is proper on g
  bool ok() const {
    return chi_side == fdom_side && (!extension_checked || extension_ok) && (!restriction_checked || restriction_ok);
  }
};

// Compares chi_f(g) <= 3 with fdom(split_construction(g)) >= 3, and checks the
// colouring transfers in both directions when they apply.
ReductionReport check_reduction(const Graph& g);

struct FullnessReport {
  int degree = 0;
  ChromaticResult chi_square;
  Rational chi_f_square;
  std::optional<bool> dom_full;  // unknown when the chromatic bounds straddle degree + 1
  bool fdom_full = false;
  std::optional<int> dom_direct;
  std::optional<Rational> fdom_direct;
  bool consistent = true;  // direct values agree with the square-graph verdicts
};

struct FullnessOptions {
  bool direct_dom = false;   // run domatic_number as a cross-check
  bool direct_fdom = false;  // run the fractional domatic LP as a cross-check
  std::int64_t budget_ms = time_budget_ms();
};

// Needs a regular graph.
FullnessReport fullness_check(const Graph& g, const FullnessOptions& options = {});

struct JoinReport {
  Rational fdom_graph;
  Rational fdom_join;
  int t = 0;
  bool ok() const { return fdom_join == fdom_graph + Rational(t); }
};

JoinReport join_check(const Graph& g, int t, int cap = kDefaultEnumerationCap);

}  // namespace fdom
