#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fdomlab/distribution.hpp"
#include "fdomlab/generators.hpp"

namespace fdom {

inline constexpr int kDefaultCoinCap = 16;

// Roles of a graph obtained from a multigraph of minimum degree >= 3 and
// multiplicity <= 2 by turning simple edges into suspended 2-paths and
// double edges into hammocks. Throws InvalidArgument for other graphs.
std::vector<HammockRole> hammock_roles(const Graph& g);

// Random dominating set built from independent coins on the degree >= 3
// vertices, with every coin outcome enumerated. Memberships are at most 2/5
// before completion; with complete = true they are raised to exactly 2/5.
// Throws CapExceeded when there are more than coin_cap coins.
DominatingDistribution base_case_hammock(GraphPtr g, const std::vector<HammockRole>& roles,
                                         int coin_cap = kDefaultCoinCap, bool complete = true);

enum class Reduction {
  kEdge,            // g is K2
  kCutVertex,       // split at a cut vertex and glue
  kDenseEdge,       // delete an edge between two degree >= 3 vertices
  kTwinTwoPaths,    // drop one of two suspended 2-paths with the same ends
  kTwinThreePaths,  // drop one of two suspended 3-paths with the same ends
  kLoneThreePath,   // contract a suspended 3-path whose ends share no neighbour
  kLongPath,        // strip a suspended path of length >= 4
  kCycle,
  kHammockBase,
  kTable,           // a reduction landed on an exceptional graph
};
inline constexpr int kReductionKinds = 10;
std::string reduction_name(Reduction r);

struct ConstructTrace {
  std::array<std::int64_t, kReductionKinds> counts{};
  std::int64_t& operator[](Reduction r) { return counts[static_cast<int>(r)]; }
  std::int64_t operator[](Reduction r) const { return counts[static_cast<int>(r)]; }
};

// Random dominating set of a connected graph outside the exceptional family
// with membership exactly 2/5 and domination probability >= degree_demand(g).
// Throws BadFamilyError for exceptional graphs and InvalidArgument for
// disconnected graphs or a single vertex. The result is checked before it is
// returned; a failed check raises InternalError.
DominatingDistribution construct52(const Graph& g, int coin_cap = kDefaultCoinCap,
                                   ConstructTrace* trace = nullptr);

// Minimum degree >= 2 and girth >= 15k - 14, k >= 2: membership exactly
// k/(3k-1) and every vertex dominated with probability 1. Built block by
// block, stripping suspended paths of length >= 3k - 2 down to cycles.
// Planarity is assumed, not checked; a block without a long enough path
// raises InvalidArgument.
DominatingDistribution planar_girth_construct(const Graph& g, int k);

struct IntersectingFamily {
  int a_size = 0;
  int b_size = 0;
  std::int64_t t = 0;                          // size of the ground set
  std::vector<std::vector<std::int64_t>> sets;  // A members first, then B members
  bool sizes_ok = false;                       // |set| = 2t/5
  bool a_pairs_ok = false;                     // |phi(a) & phi(a')| = t/5
  bool b_pairs_ok = false;                     // |phi(b) & phi(x)| = 4t/25
  bool ok() const { return sizes_ok && a_pairs_ok && b_pairs_ok; }
};

inline constexpr std::int64_t kDefaultFamilyCap = 1'000'000;
// Ground set [2]^A x [5]^(B + 1 extra coordinate); throws CapExceeded when
// 2^a * 5^(b+1) exceeds the cap.
IntersectingFamily intersecting_family(int a_size, int b_size, std::int64_t cap = kDefaultFamilyCap);

}  // namespace fdom
