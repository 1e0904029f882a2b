#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fdomlab/graph.hpp"
#include "fdomlab/isomorphism.hpp"

namespace fdom {

// The eight connected graphs of minimum degree 2 with fdom < 5/2.
// Index 1..8: C4, K23, C7, 2C4 (two C4 sharing a vertex), then C7 with
// chord sets {25}, {03,04}, {15,26}, {15,26,25} on the cycle 0..6.
inline constexpr int kBadFamilySize = 8;

struct BadFamilyId {
  int index;
  std::string name;
};

struct BadFamilyMatch {
  BadFamilyId id;
  VertexMap to_reference;  // input vertex -> reference vertex
};

const Graph& bad_family_graph(int index);
const std::string& bad_family_name(int index);
std::optional<BadFamilyMatch> bad_family_match(const Graph& g);
std::optional<BadFamilyId> bad_family_check(const Graph& g);
inline bool in_bad_family(const Graph& g) { return bad_family_check(g).has_value(); }

}  // namespace fdom
