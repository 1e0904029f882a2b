#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fdomlab/graph.hpp"

namespace fdom {

// map[p] = host vertex assigned to pattern vertex p.
using VertexMap = std::vector<int>;

// Enumerates bijections V(pattern) -> V(host) that send every pattern edge to
// a host edge and respect the (pattern, host) pins. visit returns false to stop.
// Backtracking with degree pruning; meant for graphs of a dozen vertices.
void for_each_spanning_embedding(const Graph& pattern, const Graph& host,
                                 std::span<const std::pair<int, int>> pins,
                                 const std::function<bool(const VertexMap&)>& visit);

std::optional<VertexMap> find_spanning_embedding(const Graph& pattern, const Graph& host,
                                                 std::span<const std::pair<int, int>> pins = {});
std::optional<VertexMap> find_isomorphism(const Graph& a, const Graph& b);
bool isomorphic(const Graph& a, const Graph& b);
std::vector<VertexMap> automorphisms(const Graph& g);

}  // namespace fdom
