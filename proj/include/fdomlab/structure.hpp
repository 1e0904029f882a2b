#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "fdomlab/graph.hpp"

namespace fdom {

// Path u_0..u_l whose ends have degree >= 3 and whose inner vertices have
// degree 2. Ends are distinct. Stored with u_0 < u_l.
struct SuspendedPath {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }
  std::vector<int> inner() const { return {vertices.begin() + 1, vertices.end() - 1}; }
  friend bool operator==(const SuspendedPath&, const SuspendedPath&) = default;
};

// A suspended 2-path and a suspended 3-path between the same non-adjacent ends.
struct Hammock {
  int u;
  int v;
  SuspendedPath two_path;
  SuspendedPath three_path;
};

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // each sorted; ordered by smallest vertex
  std::vector<int> cut_vertices;         // sorted
};

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

// Component index per vertex, numbered in order of smallest member.
std::vector<int> components(const Graph& g);
bool is_connected(const Graph& g);
BlockDecomposition blocks(const Graph& g);
std::vector<int> cut_vertices(const Graph& g);  // sorted
bool is_two_connected(const Graph& g);  // connected, >= 3 vertices, no cut vertex
int girth(const Graph& g);              // kInfiniteGirth when acyclic

// All maximal suspended paths (length >= 1), sorted by vertex sequence.
std::vector<SuspendedPath> suspended_paths(const Graph& g);
std::vector<Hammock> hammocks(const Graph& g);
// Pairs of distinct suspended paths with the same ends and length.
std::vector<std::pair<SuspendedPath, SuspendedPath>> twin_paths(const Graph& g);

// A longest suspended path of length >= min_length + 1, if any.
// Requires g 2-connected with minimum degree >= 2 and maximum degree >= 3.
std::optional<SuspendedPath> find_long_suspended_path(const Graph& g, int min_length);

struct StructureReport {
  int min_degree = 0;
  int max_degree = 0;
  bool connected = false;
  bool two_connected = false;
  int girth = kInfiniteGirth;
  BlockDecomposition blocks;
  std::vector<SuspendedPath> suspended_paths;
  std::vector<Hammock> hammocks;
  std::vector<std::pair<SuspendedPath, SuspendedPath>> twins;
};

StructureReport structure_report(const Graph& g);

}  // namespace fdom
