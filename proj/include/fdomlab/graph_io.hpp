#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "fdomlab/graph.hpp"

namespace fdom {

// Text format: "p <n> <m>" header, then m lines "e <u> <v>" with 0-based ids.
// Lines starting with '#' are comments.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
Graph parse_graph(const std::string& text);
MultiGraph read_multigraph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);

// graph6 encoding as produced by nauty's geng.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

// One-line permutations (space separated images of 0..n-1), one per line.
std::vector<std::vector<int>> parse_permutations(const std::string& text);

}  // namespace fdom
