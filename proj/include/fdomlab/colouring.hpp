#pragma once

#include <vector>

#include "fdomlab/graph.hpp"

namespace fdom {

// Each vertex receives q colours out of 1..p.
struct FractionalColouring {
  int p = 1;
  int q = 1;
  std::vector<std::vector<int>> phi;  // sorted colour lists, one per vertex
};

// Throws InvalidArgument unless 1 <= q <= p, every list has exactly q distinct
// colours in 1..p, and there is one list per vertex of g.
void check_shape(const Graph& g, const FractionalColouring& c);

// Number of distinct colours on N[v].
int span_at(const Graph& g, const FractionalColouring& c, int v);
// Every closed neighbourhood sees all p colours.
bool is_dominating_colouring(const Graph& g, const FractionalColouring& c);
// Adjacent vertices receive disjoint colour sets.
bool is_proper_colouring(const Graph& g, const FractionalColouring& c);

}  // namespace fdom
