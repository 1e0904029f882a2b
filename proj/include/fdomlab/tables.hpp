#pragma once

#include <string>
#include <vector>

#include "fdomlab/colouring.hpp"
#include "fdomlab/graph.hpp"

namespace fdom {

// A hand-made fractional dominating colouring of a small graph.
// Every vertex other than `marked` sees at least `min_span` colours; the
// marked vertex, if any, sees exactly `marked_span`.
struct ColouringTable {
  std::string key;
  std::string description;
  Graph graph;
  FractionalColouring colouring;
  int marked = -1;
  int marked_span = 0;
  int min_span = 0;

  bool dominating() const { return marked < 0 && min_span == colouring.p; }
  bool quasi() const { return marked >= 0; }
};

// All tables, checked on first use; a table that fails its own guarantee or
// sits on the wrong graph raises InternalError.
const std::vector<ColouringTable>& colouring_tables();
const ColouringTable& colouring_table(const std::string& key);  // InvalidArgument if unknown
FractionalColouring exceptional_colouring(const std::string& key);
std::vector<std::string> colouring_table_keys();

}  // namespace fdom
