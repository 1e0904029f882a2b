#include "fdomlab/colouring.hpp"

#include <algorithm>

#include "fdomlab/errors.hpp"

namespace fdom {

void check_shape(const Graph& g, const FractionalColouring& c) {
  if (c.q < 1 || c.q > c.p) throw InvalidArgument("colouring needs 1 <= q <= p");
  if (static_cast<int>(c.phi.size()) != g.order()) throw InvalidArgument("colouring has wrong vertex count");
  for (const auto& s : c.phi) {
    if (static_cast<int>(s.size()) != c.q) throw InvalidArgument("colour list of wrong size");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 1 || s[i] > c.p) throw InvalidArgument("colour out of range");
      if (i > 0 && s[i] <= s[i - 1]) throw InvalidArgument("colour list not sorted and distinct");
    }
  }
}

int span_at(const Graph& g, const FractionalColouring& c, int v) {
  std::vector<char> seen(c.p + 1, 0);
  int count = 0;
  auto mark = [&](int x) {
    for (int col : c.phi[x])
      if (!seen[col]) {
        seen[col] = 1;
        ++count;
      }
  };
  mark(v);
  for (int w : g.neighbors(v)) mark(w);
  return count;
}

bool is_dominating_colouring(const Graph& g, const FractionalColouring& c) {
  check_shape(g, c);
  for (int v = 0; v < g.order(); ++v)
    if (span_at(g, c, v) != c.p) return false;
  return true;
}

bool is_proper_colouring(const Graph& g, const FractionalColouring& c) {
  check_shape(g, c);
  for (const Edge& e : g.edges()) {
    const auto& a = c.phi[e.u];
    const auto& b = c.phi[e.v];
    std::vector<int> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    if (!both.empty()) return false;
  }
  return true;
}

}  // namespace fdom
