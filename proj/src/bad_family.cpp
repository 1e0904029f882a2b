#include "fdomlab/bad_family.hpp"

#include <array>

#include "fdomlab/errors.hpp"
#include "fdomlab/generators.hpp"

namespace fdom {

namespace {

Graph cycle_with_chords(std::initializer_list<Edge> chords) {
  std::vector<Edge> es;
  for (int i = 0; i < 7; ++i) es.push_back({i, (i + 1) % 7});
  es.insert(es.end(), chords.begin(), chords.end());
  return Graph(7, es);
}

struct Catalog {
  std::array<Graph, kBadFamilySize> graphs;
  std::array<std::string, kBadFamilySize> names;
};

const Catalog& catalog() {
  static const Catalog c = [] {
    Catalog c;
    c.graphs = {
        cycle_graph(4),
        // A, B, C, D, O: the 4-cycle ABCD plus O joined to B and D.
        Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 1}}),
        cycle_graph(7),
        // Path x1..x7 with x1x4 and x4x7.
        Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 3}, {3, 6}}),
        cycle_with_chords({{2, 5}}),
        cycle_with_chords({{0, 3}, {0, 4}}),
        cycle_with_chords({{1, 5}, {2, 6}}),
        cycle_with_chords({{1, 5}, {2, 6}, {2, 5}}),
    };
    c.names = {"C4", "K23", "C7", "2C4", "C7+e", "C7+fan", "C7+2e", "C7+3e"};
    for (int i = 0; i < kBadFamilySize; ++i)
      for (int j = i + 1; j < kBadFamilySize; ++j)
        if (isomorphic(c.graphs[i], c.graphs[j]))
          throw InternalError("exceptional catalogue has isomorphic members");
    return c;
  }();
  return c;
}

}  // namespace

const Graph& bad_family_graph(int index) {
  if (index < 1 || index > kBadFamilySize) throw InvalidArgument("bad family index out of range");
  return catalog().graphs[index - 1];
}

const std::string& bad_family_name(int index) {
  if (index < 1 || index > kBadFamilySize) throw InvalidArgument("bad family index out of range");
  return catalog().names[index - 1];
}

std::optional<BadFamilyMatch> bad_family_match(const Graph& g) {
  if (g.order() != 4 && g.order() != 5 && g.order() != 7) return std::nullopt;
  const Catalog& c = catalog();
  for (int i = 0; i < kBadFamilySize; ++i) {
    if (g.edge_count() != c.graphs[i].edge_count()) continue;
    if (auto m = find_isomorphism(g, c.graphs[i])) return BadFamilyMatch{{i + 1, c.names[i]}, *m};
  }
  return std::nullopt;
}

std::optional<BadFamilyId> bad_family_check(const Graph& g) {
  if (auto m = bad_family_match(g)) return m->id;
  return std::nullopt;
}

}  // namespace fdom
