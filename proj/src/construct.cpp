#include "fdomlab/construct.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "atoms.hpp"
#include "fdomlab/bad_family.hpp"
#include "fdomlab/domset.hpp"
#include "fdomlab/errors.hpp"
#include "fdomlab/isomorphism.hpp"
#include "fdomlab/structure.hpp"
#include "fdomlab/tables.hpp"

namespace fdom {

using detail::Atoms;

namespace {

const Rational kTwoFifths(2, 5);

Atoms table_atoms(const Graph& g, const ColouringTable& t, const VertexMap& map) {
  FractionalColouring c;
  c.p = t.colouring.p;
  c.q = t.colouring.q;
  c.phi.assign(g.order(), {});
  for (int x = 0; x < t.graph.order(); ++x) c.phi[map[x]] = t.colouring.phi[x];
  return detail::from_colouring(c);
}

bool is_two_fifths(const ColouringTable& t) { return 5 * t.colouring.q == 2 * t.colouring.p; }

// A dominating (5:2) table whose graph is a spanning subgraph of g.
std::optional<Atoms> dominating_table(const Graph& g) {
  for (const auto& t : colouring_tables()) {
    if (!t.dominating() || !is_two_fifths(t) || t.graph.order() != g.order() ||
        t.graph.edge_count() > g.edge_count())
      continue;
    if (auto m = find_spanning_embedding(t.graph, g)) return table_atoms(g, t, *m);
  }
  return std::nullopt;
}

// A (5:2) table of an exceptional graph whose marked vertex lands on v.
Atoms quasi_table(const Graph& g, int v) {
  for (const auto& t : colouring_tables()) {
    if (!t.quasi() || !is_two_fifths(t) || t.graph.order() != g.order() || t.graph.edge_count() > g.edge_count())
      continue;
    std::pair<int, int> pin{t.marked, v};
    if (auto m = find_spanning_embedding(t.graph, g, std::span(&pin, 1))) return table_atoms(g, t, *m);
  }
  throw InternalError("no quasi-dominating table for an exceptional part at vertex " + std::to_string(v));
}

std::vector<int> all_but(int n, const VertexSet& drop) {
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (!drop.contains(v)) keep.push_back(v);
  return keep;
}

std::vector<int> cycle_order(const Graph& g) {
  std::vector<int> order{0};
  int prev = -1, cur = 0;
  while (true) {
    const auto& nb = g.neighbors(cur);
    int nxt = nb[0] == prev ? nb[1] : nb[0];
    if (nxt == 0) break;
    order.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  return order;
}

Atoms cycle_atoms(const Graph& g) {
  auto order = cycle_order(g);
  if (static_cast<int>(order.size()) != g.order()) throw InternalError("cycle walk did not visit every vertex");
  return detail::lift(cycle_distribution(g.order()).atoms(), order);
}

void check_members(const Atoms& a, int n, const Rational& r, const char* where) {
  auto m = detail::member_sums(a, n);
  for (int v = 0; v < n; ++v)
    if (m[v] > r)
      throw InternalError(std::string(where) + ": membership of vertex " + std::to_string(v) + " is " + m[v].str());
}

Atoms hammock_atoms(const Graph& g, const std::vector<HammockRole>& roles, int coin_cap) {
  const int n = g.order();
  std::vector<int> free_hubs, paired_hubs, short_mids;
  for (int v = 0; v < n; ++v) {
    if (roles[v] == HammockRole::kHubFree) free_hubs.push_back(v);
    if (roles[v] == HammockRole::kHubPaired) paired_hubs.push_back(v);
    if (roles[v] == HammockRole::kShortMid) short_mids.push_back(v);
  }
  const int coins = static_cast<int>(free_hubs.size() + paired_hubs.size());
  if (coins > coin_cap)
    throw CapExceeded("hammock base case needs " + std::to_string(coins) + " coins, cap is " +
                      std::to_string(coin_cap));

  std::vector<std::array<int, 4>> long_paths;  // u, a, b, x along the path
  for (const auto& p : suspended_paths(g))
    if (p.length() == 3) long_paths.push_back({p.vertices[0], p.vertices[1], p.vertices[2], p.vertices[3]});

  // Outcomes on the paired hubs: nothing with mass 1/5, otherwise a uniform subset.
  std::vector<std::pair<VertexSet, Rational>> paired_out{{VertexSet{}, Rational(1, 5)}};
  const int k1 = static_cast<int>(paired_hubs.size());
  const Rational each(4, 5 * (1LL << k1));
  for (std::int64_t mask = 0; mask < (1LL << k1); ++mask) {
    VertexSet s;
    for (int i = 0; i < k1; ++i)
      if (mask >> i & 1) s.insert(paired_hubs[i]);
    paired_out.push_back({s, each});
  }

  const int k0 = static_cast<int>(free_hubs.size());
  std::vector<Rational> in_pow{1}, out_pow{1};
  for (int i = 0; i < k0; ++i) {
    in_pow.push_back(in_pow.back() * kTwoFifths);
    out_pow.push_back(out_pow.back() * Rational(3, 5));
  }

  Atoms out;
  for (std::int64_t mask = 0; mask < (1LL << k0); ++mask) {
    VertexSet free_in;
    int picked = 0;
    for (int i = 0; i < k0; ++i)
      if (mask >> i & 1) {
        free_in.insert(free_hubs[i]);
        ++picked;
      }
    const Rational free_mass = in_pow[picked] * out_pow[k0 - picked];
    for (const auto& [paired_in, paired_mass] : paired_out) {
      const VertexSet hubs_in = free_in | paired_in;
      VertexSet lone_mids;
      for (int a : short_mids)
        if (!g.neighborhood(a).intersects(hubs_in)) lone_mids.insert(a);
      VertexSet forced;
      std::vector<std::vector<int>> options;
      for (const auto& [u, a, b, x] : long_paths) {
        bool u_in = paired_in.contains(u), x_in = paired_in.contains(x);
        if (!u_in && x_in) {
          forced.insert(a);
        } else if (u_in && !x_in) {
          forced.insert(b);
        } else if (!u_in && !x_in) {
          options.push_back({a, b});
        }
      }
      for (int v : free_hubs)
        if (!free_in.contains(v) && !g.neighborhood(v).intersects(lone_mids)) options.push_back(g.neighbors(v));

      // One shared uniform variable drives every uniform choice; each choice
      // on its own is still uniform.
      std::set<Rational> cuts{Rational(0), Rational(1)};
      for (const auto& opt : options) {
        const auto len = static_cast<long long>(opt.size());
        for (long long j = 1; j < len; ++j) cuts.insert(Rational(j, len));
      }
      const VertexSet base = hubs_in | lone_mids | forced;
      const Rational mass = free_mass * paired_mass;
      for (auto it = cuts.begin(); std::next(it) != cuts.end(); ++it) {
        const Rational& t = *it;
        VertexSet s = base;
        for (const auto& opt : options) {
          const auto len = static_cast<std::int64_t>(opt.size());
          s.insert(opt[t.small_num() * len / t.small_den()]);
        }
        out.push_back({s, mass * (*std::next(it) - t)});
      }
    }
  }
  detail::normalise(out);
  for (const auto& a : out)
    if (!is_dominating(g, a.set)) throw InternalError("hammock base case produced a non-dominating set");
  check_members(out, n, kTwoFifths, "hammock base case");
  return out;
}

class Builder {
 public:
  Builder(int coin_cap, ConstructTrace* trace) : coin_cap_(coin_cap), trace_(trace) {}

  Atoms solve(const Graph& g) {
    if (g.order() == 2) {
      count(Reduction::kEdge);
      const auto& t = colouring_table("k2-partial");
      return detail::from_colouring(t.colouring);
    }
    auto cuts = cut_vertices(g);
    if (!cuts.empty()) return split(g, cuts.front());
    if (auto a = dense_edge(g)) return *a;
    auto paths = suspended_paths(g);
    if (auto a = twin_two(g)) return *a;
    if (auto a = twin_three(g)) return *a;
    if (auto a = lone_three(g, paths)) return *a;
    if (auto a = long_path(g, paths)) return *a;
    if (g.max_degree() == 2) {
      count(Reduction::kCycle);
      return detail::complete(cycle_atoms(g), g.order(), kTwoFifths);
    }
    std::vector<HammockRole> roles;
    try {
      roles = hammock_roles(g);
    } catch (const InvalidArgument& e) {
      throw InternalError(std::string("no reduction applies: ") + e.what());
    }
    count(Reduction::kHammockBase);
    return detail::complete(hammock_atoms(g, roles, coin_cap_), g.order(), kTwoFifths);
  }

 private:
  void count(Reduction r) {
    if (trace_) ++(*trace_)[r];
  }

  // Used when a reduced graph is exceptional: g itself then spans a table graph.
  Atoms table_for(const Graph& g) {
    auto a = dominating_table(g);
    if (!a) throw InternalError("reduction reached an exceptional graph with no matching table");
    count(Reduction::kTable);
    return *a;
  }

  Atoms solve_part(const Graph& part, int v) {
    if (in_bad_family(part)) {
      count(Reduction::kTable);
      return quasi_table(part, v);
    }
    return solve(part);
  }

  Atoms split(const Graph& g, int cut) {
    const int n = g.order();
    const int start = cut == 0 ? 1 : 0;
    VertexSet side{start};
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : g.neighbors(x))
        if (y != cut && !side.contains(y)) {
          side.insert(y);
          stack.push_back(y);
        }
    }
    VertexSet part0 = side;
    part0.insert(cut);
    VertexSet part1 = VertexSet::range(n) - side;
    Atoms lifted[2];
    VertexSet nbrs[2];
    const VertexSet parts[2] = {part0, part1};
    for (int i = 0; i < 2; ++i) {
      auto sub = induced_subgraph(g, parts[i]);
      int local = static_cast<int>(std::find(sub.to_parent.begin(), sub.to_parent.end(), cut) - sub.to_parent.begin());
      lifted[i] = detail::lift(solve_part(*sub.graph, local), sub.to_parent);
      nbrs[i] = g.neighborhood(cut) & parts[i];
    }
    count(Reduction::kCutVertex);
    return detail::glue(lifted[0], lifted[1], cut, nbrs[0], nbrs[1], kTwoFifths);
  }

  std::optional<Atoms> dense_edge(const Graph& g) {
    for (const Edge& e : g.edges()) {
      if (g.degree(e.u) < 3 || g.degree(e.v) < 3) continue;
      Graph h = remove_edge(g, e.u, e.v);
      if (in_bad_family(h)) return table_for(g);
      count(Reduction::kDenseEdge);
      return solve(h);
    }
    return std::nullopt;
  }

  std::optional<Atoms> twin_two(const Graph& g) {
    for (const auto& [p, q] : twin_paths(g)) {
      if (p.length() != 2) continue;
      const int keep = std::min(p.vertices[1], q.vertices[1]);
      const int drop = std::max(p.vertices[1], q.vertices[1]);
      auto sub = induced_subgraph(g, all_but(g.order(), VertexSet{drop}));
      if (in_bad_family(*sub.graph)) return table_for(g);
      Atoms a = detail::lift(solve(*sub.graph), sub.to_parent);
      for (auto& x : a)
        if (x.set.contains(keep)) x.set.insert(drop);
      count(Reduction::kTwinTwoPaths);
      return a;
    }
    return std::nullopt;
  }

  std::optional<Atoms> twin_three(const Graph& g) {
    for (const auto& [p, q] : twin_paths(g)) {
      if (p.length() != 3) continue;
      const bool drop_q = p.inner() < q.inner();
      const auto& keep = drop_q ? p : q;
      const auto& drop = drop_q ? q : p;
      auto sub = induced_subgraph(g, all_but(g.order(), VertexSet{drop.vertices[1], drop.vertices[2]}));
      if (in_bad_family(*sub.graph)) return table_for(g);
      Atoms a = detail::lift(solve(*sub.graph), sub.to_parent);
      for (auto& x : a)
        for (int i = 1; i <= 2; ++i)
          if (x.set.contains(keep.vertices[i])) x.set.insert(drop.vertices[i]);
      count(Reduction::kTwinThreePaths);
      return a;
    }
    return std::nullopt;
  }

  std::optional<Atoms> lone_three(const Graph& g, const std::vector<SuspendedPath>& paths) {
    for (const auto& p : paths) {
      if (p.length() != 3) continue;
      const int u = p.vertices[0], x = p.vertices[1], y = p.vertices[2], v = p.vertices[3];
      if (g.adjacent(u, v) || g.neighborhood(u).intersects(g.neighborhood(v))) continue;

      // Contract the path into u.
      const int n = g.order();
      std::vector<int> keep = all_but(n, VertexSet{x, y, v});
      std::vector<int> index(n, -1);
      for (int i = 0; i < static_cast<int>(keep.size()); ++i) index[keep[i]] = i;
      index[v] = index[u];
      std::vector<Edge> es;
      for (const Edge& e : g.edges()) {
        if (e.u == x || e.u == y || e.v == x || e.v == y) continue;
        es.push_back({index[e.u], index[e.v]});
      }
      Graph h(static_cast<int>(keep.size()), es);
      if (in_bad_family(h)) return table_for(g);

      Atoms a = detail::lift(solve(h), keep);
      for (auto& at : a)
        if (at.set.contains(u)) at.set.insert(v);
      const VertexSet nu = g.closed_neighborhood(u), nv = g.closed_neighborhood(v);
      const Rational miss_u = detail::mass_where(a, [&](const VertexSet& s) { return !s.intersects(nu); });
      const Rational miss_v = detail::mass_where(a, [&](const VertexSet& s) { return !s.intersects(nv); });
      const Rational fifth(1, 5);
      Atoms out;
      for (const auto& at : a) {
        if (at.set.contains(u)) {
          out.push_back(at);
          continue;
        }
        const bool du = at.set.intersects(nu), dv = at.set.intersects(nv);
        VertexSet s = at.set;
        if (!du) s.insert(x);
        if (!dv) s.insert(y);
        if (!du || !dv) {
          out.push_back({s, at.p});
        } else if (miss_v >= fifth) {
          s.insert(x);
          out.push_back({s, at.p});
        } else if (miss_u >= fifth) {
          s.insert(y);
          out.push_back({s, at.p});
        } else {
          VertexSet sx = s, sy = s;
          sx.insert(x);
          sy.insert(y);
          out.push_back({sx, at.p / 2});
          out.push_back({sy, at.p / 2});
        }
      }
      detail::normalise(out);
      check_members(out, n, kTwoFifths, "suspended 3-path contraction");
      count(Reduction::kLoneThreePath);
      return detail::complete(std::move(out), n, kTwoFifths);
    }
    return std::nullopt;
  }

  std::optional<Atoms> long_path(const Graph& g, const std::vector<SuspendedPath>& paths) {
    bool found = false;
    for (const auto& p : paths) {
      if (p.length() < 4) continue;
      found = true;
      auto inner = p.inner();
      auto sub = induced_subgraph(g, all_but(g.order(), VertexSet::of(inner)));
      if (in_bad_family(*sub.graph)) continue;
      Atoms a = detail::lift(solve(*sub.graph), sub.to_parent);
      auto [h0, h1] = detail::path_pair(p.length(), kTwoFifths);
      count(Reduction::kLongPath);
      return detail::extend(a, detail::lift(h0, p.vertices), detail::lift(h1, p.vertices), p.front(), p.back(),
                            kTwoFifths);
    }
    if (found) return table_for(g);
    return std::nullopt;
  }

  int coin_cap_;
  ConstructTrace* trace_;
};

// Block-wise construction at membership r for minimum degree >= 2 and large girth.
class GirthBuilder {
 public:
  GirthBuilder(Rational r, int min_path) : r_(std::move(r)), min_path_(min_path) {}

  Atoms solve_connected(const Graph& g) {
    auto bd = blocks(g);
    if (bd.blocks.size() == 1) return solve_block(g);
    std::vector<Atoms> parts;
    for (const auto& b : bd.blocks) {
      auto sub = induced_subgraph(g, b);
      parts.push_back(detail::lift(solve_block(*sub.graph), sub.to_parent));
    }
    // Glue blocks in breadth-first order over the block-cut tree.
    const int nb = static_cast<int>(bd.blocks.size());
    std::vector<VertexSet> sets;
    for (const auto& b : bd.blocks) sets.push_back(VertexSet::of(b));
    std::vector<bool> done(nb, false);
    done[0] = true;
    Atoms acc = parts[0];
    VertexSet covered = sets[0];
    for (int glued = 1; glued < nb; ++glued) {
      int next = -1;
      for (int i = 0; i < nb && next < 0; ++i)
        if (!done[i] && sets[i].intersects(covered)) next = i;
      if (next < 0) throw InternalError("block-cut tree is disconnected");
      VertexSet shared = sets[next] & covered;
      if (shared.size() != 1) throw InternalError("blocks share more than one vertex");
      int v = shared.first();
      acc = detail::glue(acc, parts[next], v, g.neighborhood(v) & covered, g.neighborhood(v) & sets[next], r_);
      covered |= sets[next];
      done[next] = true;
    }
    return acc;
  }

 private:
  Atoms solve_block(const Graph& g) {
    const int n = g.order();
    if (n == 2) return {{VertexSet{0}, r_}, {VertexSet{1}, r_}, {VertexSet{}, Rational(1) - 2 * r_}};
    if (g.max_degree() == 2) {
      Atoms a = cycle_atoms(g);
      auto m = detail::member_sums(a, n);
      for (int v = 0; v < n; ++v)
        if (m[v] > r_) throw InvalidArgument("cycle of length " + std::to_string(n) + " is too short");
      return detail::complete(std::move(a), n, r_);
    }
    auto p = find_long_suspended_path(g, min_path_ - 1);
    if (!p)
      throw InvalidArgument("a block has no suspended path of length >= " + std::to_string(min_path_));
    auto sub = induced_subgraph(g, all_but(n, VertexSet::of(p->inner())));
    Atoms a = detail::lift(solve_connected(*sub.graph), sub.to_parent);
    auto [h0, h1] = detail::path_pair(p->length(), r_);
    return detail::extend(a, detail::lift(h0, p->vertices), detail::lift(h1, p->vertices), p->front(), p->back(),
                          r_);
  }

  Rational r_;
  int min_path_;
};

}  // namespace

std::vector<HammockRole> hammock_roles(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw InvalidArgument("hammock expansion needs at least 3 vertices");
  if (!is_connected(g)) throw InvalidArgument("graph is not connected");
  if (g.min_degree() < 2) throw InvalidArgument("minimum degree below 2");
  std::vector<HammockRole> roles(n, HammockRole::kLongInner);
  int hubs = 0, low = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) >= 3) {
      roles[v] = HammockRole::kHubFree;
      ++hubs;
    } else {
      ++low;
    }
  }
  if (hubs == 0) throw InvalidArgument("graph is a cycle");
  for (const Edge& e : g.edges())
    if (g.degree(e.u) >= 3 && g.degree(e.v) >= 3) throw InvalidArgument("two degree >= 3 vertices are adjacent");

  auto paths = suspended_paths(g);
  int inner = 0;
  std::map<std::pair<int, int>, std::array<int, 2>> by_ends;
  for (const auto& p : paths) {
    if (p.length() != 2 && p.length() != 3)
      throw InvalidArgument("suspended path of length " + std::to_string(p.length()));
    if (p.front() == p.back()) throw InvalidArgument("suspended path closes a loop");
    inner += p.length() - 1;
    ++by_ends[{p.front(), p.back()}][p.length() - 2];
  }
  if (inner != low) throw InvalidArgument("a degree-2 vertex lies on no suspended path");
  for (const auto& [ends, c] : by_ends) {
    if (c[0] > 1 || c[1] > 1) throw InvalidArgument("repeated suspended path between two hubs");
    if (c[1] == 1 && c[0] == 0) throw InvalidArgument("suspended 3-path without a matching 2-path");
  }
  for (const auto& p : paths) {
    const auto& c = by_ends[{p.front(), p.back()}];
    if (p.length() == 2) {
      roles[p.vertices[1]] = HammockRole::kShortMid;
    }
    if (c[1] == 1) {
      roles[p.front()] = HammockRole::kHubPaired;
      roles[p.back()] = HammockRole::kHubPaired;
    }
  }
  return roles;
}

DominatingDistribution base_case_hammock(GraphPtr g, const std::vector<HammockRole>& roles, int coin_cap,
                                         bool complete) {
  if (!g) throw InvalidArgument("null graph");
  if (roles != hammock_roles(*g)) throw InvalidArgument("roles do not match the graph");
  Atoms a = hammock_atoms(*g, roles, coin_cap);
  if (complete) a = detail::complete(std::move(a), g->order(), kTwoFifths);
  return DominatingDistribution(std::move(g), std::move(a));
}

std::string reduction_name(Reduction r) {
  switch (r) {
    case Reduction::kEdge: return "edge";
    case Reduction::kCutVertex: return "cut-vertex";
    case Reduction::kDenseEdge: return "dense-edge";
    case Reduction::kTwinTwoPaths: return "twin-2-paths";
    case Reduction::kTwinThreePaths: return "twin-3-paths";
    case Reduction::kLoneThreePath: return "lone-3-path";
    case Reduction::kLongPath: return "long-path";
    case Reduction::kCycle: return "cycle";
    case Reduction::kHammockBase: return "hammock-base";
    case Reduction::kTable: return "table";
  }
  return "unknown";
}

DominatingDistribution construct52(const Graph& g, int coin_cap, ConstructTrace* trace) {
  if (g.order() < 2) throw InvalidArgument("graph needs at least 2 vertices");
  if (!is_connected(g)) throw InvalidArgument("graph is not connected");
  if (auto id = bad_family_check(g)) throw BadFamilyError(id->index, id->name);
  Builder b(coin_cap, trace);
  auto host = share(g);
  DominatingDistribution d(host, b.solve(g));
  auto check = check_f_dominating(d, degree_demand(g), kTwoFifths);
  if (!check.ok) throw InternalError("construction failed its check: " + check.message);
  return d;
}

DominatingDistribution planar_girth_construct(const Graph& g, int k) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  if (g.order() == 0) throw InvalidArgument("empty graph");
  if (g.min_degree() < 2) throw InvalidArgument("minimum degree below 2");
  const int need = 15 * k - 14;
  if (girth(g) < need) throw InvalidArgument("girth below " + std::to_string(need));
  const Rational r(k, 3 * k - 1);
  GirthBuilder b(r, 3 * k - 2);

  // Components are coupled arbitrarily; domination is local to each.
  auto comp = components(g);
  const int nc = *std::max_element(comp.begin(), comp.end()) + 1;
  Atoms acc{{VertexSet{}, Rational(1)}};
  for (int c = 0; c < nc; ++c) {
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
      if (comp[v] == c) keep.push_back(v);
    auto sub = induced_subgraph(g, keep);
    Atoms part = detail::lift(b.solve_connected(*sub.graph), sub.to_parent);
    Atoms joined = detail::couple(acc, part);
    acc = std::move(joined);
  }
  DominatingDistribution d(share(g), std::move(acc));
  auto check = check_f_dominating(d, constant_demand(g.order(), Rational(1)), r);
  if (!check.ok) throw InternalError("construction failed its check: " + check.message);
  return d;
}

IntersectingFamily intersecting_family(int a_size, int b_size, std::int64_t cap) {
  if (a_size < 0 || b_size < 0) throw InvalidArgument("set sizes must be non-negative");
  if (a_size + b_size == 0) throw InvalidArgument("family is empty");
  std::int64_t t = 5;
  for (int i = 0; i < a_size + b_size; ++i) {
    t *= i < a_size ? 2 : 5;
    if (t > cap) throw CapExceeded("ground set exceeds " + std::to_string(cap));
  }
  IntersectingFamily f;
  f.a_size = a_size;
  f.b_size = b_size;
  f.t = t;
  f.sets.assign(a_size + b_size, {});
  // Point index: A coordinates in base 2 first, then B coordinates in base 5,
  // then the extra coordinate. Digit 0 stands for the first value.
  std::int64_t a_block = std::int64_t{1} << a_size, b_block = t / (5 * a_block);
  for (std::int64_t w = 0; w < t; ++w) {
    std::int64_t a_digits = w % a_block, x = w / a_block;
    for (int j = 0; j < b_size; ++j, x /= 5)
      if (x % 5 <= 1) f.sets[a_size + j].push_back(w);
    if (w / (a_block * b_block) > 3) continue;
    for (int i = 0; i < a_size; ++i)
      if ((a_digits >> i & 1) == 0) f.sets[i].push_back(w);
  }
  auto meet = [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::int64_t c = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j]) {
        ++i;
      } else if (b[j] < a[i]) {
        ++j;
      } else {
        ++c, ++i, ++j;
      }
    }
    return c;
  };
  const int total = a_size + b_size;
  f.sizes_ok = std::all_of(f.sets.begin(), f.sets.end(),
                           [&](const auto& s) { return static_cast<std::int64_t>(s.size()) * 5 == 2 * t; });
  f.a_pairs_ok = true;
  for (int i = 0; i < a_size; ++i)
    for (int j = i + 1; j < a_size; ++j)
      if (meet(f.sets[i], f.sets[j]) * 5 != t) f.a_pairs_ok = false;
  f.b_pairs_ok = true;
  for (int j = a_size; j < total; ++j)
    for (int i = 0; i < total; ++i)
      if (i != j && meet(f.sets[i], f.sets[j]) * 25 != 4 * t) f.b_pairs_ok = false;
  return f;
}

}  // namespace fdom
