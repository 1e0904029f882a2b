#include "fdomlab/reductions.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

#include "fdomlab/domset.hpp"
#include "fdomlab/errors.hpp"
#include "fdomlab/generators.hpp"
#include "fdomlab/lp.hpp"

namespace fdom {

namespace {

constexpr std::size_t kMaxIndependentSets = 200000;
constexpr int kMaxPricingRounds = 5000;

void maximal_independent_sets(const std::vector<VertexSet>& non, VertexSet r, VertexSet p, VertexSet x,
                              std::vector<VertexSet>& out) {
  if (p.empty()) {
    if (x.empty()) {
      out.push_back(r);
      if (out.size() > kMaxIndependentSets) throw CapExceeded("too many maximal independent sets");
    }
    return;
  }
  int pivot = -1, best = -1;
  for (int u : p | x) {
    int c = (p & non[u]).size();
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (int v : p - non[pivot]) {
    VertexSet rv = r;
    rv.insert(v);
    maximal_independent_sets(non, rv, p & non[v], x & non[v], out);
    p.erase(v);
    x.insert(v);
  }
}

std::vector<VertexSet> non_neighbourhoods(const Graph& g) {
  std::vector<VertexSet> non(g.order());
  const VertexSet all = g.vertices();
  for (int v = 0; v < g.order(); ++v) non[v] = all - g.closed_neighborhood(v);
  return non;
}

VertexSet extend_independent(const Graph& g, VertexSet s) {
  for (int v = 0; v < g.order(); ++v)
    if (!s.contains(v) && !g.neighborhood(v).intersects(s)) s.insert(v);
  return s;
}

// max sum of vertex weights subject to weight <= 1 on each listed set.
LpSolution solve_weights(const Graph& g, const std::vector<VertexSet>& sets) {
  const int rows = static_cast<int>(sets.size()), cols = g.order();
  std::vector<std::int64_t> a(static_cast<std::size_t>(rows) * cols, 0), b(rows, 1), c(cols, 1);
  for (int i = 0; i < rows; ++i)
    for (int v : sets[i]) a[static_cast<std::size_t>(i) * cols + v] = 1;
  LpSolution sol = simplex_integer(rows, cols, a, b, c);
  if (sol.status != LpStatus::kOptimal) throw InternalError("independent-set LP is not optimal");
  return sol;
}

FractionalChromaticResult package(const std::vector<VertexSet>& sets, const LpSolution& sol) {
  FractionalChromaticResult r;
  r.value = sol.value;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sol.y[i].sign() > 0) r.classes.push_back({sets[i], sol.y[i]});
  r.dual = sol.x;
  return r;
}

template <typename T>
class WeightedIndependentSearch {
 public:
  WeightedIndependentSearch(const Graph& g, std::vector<T> w) : g_(g), w_(std::move(w)) {}

  void run() {
    VertexSet cand;
    for (int v = 0; v < g_.order(); ++v)
      if (w_[v] > T(0)) cand.insert(v);
    go(VertexSet{}, cand, T(0));
  }
  const VertexSet& best_set() const { return best_set_; }

 private:
  void go(const VertexSet& chosen, VertexSet cand, const T& cur) {
    if (cur > best_) {
      best_ = cur;
      best_set_ = chosen;
    }
    if (cand.empty()) return;
    T bound = cur;
    int pick = -1;
    for (int v : cand) {
      bound += w_[v];
      if (pick < 0 || w_[v] > w_[pick]) pick = v;
    }
    if (!(bound > best_)) return;
    cand.erase(pick);
    VertexSet with = chosen;
    with.insert(pick);
    go(with, cand - g_.neighborhood(pick), cur + w_[pick]);
    go(chosen, cand, cur);
  }

  const Graph& g_;
  std::vector<T> w_;
  T best_{0};
  VertexSet best_set_;
};

// Common denominator of the weights when numerators and their total stay in 62 bits.
std::optional<std::vector<std::int64_t>> scaled_weights(const WeightVector& w) {
  if (!std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_small(); })) return std::nullopt;
  std::int64_t den = 1;
  for (const auto& x : w) {
    std::int64_t d = x.small_den();
    std::int64_t l = std::lcm(den, d);
    if (l <= 0 || l > (std::int64_t{1} << 40)) return std::nullopt;
    den = l;
  }
  std::vector<std::int64_t> out;
  __int128 total = 0;
  for (const auto& x : w) {
    __int128 v = static_cast<__int128>(x.small_num()) * (den / x.small_den());
    total += v > 0 ? v : 0;
    if (total > (static_cast<__int128>(1) << 62)) return std::nullopt;
    out.push_back(static_cast<std::int64_t>(v));
  }
  return out;
}

using Clock = std::chrono::steady_clock;

class Dsatur {
 public:
  Dsatur(const Graph& g, int lower, Clock::time_point deadline)
      : g_(g), n_(g.order()), lower_(lower), deadline_(deadline), colour_(n_, -1), sat_(n_, 0),
        seen_(static_cast<std::size_t>(n_) * (n_ + 1), 0) {}

  void run() { search(0, 0); }
  bool timed_out() const { return timed_out_; }
  int best() const { return best_; }
  const std::vector<int>& best_colouring() const { return best_colouring_; }

 private:
  void assign(int v, int c) {
    colour_[v] = c;
    for (int w : g_.neighbors(v))
      if (seen_[w * (n_ + 1) + c]++ == 0) ++sat_[w];
  }
  void unassign(int v) {
    int c = colour_[v];
    colour_[v] = -1;
    for (int w : g_.neighbors(v))
      if (--seen_[w * (n_ + 1) + c] == 0) --sat_[w];
  }

  bool done() const { return timed_out_ || best_ <= lower_; }

  void search(int coloured, int used) {
    if ((++nodes_ & 1023) == 0 && Clock::now() > deadline_) timed_out_ = true;
    if (done()) return;
    if (coloured == n_) {
      best_ = used;
      best_colouring_ = colour_;
      return;
    }
    int v = -1;
    for (int u = 0; u < n_; ++u) {
      if (colour_[u] >= 0) continue;
      if (v < 0 || sat_[u] > sat_[v] || (sat_[u] == sat_[v] && g_.degree(u) > g_.degree(v))) v = u;
    }
    for (int c = 0; c < used && c + 1 < best_; ++c) {
      if (seen_[v * (n_ + 1) + c]) continue;
      assign(v, c);
      search(coloured + 1, used);
      unassign(v);
      if (done()) return;
    }
    if (used + 1 < best_) {
      assign(v, used);
      search(coloured + 1, used + 1);
      unassign(v);
    }
  }

  const Graph& g_;
  int n_;
  int lower_;
  Clock::time_point deadline_;
  std::vector<int> colour_;
  std::vector<int> sat_;
  std::vector<int> seen_;  // seen_[v * (n + 1) + c]: neighbours of v with colour c
  std::int64_t nodes_ = 0;
  bool timed_out_ = false;
  int best_ = std::numeric_limits<int>::max();
  std::vector<int> best_colouring_;
};

void clique_search(const Graph& g, int size, VertexSet cand, int& best) {
  if (size > best) best = size;
  while (!cand.empty()) {
    if (size + cand.size() <= best) return;
    int v = cand.first();
    cand.erase(v);
    clique_search(g, size + 1, cand & g.neighborhood(v), best);
  }
}

Rational fdom_value(const Graph& g) {
  if (g.order() <= kDefaultEnumerationCap) return fdom_exact(g).value;
  return fdom_colgen(g).value;
}

}  // namespace

std::int64_t time_budget_ms() {
  const char* env = std::getenv("FDOMLAB_TIME_BUDGET_MS");
  if (!env || !*env) return kDefaultTimeBudgetMs;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (*end != '\0' || v <= 0) throw InvalidArgument("FDOMLAB_TIME_BUDGET_MS must be a positive integer");
  return v;
}

MaxWeightIndependentSet max_weight_independent_set(const Graph& g, const WeightVector& w) {
  if (static_cast<int>(w.size()) != g.order()) throw InvalidArgument("weight vector length mismatch");
  if (!g.has_bitsets()) throw CapExceeded("graph exceeds the vertex-set capacity");
  VertexSet set;
  if (auto scaled = scaled_weights(w)) {
    WeightedIndependentSearch<std::int64_t> s(g, *scaled);
    s.run();
    set = s.best_set();
  } else {
    WeightedIndependentSearch<Rational> s(g, w);
    s.run();
    set = s.best_set();
  }
  Rational total;
  for (int v : set) total += w[v];
  return {set, total};
}

int clique_number(const Graph& g) {
  if (!g.has_bitsets()) throw CapExceeded("graph exceeds the vertex-set capacity");
  int best = 0;
  clique_search(g, 0, g.vertices(), best);
  return best;
}

FractionalChromaticResult fractional_chromatic(const Graph& g) {
  if (g.order() == 0) return {};
  if (!g.has_bitsets()) throw CapExceeded("graph exceeds the vertex-set capacity");
  if (g.order() <= kDefaultIndependentEnumerationOrder) {
    std::vector<VertexSet> sets;
    try {
      maximal_independent_sets(non_neighbourhoods(g), VertexSet{}, g.vertices(), VertexSet{}, sets);
      return package(sets, solve_weights(g, sets));
    } catch (const CapExceeded&) {
      // Too many sets to list; generate them instead.
    }
  }
  std::vector<VertexSet> sets;
  std::unordered_set<VertexSet> pool;
  VertexSet covered;
  for (int v = 0; v < g.order(); ++v) {
    if (covered.contains(v)) continue;
    VertexSet s = extend_independent(g, VertexSet{v});
    covered |= s;
    if (pool.insert(s).second) sets.push_back(s);
  }
  for (int round = 0; round < kMaxPricingRounds; ++round) {
    LpSolution sol = solve_weights(g, sets);
    auto price = max_weight_independent_set(g, sol.x);
    if (price.weight <= Rational(1)) return package(sets, sol);
    VertexSet s = extend_independent(g, price.set);
    if (!pool.insert(s).second) throw InternalError("pricing returned an existing independent set");
    sets.push_back(s);
  }
  throw CapExceeded("independent-set generation round cap reached");
}

CheckResult verify_fractional_chromatic(const Graph& g, const FractionalChromaticResult& r) {
  std::vector<Rational> cover(g.order());
  Rational total;
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const auto& c = r.classes[i];
    std::string where = "class " + std::to_string(i);
    if (c.x.sign() < 0) return {false, where + " has negative weight"};
    for (int v : c.set) {
      if (v >= g.order()) return {false, where + " mentions vertex " + std::to_string(v)};
      if (g.neighborhood(v).intersects(c.set)) return {false, where + " is not independent"};
      cover[v] += c.x;
    }
    total += c.x;
  }
  for (int v = 0; v < g.order(); ++v)
    if (cover[v] < Rational(1)) return {false, "vertex " + std::to_string(v) + " covered " + cover[v].str()};
  if (total != r.value) return {false, "class weights sum to " + total.str()};
  if (static_cast<int>(r.dual.size()) != g.order()) return {false, "dual length mismatch"};
  Rational dual_total;
  for (const auto& y : r.dual) {
    if (y.sign() < 0) return {false, "negative dual weight"};
    dual_total += y;
  }
  if (dual_total != r.value) return {false, "dual weights sum to " + dual_total.str()};
  auto heaviest = max_weight_independent_set(g, r.dual);
  if (heaviest.weight > Rational(1)) return {false, "an independent set has dual weight " + heaviest.weight.str()};
  return {};
}

FractionalColouring proper_colouring(const Graph& g, const FractionalChromaticResult& r) {
  if (g.order() == 0) return {};
  mpz_class den = 1;
  for (const auto& c : r.classes) {
    mpz_class d = c.x.to_mpq().get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  mpq_class p_total = r.value.to_mpq() * den;
  if (!den.fits_sint_p() || p_total.get_den() != 1 || !p_total.get_num().fits_sint_p() ||
      p_total.get_num() > 1000000)
    throw CapExceeded("colouring would need too many colours");
  const int q = static_cast<int>(den.get_si());
  FractionalColouring out;
  out.p = static_cast<int>(p_total.get_num().get_si());
  out.q = q;
  out.phi.assign(g.order(), {});
  int next = 1;
  for (const auto& c : r.classes) {
    mpq_class m = c.x.to_mpq() * den;
    const int count = static_cast<int>(m.get_num().get_si());
    for (int k = 0; k < count; ++k, ++next)
      for (int v : c.set)
        if (static_cast<int>(out.phi[v].size()) < q) out.phi[v].push_back(next);
  }
  check_shape(g, out);
  if (!is_proper_colouring(g, out)) throw InternalError("fractional chromatic classes give an improper colouring");
  return out;
}

ChromaticResult chromatic_number(const Graph& g, int cap, std::int64_t budget_ms) {
  if (g.order() > cap) throw CapExceeded("chromatic number limited to " + std::to_string(cap) + " vertices");
  ChromaticResult r;
  if (g.order() == 0) return r;
  const auto deadline = Clock::now() + std::chrono::milliseconds(budget_ms);
  r.lower = clique_number(g);
  Dsatur search(g, r.lower, deadline);
  search.run();
  if (search.best_colouring().empty()) {
    // Out of time before the first complete colouring: fall back to greedy.
    r.colouring.assign(g.order(), -1);
    int used = 0;
    for (int v = 0; v < g.order(); ++v) {
      std::vector<char> taken(g.order() + 1, 0);
      for (int w : g.neighbors(v))
        if (r.colouring[w] >= 0) taken[r.colouring[w]] = 1;
      int c = 0;
      while (taken[c]) ++c;
      r.colouring[v] = c;
      used = std::max(used, c + 1);
    }
    r.upper = used;
    return r;
  }
  r.upper = search.best();
  r.colouring = search.best_colouring();
  if (!search.timed_out()) r.lower = r.upper;
  return r;
}

ReductionReport check_reduction(const Graph& g) {
  if (g.order() == 0 || g.min_degree() < 1) throw InvalidArgument("minimum degree below 1");
  ReductionReport rep;
  const auto chi = fractional_chromatic(g);
  const Graph split = split_construction(g);
  const FdomResult fd = split.order() <= kDefaultEnumerationCap ? fdom_exact(split) : fdom_colgen(split);
  rep.chi_f = chi.value;
  rep.fdom_split = fd.value;
  rep.chi_side = chi.value <= Rational(3);
  rep.fdom_side = fd.value >= Rational(3);
  const int n = g.order();
  const auto edges = g.edges();

  if (rep.chi_side) {
    // Each edge vertex takes the colours missing from its two ends.
    const FractionalColouring c = proper_colouring(g, chi);
    FractionalColouring ext;
    ext.q = c.q;
    ext.p = 3 * c.q;
    ext.phi = c.phi;
    for (const Edge& e : edges) {
      std::vector<int> rest;
      for (int col = 1; col <= ext.p; ++col)
        if (!std::binary_search(c.phi[e.u].begin(), c.phi[e.u].end(), col) &&
            !std::binary_search(c.phi[e.v].begin(), c.phi[e.v].end(), col))
          rest.push_back(col);
      ext.phi.push_back(rest);
    }
    rep.extension_checked = true;
    rep.extension_ok = std::all_of(ext.phi.begin(), ext.phi.end(),
                                   [&](const auto& cols) { return static_cast<int>(cols.size()) == ext.q; }) &&
                       is_dominating_colouring(split, ext);
  }

  if (rep.fdom_side) {
    // Scale the packing to total 3, turn it into a (3D:D)-colouring of the
    // split graph, and restrict to the original vertices.
    const Rational scale = Rational(3) / fd.value;
    std::vector<Rational> xs;
    std::int64_t den = 1;
    bool small = true;
    for (const auto& col : fd.primal.columns) {
      xs.push_back(col.x * scale);
      if (!xs.back().is_small()) small = false;
      else den = std::lcm(den, xs.back().small_den());
      if (den > 20000) small = false;
    }
    if (small) {
      FractionalColouring c;
      c.q = static_cast<int>(den);
      c.p = 3 * c.q;
      c.phi.assign(split.order(), {});
      int next = 1;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const std::int64_t count = xs[i].small_num() * (den / xs[i].small_den());
        for (std::int64_t k = 0; k < count; ++k, ++next)
          for (int v : fd.primal.columns[i].set)
            if (static_cast<int>(c.phi[v].size()) < c.q) c.phi[v].push_back(next);
      }
      // Supersets of dominating sets still dominate, so light vertices join extra classes.
      for (auto& cols : c.phi) {
        for (int col = 1; static_cast<int>(cols.size()) < c.q; ++col)
          if (std::find(cols.begin(), cols.end(), col) == cols.end()) cols.push_back(col);
        std::sort(cols.begin(), cols.end());
      }
      FractionalColouring restricted{c.p, c.q, {c.phi.begin(), c.phi.begin() + n}};
      rep.restriction_checked = true;
      rep.restriction_ok = is_dominating_colouring(split, c) && is_proper_colouring(g, restricted);
    }
  }
  return rep;
}

FullnessReport fullness_check(const Graph& g, const FullnessOptions& options) {
  if (g.order() == 0) throw InvalidArgument("empty graph");
  if (g.min_degree() != g.max_degree()) throw InvalidArgument("graph is not regular");
  FullnessReport rep;
  rep.degree = g.min_degree();
  const int target = rep.degree + 1;
  const Graph square = graph_square(g);
  rep.chi_square = chromatic_number(square, std::max(kDefaultChromaticCap, square.order()), options.budget_ms);
  rep.chi_f_square = fractional_chromatic(square).value;
  if (rep.chi_square.exact() || rep.chi_square.upper == target) {
    rep.dom_full = rep.chi_square.upper == target;
  } else if (rep.chi_square.lower > target) {
    rep.dom_full = false;
  }
  rep.fdom_full = rep.chi_f_square == Rational(target);
  if (options.direct_dom) {
    rep.dom_direct = domatic_number(g).number;
    if (rep.dom_full && (*rep.dom_direct == target) != *rep.dom_full) rep.consistent = false;
  }
  if (options.direct_fdom) {
    rep.fdom_direct = fdom_value(g);
    if ((*rep.fdom_direct == Rational(target)) != rep.fdom_full) rep.consistent = false;
  }
  return rep;
}

JoinReport join_check(const Graph& g, int t, int cap) {
  if (t < 0) throw InvalidArgument("clique size must be non-negative");
  JoinReport rep;
  rep.t = t;
  rep.fdom_graph = fdom_exact(g, cap).value;
  rep.fdom_join = fdom_exact(join_clique(g, t), cap).value;
  return rep;
}

}  // namespace fdom
