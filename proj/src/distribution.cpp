#include <algorithm>
#include <numeric>

#include "atoms.hpp"
#include "fdomlab/domset.hpp"
#include "fdomlab/errors.hpp"
#include "fdomlab/generators.hpp"

namespace fdom {

namespace detail {

void normalise(Atoms& a) {
  std::sort(a.begin(), a.end(), [](const Atom& x, const Atom& y) { return x.set < y.set; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (out > 0 && a[out - 1].set == a[i].set) {
      a[out - 1].p += a[i].p;
    } else {
      if (out != i) a[out] = std::move(a[i]);
      ++out;
    }
  }
  a.resize(out);
  std::erase_if(a, [](const Atom& x) { return x.p.is_zero(); });
}

Atoms lift(const Atoms& a, const VertexMap& map) {
  Atoms out;
  out.reserve(a.size());
  for (const auto& x : a) {
    VertexSet s;
    for (int v : x.set) s.insert(map[v]);
    out.push_back({s, x.p});
  }
  return out;
}

Rational total_mass(const Atoms& a) {
  Rational t;
  for (const auto& x : a) t += x.p;
  return t;
}

namespace {

// Common denominator of all masses when everything fits in 62 bits.
std::optional<std::int64_t> common_denominator(const Atoms& a) {
  std::int64_t l = 1;
  for (const auto& x : a) {
    if (!x.p.is_small()) return std::nullopt;
    std::int64_t d = x.p.small_den();
    __int128 next = static_cast<__int128>(l / std::gcd(l, d)) * d;
    if (next > (static_cast<__int128>(1) << 62)) return std::nullopt;
    l = static_cast<std::int64_t>(next);
  }
  return l;
}

// Sums of masses per vertex over the sets produced by cover(atom).
template <typename Cover>
std::vector<Rational> sums(const Atoms& a, int n, Cover cover) {
  std::vector<Rational> out(n);
  if (auto l = common_denominator(a)) {
    std::vector<std::int64_t> acc(n, 0);
    for (const auto& x : a) {
      std::int64_t w = x.p.small_num() * (*l / x.p.small_den());
      for (int v : cover(x.set)) acc[v] += w;
    }
    for (int v = 0; v < n; ++v) out[v] = Rational(acc[v], *l);
    return out;
  }
  for (const auto& x : a)
    for (int v : cover(x.set)) out[v] += x.p;
  return out;
}

}  // namespace

std::vector<Rational> member_sums(const Atoms& a, int n) {
  return sums(a, n, [](const VertexSet& s) { return s; });
}

std::vector<Rational> dominated_sums(const Atoms& a, const Graph& g) {
  return sums(a, g.order(), [&](const VertexSet& s) { return closed_neighborhood(g, s); });
}

std::pair<Atoms, Atoms> split_mass(const Atoms& a, const Rational& mass) {
  Atoms head, tail;
  Rational left = mass;
  for (const auto& x : a) {
    if (left.is_zero()) {
      tail.push_back(x);
    } else if (x.p <= left) {
      head.push_back(x);
      left -= x.p;
    } else {
      head.push_back({x.set, left});
      tail.push_back({x.set, x.p - left});
      left = Rational(0);
    }
  }
  if (!left.is_zero()) throw InternalError("split_mass: not enough mass");
  return {head, tail};
}

Atoms couple(const Atoms& a, const Atoms& b) {
  Atoms out;
  std::size_t i = 0, j = 0;
  Rational ra = a.empty() ? Rational(0) : a[0].p;
  Rational rb = b.empty() ? Rational(0) : b[0].p;
  while (i < a.size() && j < b.size()) {
    Rational m = min(ra, rb);
    out.push_back({a[i].set | b[j].set, m});
    ra -= m;
    rb -= m;
    if (ra.is_zero() && ++i < a.size()) ra = a[i].p;
    if (rb.is_zero() && ++j < b.size()) rb = b[j].p;
  }
  if (i != a.size() || j != b.size()) throw InternalError("couple: unequal masses");
  return out;
}

Atoms from_colouring(const FractionalColouring& c) {
  std::vector<VertexSet> classes(c.p);
  for (int v = 0; v < static_cast<int>(c.phi.size()); ++v)
    for (int col : c.phi[v]) classes[col - 1].insert(v);
  Atoms out;
  for (const auto& s : classes) out.push_back({s, Rational(1, c.p)});
  normalise(out);
  return out;
}

Atoms complete(Atoms a, int n, const Rational& r) {
  auto m = member_sums(a, n);
  for (int v = 0; v < n; ++v) {
    if (m[v] > r) throw InvalidArgument("complete_to_r: membership of " + std::to_string(v) + " exceeds r");
    Rational need = r - m[v];
    std::size_t count = a.size();
    for (std::size_t i = 0; i < count && !need.is_zero(); ++i) {
      if (a[i].set.contains(v)) continue;
      if (a[i].p <= need) {
        a[i].set.insert(v);
        need -= a[i].p;
      } else {
        VertexSet s = a[i].set;
        s.insert(v);
        a[i].p -= need;
        a.push_back({s, need});
        need = Rational(0);
      }
    }
    if (!need.is_zero()) throw InternalError("complete_to_r: total mass below 1");
  }
  normalise(a);
  return a;
}

Atoms glue(const Atoms& a0, const Atoms& a1, int v, const VertexSet& n0, const VertexSet& n1,
           const Rational& r) {
  // Events: A = v in D, B = v dominated from its own side only, C = v undominated.
  enum Event { kA, kB, kC };
  auto event_of = [v](const VertexSet& nb) {
    return [v, nb](const VertexSet& s) { return s.contains(v) ? kA : (s.intersects(nb) ? kB : kC); };
  };
  auto ev0 = event_of(n0);
  auto ev1 = event_of(n1);
  Rational p0[3], p1[3];
  for (const auto& x : a0) p0[ev0(x.set)] += x.p;
  for (const auto& x : a1) p1[ev1(x.set)] += x.p;
  if (p0[kA] != r || p1[kA] != r) throw InvalidArgument("glue_at_cutvertex: membership of the cut vertex is not r");

  struct Case {
    Event e0, e1;
    Rational mass;
  };
  std::vector<Case> cases;
  Rational one(1);
  if (p0[kB] + p1[kB] >= one - r) {
    cases = {{kA, kA, r},
             {kC, kB, p0[kC]},
             {kB, kC, p1[kC]},
             {kB, kB, one - r - p0[kC] - p1[kC]}};
  } else {
    cases = {{kA, kA, r},
             {kB, kC, p0[kB]},
             {kC, kB, p1[kB]},
             {kC, kC, one - r - p0[kB] - p1[kB]}};
  }
  Atoms out;
  for (const auto& c : cases) {
    if (c.mass.is_zero()) continue;
    auto left = piece(a0, [&](const VertexSet& s) { return ev0(s) == c.e0; }, p0[c.e0], c.mass);
    auto right = piece(a1, [&](const VertexSet& s) { return ev1(s) == c.e1; }, p1[c.e1], c.mass);
    auto joined = couple(left, right);
    out.insert(out.end(), joined.begin(), joined.end());
  }
  normalise(out);
  return out;
}

Atoms extend(const Atoms& dp, const Atoms& h0, const Atoms& h1, int u, int v, const Rational& r) {
  Rational half(1, 2), one(1);
  if (!(r < half) || r.sign() <= 0) throw InvalidArgument("extend_over_pair: needs 0 < r < 1/2");
  auto has_u = [u](const VertexSet& s) { return s.contains(u); };
  auto has_v = [v](const VertexSet& s) { return s.contains(v); };
  auto both = [&](const VertexSet& s) { return has_u(s) && has_v(s); };
  auto only_u = [&](const VertexSet& s) { return has_u(s) && !has_v(s); };
  auto only_v = [&](const VertexSet& s) { return !has_u(s) && has_v(s); };
  auto neither = [&](const VertexSet& s) { return !has_u(s) && !has_v(s); };

  Rational m_uv = mass_where(dp, both), m_u = mass_where(dp, only_u), m_v = mass_where(dp, only_v);
  Rational m_n = mass_where(dp, neither);
  if (m_uv + m_u != r || m_uv + m_v != r) throw InvalidArgument("extend_over_pair: d' membership of u or v is not r");
  if (!mass_where(h0, both).is_zero()) throw InvalidArgument("extend_over_pair: u and v meet in d0");
  if (mass_where(h0, has_u) != r || mass_where(h0, has_v) != r)
    throw InvalidArgument("extend_over_pair: d0 membership of u or v is not r");
  if (!mass_where(h1, only_u).is_zero() || !mass_where(h1, only_v).is_zero())
    throw InvalidArgument("extend_over_pair: u and v differ in d1");
  if (mass_where(h1, has_u) != r) throw InvalidArgument("extend_over_pair: d1 membership of u is not r");

  auto select = [](const Atoms& a, auto pred) {
    Atoms out;
    for (const auto& x : a)
      if (pred(x.set)) out.push_back(x);
    return out;
  };
  Rational alpha = m_uv / r;
  Rational switch_mass = alpha * (one - r);  // "neither" mass sent to d1
  auto [to_d1, to_d0] = split_mass(select(dp, neither), switch_mass);

  Atoms out;
  auto add = [&](const Atoms& left, const Atoms& right) {
    auto joined = couple(left, right);
    out.insert(out.end(), joined.begin(), joined.end());
  };
  add(select(dp, both), piece(h1, has_u, r, m_uv));
  add(select(dp, only_u), piece(h0, has_u, r, m_u));
  add(select(dp, only_v), piece(h0, has_v, r, m_v));
  add(to_d1, piece(h1, [&](const VertexSet& s) { return !has_u(s); }, one - r, switch_mass));
  add(to_d0, piece(h0, neither, one - 2 * r, m_n - switch_mass));
  normalise(out);
  return out;
}

std::pair<Atoms, Atoms> path_pair(int length, const Rational& r) {
  PathColouringTable t = path_tables(length);
  Rational s(t.k, 3 * t.k - 1);
  if (r < s) throw InvalidArgument("attach_suspended_path: path too short for r");
  if (!(r < Rational(1, 2))) throw InvalidArgument("attach_suspended_path: needs r < 1/2");
  Atoms d0 = from_colouring(t.phi0);
  Atoms d1 = from_colouring(t.phi1);
  int a = 0, b = length;
  Rational extra = r - s;
  if (!extra.is_zero()) {
    // Put each end into its own slice of the atoms containing neither end,
    // so the ends stay disjoint in d0 and together in d1.
    auto slice = [&](Atoms& d, bool together) {
      Atoms keep, free;
      for (const auto& x : d) (x.set.contains(a) || x.set.contains(b) ? keep : free).push_back(x);
      if (together) {
        auto [head, tail] = split_mass(free, extra);
        for (auto& x : head) {
          x.set.insert(a);
          x.set.insert(b);
        }
        keep.insert(keep.end(), head.begin(), head.end());
        free = tail;
      } else {
        for (int e : {a, b}) {
          auto [head, tail] = split_mass(free, extra);
          for (auto& x : head) x.set.insert(e);
          keep.insert(keep.end(), head.begin(), head.end());
          free = tail;
        }
      }
      keep.insert(keep.end(), free.begin(), free.end());
      normalise(keep);
      d = keep;
    };
    slice(d0, false);
    slice(d1, true);
  }
  return {complete(std::move(d0), length + 1, r), complete(std::move(d1), length + 1, r)};
}

}  // namespace detail

using detail::Atoms;

DominatingDistribution::DominatingDistribution(GraphPtr host, std::vector<Atom> atoms)
    : host_(std::move(host)), atoms_(std::move(atoms)) {
  if (!host_) throw InvalidArgument("distribution without host graph");
  VertexSet all = host_->vertices();
  for (const auto& x : atoms_) {
    if (x.p.sign() < 0) throw InvalidArgument("negative probability");
    if (!x.set.subset_of(all)) throw InvalidArgument("support set leaves the host graph");
  }
  detail::normalise(atoms_);
  if (detail::total_mass(atoms_) != Rational(1)) throw InvalidArgument("probabilities do not sum to 1");
}

DemandFunction constant_demand(int n, const Rational& value) { return DemandFunction(n, value); }

DemandFunction degree_demand(const Graph& g) {
  DemandFunction f(g.order(), Rational(1));
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) f[v] = Rational(4, 5);
  return f;
}

Rational membership(const DominatingDistribution& d, int v) {
  return detail::mass_where(d.atoms(), [v](const VertexSet& s) { return s.contains(v); });
}

Rational dominated_prob(const DominatingDistribution& d, int v) {
  const VertexSet& nb = d.host().closed_neighborhood(v);
  return detail::mass_where(d.atoms(), [&](const VertexSet& s) { return s.intersects(nb); });
}

std::vector<Rational> memberships(const DominatingDistribution& d) {
  return detail::member_sums(d.atoms(), d.host().order());
}

std::vector<Rational> dominated_probs(const DominatingDistribution& d) {
  return detail::dominated_sums(d.atoms(), d.host());
}

CheckResult check_f_dominating(const DominatingDistribution& d, const DemandFunction& f, const Rational& r) {
  int n = d.host().order();
  if (static_cast<int>(f.size()) != n) return {false, "demand function has the wrong length"};
  auto m = memberships(d);
  auto dom = dominated_probs(d);
  for (int v = 0; v < n; ++v) {
    if (m[v] != r) return {false, "membership of " + std::to_string(v) + " is " + m[v].str()};
    if (dom[v] < f[v]) return {false, "vertex " + std::to_string(v) + " dominated with probability " + dom[v].str()};
  }
  return {true, ""};
}

bool verify_f_dominating(const DominatingDistribution& d, const DemandFunction& f, const Rational& r) {
  return check_f_dominating(d, f, r).ok;
}

DominatingDistribution colouring_to_distribution(GraphPtr g, const FractionalColouring& c) {
  check_shape(*g, c);
  return DominatingDistribution(std::move(g), detail::from_colouring(c));
}

FractionalColouring distribution_to_colouring(const DominatingDistribution& d) {
  mpz_class l = 1;
  for (const auto& x : d.atoms()) {
    mpz_class den = x.p.to_mpq().get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  if (!l.fits_sint_p() || l > 1000000) throw CapExceeded("distribution_to_colouring: denominator too large");
  int p = static_cast<int>(l.get_si());
  int n = d.host().order();
  FractionalColouring c;
  c.p = p;
  c.phi.assign(n, {});
  int next = 1;
  for (const auto& x : d.atoms()) {
    mpq_class slots = x.p.to_mpq() * l;
    int count = static_cast<int>(slots.get_num().get_si());
    for (int i = 0; i < count; ++i, ++next)
      for (int v : x.set) c.phi[v].push_back(next);
  }
  c.q = n > 0 ? static_cast<int>(c.phi[0].size()) : 1;
  for (const auto& cols : c.phi)
    if (static_cast<int>(cols.size()) != c.q)
      throw InvalidArgument("distribution_to_colouring: membership is not constant");
  if (c.q == 0) throw InvalidArgument("distribution_to_colouring: membership is zero");
  return c;
}

DominatingDistribution complete_to_r(const DominatingDistribution& d, const Rational& r) {
  return DominatingDistribution(d.host_ptr(), detail::complete(d.atoms(), d.host().order(), r));
}

namespace {

void check_map(const Graph& host, const VertexMap& map, const Graph& g, const char* what) {
  if (static_cast<int>(map.size()) != host.order())
    throw InvalidArgument(std::string(what) + ": vertex map has the wrong size");
  VertexSet seen;
  for (int x : map) {
    if (x < 0 || x >= g.order() || seen.contains(x))
      throw InvalidArgument(std::string(what) + ": vertex map is not injective into the graph");
    seen.insert(x);
  }
  for (const Edge& e : host.edges())
    if (!g.adjacent(map[e.u], map[e.v])) throw InvalidArgument(std::string(what) + ": edge missing in the graph");
}

// Checks that the two images cover g, share exactly `order` vertices and
// carry all edges of g; returns the shared vertices.
std::vector<int> check_separation(const Graph& g, const Graph& h0, const VertexMap& m0, const Graph& h1,
                                  const VertexMap& m1, int order, const char* what) {
  check_map(h0, m0, g, what);
  check_map(h1, m1, g, what);
  VertexSet s0 = VertexSet::of(m0), s1 = VertexSet::of(m1);
  if (!((s0 | s1) == g.vertices())) throw InvalidArgument(std::string(what) + ": the parts do not cover the graph");
  auto common = (s0 & s1).to_vector();
  if (static_cast<int>(common.size()) != order)
    throw InvalidArgument(std::string(what) + ": the parts do not form a separation of order " +
                          std::to_string(order));
  int carried = h0.edge_count() + h1.edge_count();
  if (order == 2 && h0.adjacent(std::find(m0.begin(), m0.end(), common[0]) - m0.begin(),
                                std::find(m0.begin(), m0.end(), common[1]) - m0.begin()) &&
      h1.adjacent(std::find(m1.begin(), m1.end(), common[0]) - m1.begin(),
                  std::find(m1.begin(), m1.end(), common[1]) - m1.begin()))
    --carried;
  if (carried != g.edge_count()) throw InvalidArgument(std::string(what) + ": the parts do not carry every edge");
  return common;
}

VertexSet image_neighbourhood(const Graph& h, const VertexMap& map, int g_vertex) {
  int local = static_cast<int>(std::find(map.begin(), map.end(), g_vertex) - map.begin());
  VertexSet out;
  for (int w : h.neighbors(local)) out.insert(map[w]);
  return out;
}

VertexMap identity_map(int n) {
  VertexMap m(n);
  std::iota(m.begin(), m.end(), 0);
  return m;
}

}  // namespace

DominatingDistribution glue_at_cutvertex(GraphPtr g, const DominatingDistribution& d0, const VertexMap& map0,
                                         const DominatingDistribution& d1, const VertexMap& map1,
                                         const Rational& r) {
  auto common = check_separation(*g, d0.host(), map0, d1.host(), map1, 1, "glue_at_cutvertex");
  int v = common[0];
  for (const auto* d : {&d0, &d1})
    for (const auto& m : memberships(*d))
      if (m != r) throw InvalidArgument("glue_at_cutvertex: membership is not r everywhere");
  auto out = detail::glue(detail::lift(d0.atoms(), map0), detail::lift(d1.atoms(), map1), v,
                          image_neighbourhood(d0.host(), map0, v), image_neighbourhood(d1.host(), map1, v), r);
  return DominatingDistribution(std::move(g), std::move(out));
}

DominatingDistribution glue_at_cutvertex(const DominatingDistribution& d0, int v0, const DominatingDistribution& d1,
                                         int v1, const Rational& r) {
  const Graph& h0 = d0.host();
  const Graph& h1 = d1.host();
  if (v0 < 0 || v0 >= h0.order() || v1 < 0 || v1 >= h1.order())
    throw InvalidArgument("glue_at_cutvertex: vertex out of range");
  VertexMap map1(h1.order());
  int next = h0.order();
  for (int x = 0; x < h1.order(); ++x) map1[x] = x == v1 ? v0 : next++;
  std::vector<Edge> es = h0.edges();
  for (const Edge& e : h1.edges()) es.push_back({map1[e.u], map1[e.v]});
  auto g = share(Graph(next, es));
  return glue_at_cutvertex(g, d0, identity_map(h0.order()), d1, map1, r);
}

CornerStats corner_stats(const DominatingDistribution& d, int u, int v) {
  Rational in_v = membership(d, v);
  Rational both = detail::mass_where(d.atoms(), [&](const VertexSet& s) { return s.contains(u) && s.contains(v); });
  Rational neither =
      detail::mass_where(d.atoms(), [&](const VertexSet& s) { return !s.contains(u) && !s.contains(v); });
  CornerStats c;
  c.alpha = in_v.is_zero() ? Rational(0) : both / in_v;
  c.beta = in_v == Rational(1) ? Rational(0) : neither / (Rational(1) - in_v);
  return c;
}

DominatingDistribution extend_over_pair(GraphPtr g, const DominatingDistribution& d_prime,
                                        const VertexMap& map_prime, const DominatingDistribution& d0,
                                        const DominatingDistribution& d1, const VertexMap& map_h,
                                        const Rational& r) {
  if (d0.host_ptr() != d1.host_ptr() && d0.host().edges() != d1.host().edges())
    throw InvalidArgument("extend_over_pair: d0 and d1 live on different graphs");
  auto common = check_separation(*g, d_prime.host(), map_prime, d0.host(), map_h, 2, "extend_over_pair");
  for (const auto* d : {&d_prime, &d0, &d1})
    for (const auto& m : memberships(*d))
      if (m != r) throw InvalidArgument("extend_over_pair: membership is not r everywhere");
  auto out = detail::extend(detail::lift(d_prime.atoms(), map_prime), detail::lift(d0.atoms(), map_h),
                            detail::lift(d1.atoms(), map_h), common[0], common[1], r);
  return DominatingDistribution(std::move(g), std::move(out));
}

PathColouringTable path_tables(int length) {
  if (length < 1) throw InvalidArgument("path_tables: length must be positive");
  PathColouringTable t;
  t.length = length;
  int k = (length + 2) / 3;
  int p = 3 * k - 1;
  t.k = k;
  auto range = [](int lo, int hi) {
    std::vector<int> out;
    for (int c = lo; c <= hi; ++c) out.push_back(c);
    return out;
  };
  auto blank = [&] {
    FractionalColouring c;
    c.p = p;
    c.q = k;
    c.phi.resize(length + 1);
    return c;
  };
  t.lambda = blank();
  t.mu = blank();
  t.nu = blank();
  for (int i = 0; i <= length; ++i) {
    switch (i % 3) {
      case 0: t.lambda.phi[i] = range(1, k); break;
      case 1: t.lambda.phi[i] = range(k + 1, 2 * k); break;
      default: t.lambda.phi[i] = range(2 * k, 3 * k - 1); break;
    }
    for (int s = 0; s < k; ++s) t.mu.phi[i].push_back((i * k + s) % p + 1);
    std::sort(t.mu.phi[i].begin(), t.mu.phi[i].end());
    int j = i / 3;
    switch (i % 3) {
      case 0: t.nu.phi[i] = range(j + 1, k + j); break;
      case 1: {
        t.nu.phi[i] = range(1, j + 1);
        auto tail = range(k + j + 1, 2 * k - 1);
        t.nu.phi[i].insert(t.nu.phi[i].end(), tail.begin(), tail.end());
        break;
      }
      default: t.nu.phi[i] = range(2 * k, 3 * k - 1); break;
    }
  }
  if (length == 3 * k - 2) {
    t.phi0 = t.lambda;
    t.phi1 = t.nu;
  } else if (length == 3 * k - 1) {
    t.phi0 = t.lambda;
    t.phi1 = t.mu;
  } else {
    t.phi0 = t.mu;
    t.phi1 = t.lambda;
  }

  Graph path = path_graph(length + 1);
  for (const auto* c : {&t.lambda, &t.mu, &t.nu}) {
    check_shape(path, *c);
    for (int i = 1; i < length; ++i)
      if (span_at(path, *c, i) != p) throw InternalError("path_tables: an inner vertex misses a colour");
  }
  const auto& a0 = t.phi0.phi.front();
  const auto& b0 = t.phi0.phi.back();
  std::vector<int> shared;
  std::set_intersection(a0.begin(), a0.end(), b0.begin(), b0.end(), std::back_inserter(shared));
  if (!shared.empty()) throw InternalError("path_tables: ends of phi0 share a colour");
  if (t.phi1.phi.front() != t.phi1.phi.back()) throw InternalError("path_tables: ends of phi1 differ");
  return t;
}

DominatingDistribution attach_suspended_path(GraphPtr g, const DominatingDistribution& d_prime,
                                            const VertexMap& map_prime, const SuspendedPath& p,
                                            const Rational& r) {
  int len = p.length();
  if (len < 1) throw InvalidArgument("attach_suspended_path: empty path");
  for (int i = 0; i + 1 <= len; ++i)
    if (!g->adjacent(p.vertices[i], p.vertices[i + 1]))
      throw InvalidArgument("attach_suspended_path: path is not a path of the graph");
  // The path as a graph of its own, embedded along its vertex sequence.
  VertexMap map_h(p.vertices.begin(), p.vertices.end());
  check_separation(*g, d_prime.host(), map_prime, path_graph(len + 1), map_h, 2, "attach_suspended_path");
  for (const auto& m : memberships(d_prime))
    if (m != r) throw InvalidArgument("attach_suspended_path: membership is not r everywhere");
  auto [h0, h1] = detail::path_pair(len, r);
  auto out = detail::extend(detail::lift(d_prime.atoms(), map_prime), detail::lift(h0, map_h),
                            detail::lift(h1, map_h), p.front(), p.back(), r);
  return DominatingDistribution(std::move(g), std::move(out));
}

DominatingDistribution attach_path(const DominatingDistribution& d_prime, int u, int v, int length,
                                   const Rational& r) {
  const Graph& h = d_prime.host();
  if (u == v || u < 0 || v < 0 || u >= h.order() || v >= h.order())
    throw InvalidArgument("attach_path: bad ends");
  if (length < 1 || (length == 1 && h.adjacent(u, v))) throw InvalidArgument("attach_path: bad length");
  std::vector<Edge> es = h.edges();
  SuspendedPath p;
  p.vertices.push_back(u);
  int next = h.order();
  for (int i = 1; i < length; ++i) p.vertices.push_back(next++);
  p.vertices.push_back(v);
  for (int i = 0; i < length; ++i) es.push_back({p.vertices[i], p.vertices[i + 1]});
  auto g = share(Graph(next, es));
  return attach_suspended_path(g, d_prime, identity_map(h.order()), p, r);
}

DominatingDistribution cycle_distribution(int n) {
  if (n < 3) throw InvalidArgument("cycle_distribution: n must be at least 3");
  Atoms a;
  for (int shift = 0; shift < n; ++shift) {
    VertexSet s;
    for (int i = 0; i < n; i += 3) s.insert((i + shift) % n);
    a.push_back({s, Rational(1, n)});
  }
  return DominatingDistribution(share(cycle_graph(n)), std::move(a));
}

}  // namespace fdom
