#pragma once

// Raw support lists shared by the distribution constructions. These skip the
// validation done by DominatingDistribution so recursive constructions can
// pass intermediate results around cheaply.

#include <utility>
#include <vector>

#include "fdomlab/distribution.hpp"

namespace fdom::detail {

using Atoms = std::vector<Atom>;

// Sorts by set, merges equal sets, drops zero masses.
void normalise(Atoms& a);
Atoms lift(const Atoms& a, const VertexMap& map);
Rational total_mass(const Atoms& a);

std::vector<Rational> member_sums(const Atoms& a, int n);
std::vector<Rational> dominated_sums(const Atoms& a, const Graph& g);

// Mass of the atoms whose set satisfies pred.
template <typename Pred>
Rational mass_where(const Atoms& a, Pred pred) {
  Rational m;
  for (const auto& x : a)
    if (pred(x.set)) m += x.p;
  return m;
}

// The atoms satisfying pred, rescaled to total `mass` (of total `from`).
template <typename Pred>
Atoms piece(const Atoms& a, Pred pred, const Rational& from, const Rational& mass) {
  Atoms out;
  if (mass.is_zero()) return out;
  Rational scale = mass / from;
  for (const auto& x : a)
    if (pred(x.set)) out.push_back({x.set, x.p * scale});
  return out;
}

// Splits a list into a prefix of total `mass` and the rest, cutting one atom if needed.
std::pair<Atoms, Atoms> split_mass(const Atoms& a, const Rational& mass);
// Pairs two lists of equal total mass along their cumulative masses.
Atoms couple(const Atoms& a, const Atoms& b);

Atoms from_colouring(const FractionalColouring& c);
// Throws InvalidArgument if a membership exceeds r.
Atoms complete(Atoms a, int n, const Rational& r);

// Order-1 gluing at v. a0, a1 use the ids of the whole graph; n0, n1 are the
// neighbourhoods of v on each side.
Atoms glue(const Atoms& a0, const Atoms& a1, int v, const VertexSet& n0, const VertexSet& n1,
           const Rational& r);
// Order-2 extension over {u, v}; all lists use the ids of the whole graph.
Atoms extend(const Atoms& dp, const Atoms& h0, const Atoms& h1, int u, int v, const Rational& r);
// The two path distributions raised to membership r, in path-local ids.
std::pair<Atoms, Atoms> path_pair(int length, const Rational& r);

}  // namespace fdom::detail
