#include "fdomlab/json_io.hpp"

#include <algorithm>

#include "fdomlab/errors.hpp"

namespace fdom {

namespace {

Json set_json(const VertexSet& s) {
  Json a = Json::array();
  for (int v : s) a.push_back(v);
  return a;
}

VertexSet set_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("vertex set must be an array");
  VertexSet s;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidArgument("vertex ids must be integers");
    int v = x.get<int>();
    if (v < 0 || v >= VertexSet::kCapacity) throw InvalidArgument("vertex id out of range: " + std::to_string(v));
    s.insert(v);
  }
  return s;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json to_json(const Rational& r) { return Json::array({r.num_str(), r.den_str()}); }

Rational rational_from_json(const Json& j) {
  auto part = [](const Json& x) {
    if (x.is_string()) return x.get<std::string>();
    if (x.is_number_integer()) return std::to_string(x.get<long long>());
    throw InvalidArgument("rational parts must be strings or integers");
  };
  if (j.is_array() && j.size() == 2) return Rational::from_strings(part(j[0]), part(j[1]));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw InvalidArgument("rational must be [\"num\", \"den\"]");
}

Json to_json(const PrimalCertificate& c) {
  Json cols = Json::array();
  for (const auto& col : c.columns) cols.push_back({{"set", set_json(col.set)}, {"x", to_json(col.x)}});
  return {{"type", "primal"}, {"value", to_json(c.objective)}, {"columns", cols}};
}

Json to_json(const DualCertificate& c) {
  Json w = Json::array();
  for (const auto& x : c.weights) w.push_back(to_json(x));
  return {{"type", "dual"}, {"value", to_json(c.total)}, {"weights", w}};
}

PrimalCertificate primal_from_json(const Json& j) {
  if (j.contains("type") && j.at("type") != "primal") throw InvalidArgument("not a primal certificate");
  PrimalCertificate c;
  for (const auto& col : field(j, "columns"))
    c.columns.push_back({set_from_json(field(col, "set")), rational_from_json(field(col, "x"))});
  c.objective = rational_from_json(field(j, "value"));
  return c;
}

DualCertificate dual_from_json(const Json& j) {
  if (j.contains("type") && j.at("type") != "dual") throw InvalidArgument("not a dual certificate");
  DualCertificate c;
  const Json& w = field(j, "weights");
  if (!w.is_array()) throw InvalidArgument("weights must be an array");
  for (const auto& x : w) c.weights.push_back(rational_from_json(x));
  if (j.contains("value")) {
    c.total = rational_from_json(j.at("value"));
  } else {
    for (const auto& x : c.weights) c.total += x;
  }
  return c;
}

Json to_json(const DominatingDistribution& d, const Rational& r) {
  Json atoms = Json::array();
  for (const auto& a : d.atoms()) atoms.push_back({{"set", set_json(a.set)}, {"p", to_json(a.p)}});
  return {{"r", to_json(r)}, {"atoms", atoms}};
}

std::pair<DominatingDistribution, Rational> distribution_from_json(const Json& j, GraphPtr host) {
  std::vector<Atom> atoms;
  for (const auto& a : field(j, "atoms"))
    atoms.push_back({set_from_json(field(a, "set")), rational_from_json(field(a, "p"))});
  return {DominatingDistribution(std::move(host), std::move(atoms)), rational_from_json(field(j, "r"))};
}

Json to_json(const FractionalColouring& c) { return {{"p", c.p}, {"q", c.q}, {"phi", c.phi}}; }

FractionalColouring colouring_from_json(const Json& j) {
  FractionalColouring c;
  try {
    c.p = field(j, "p").get<int>();
    c.q = field(j, "q").get<int>();
    c.phi = field(j, "phi").get<std::vector<std::vector<int>>>();
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("bad colouring: ") + e.what());
  }
  for (auto& cols : c.phi) std::sort(cols.begin(), cols.end());
  return c;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace fdom
