#pragma once

#include <string>
#include <utility>

#include "json.hpp"

#include "fdomlab/colouring.hpp"
#include "fdomlab/distribution.hpp"
#include "fdomlab/fdom.hpp"
#include "fdomlab/rational.hpp"

namespace fdom {

using Json = nlohmann::json;

// Rationals are ["num", "den"] with decimal strings, so any size survives.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const PrimalCertificate& c);  // {"type":"primal","value":..,"columns":[{"set":[..],"x":..}]}
Json to_json(const DualCertificate& c);    // {"type":"dual","value":..,"weights":[..]}
PrimalCertificate primal_from_json(const Json& j);
// Also accepts a bare {"weights": [...]} object.
DualCertificate dual_from_json(const Json& j);

Json to_json(const DominatingDistribution& d, const Rational& r);  // {"r":..,"atoms":[{"set":[..],"p":..}]}
std::pair<DominatingDistribution, Rational> distribution_from_json(const Json& j, GraphPtr host);

Json to_json(const FractionalColouring& c);  // {"p":int,"q":int,"phi":[[..]]}
FractionalColouring colouring_from_json(const Json& j);

// Parses text, rethrowing syntax and shape errors as InvalidArgument.
Json parse_json(const std::string& text);

}  // namespace fdom
