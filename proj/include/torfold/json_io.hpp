#pragma once

#include <string>

#include "json.hpp"
#include "torfold/cluster.hpp"
#include "torfold/errors.hpp"
#include "torfold/ice_quiver.hpp"
#include "torfold/laurent.hpp"
#include "torfold/periodic_quiver.hpp"
#include "torfold/surface.hpp"
#include "torfold/ymonomial.hpp"

namespace torfold::io {

using json = nlohmann::json;

/// All readers throw InputError on malformed or invalid documents.

json to_json(const IceQuiver& q);
IceQuiver ice_quiver_from_json(const json& j);

json to_json(const PeriodicQuiver& pq);
PeriodicQuiver periodic_quiver_from_json(const json& j);

json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

json to_json(const Seed& s);
Seed seed_from_json(const json& j);

json to_json(const OrbitSeed& s);
OrbitSeed orbit_seed_from_json(const json& j);

json to_json(const SigmaTriangulation& t);
SigmaTriangulation triangulation_from_json(const json& j);

json to_json(const YMonomial& m);
YMonomial ymonomial_from_json(const json& j);

json to_json(const Violation& v);
json to_json(const std::vector<Violation>& vs);
json to_json(const FoldabilityResult& r);
json to_json(const IdentityReport& r);

json parse(const std::string& text);
json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);
/// Two-space indented dump with a trailing newline.
std::string dump(const json& j);

}  // namespace torfold::io
