// JSON encoding. Rationals are {"n": "...", "d": "..."} with decimal
// strings; a projective coordinate at infinity has d = "0".

#ifndef DPSYM_SERIALIZE_HPP_
#define DPSYM_SERIALIZE_HPP_

#include <json.hpp>

#include "dpsym/decompose.hpp"
#include "dpsym/models.hpp"
#include "dpsym/periodmap.hpp"

namespace dpsym {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const ProjectiveCoord& c);
Json to_json(const Word& w);
Json to_json(const DivisorClass& c);
Json to_json(const RootVector& v);
Json to_json(const RationalRootVector& v);
Json to_json(const PicMap& m);
Json to_json(const RootImageMatrix& m);
Json to_json(const ParamVector& b);
Json to_json(const SchlesingerParams& t);
Json to_json(const SurfaceState& s);
Json to_json(const SchlesingerState& s);
Json to_json(const CheckState& s);
Json to_json(const CheckResult& c);
Json to_json(const EquivalenceReport& r);
Json to_json(const Decomposition& d, bool with_trace);

// Readers throw ParseError on malformed input. Rationals may be given as
// {"n", "d"} objects, integers, or "p/q" strings.
Rational rational_from_json(const Json& j);
ProjectiveCoord coord_from_json(const Json& j);
PicMap picmap_from_json(const Json& j);
ParamVector params_from_json(const Json& j);
SchlesingerParams schlesinger_from_json(const Json& j);
SurfaceState surface_state_from_json(const Json& j);
SchlesingerState schlesinger_state_from_json(const Json& j);

}  // namespace dpsym

#endif  // DPSYM_SERIALIZE_HPP_
