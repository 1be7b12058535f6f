#include "dpsym/serialize.hpp"

namespace dpsym {

namespace {

template <typename Derived>
Json rational_array(const Eigen::MatrixBase<Derived>& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_json(Rational(v(i))));
  return a;
}

template <typename Derived>
Json integer_array(const Eigen::MatrixBase<Derived>& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const Rational& r) {
  return Json{{"n", numerator(r).str()}, {"d", denominator(r).str()}};
}

Json to_json(const ProjectiveCoord& c) {
  return Json{{"n", numerator(c.num()).str()},
              {"d", c.is_infinite() ? std::string("0") : denominator(c.num()).str()}};
}

Json to_json(const Word& w) {
  Json a = Json::array();
  for (Generator g : w) a.push_back(std::string(to_string(g)));
  return a;
}

Json to_json(const DivisorClass& c) {
  return integer_array(c);
}

Json to_json(const RootVector& v) {
  return integer_array(v);
}

Json to_json(const RationalRootVector& v) {
  return rational_array(v);
}

Json to_json(const PicMap& m) {
  Json rows = Json::array();
  for (int i = 0; i < kPicRank; ++i) rows.push_back(integer_array(m.row(i).transpose()));
  return rows;
}

Json to_json(const RootImageMatrix& m) {
  Json cols = Json::array();
  for (int i = 0; i < kNumSimpleRoots; ++i) cols.push_back(integer_array(m.col(i)));
  return cols;
}

Json to_json(const ParamVector& b) {
  return rational_array(b);
}

Json to_json(const SchlesingerParams& t) {
  const std::array<const Rational*, 7> v{&t.theta01, &t.theta02, &t.theta11, &t.theta12,
                                         &t.kappa1,  &t.kappa2,  &t.kappa3};
  Json j = Json::object();
  for (int i = 0; i < 7; ++i) j[kSchlesingerNames[i]] = to_json(*v[i]);
  return j;
}

Json to_json(const SurfaceState& s) {
  return Json{{"b", to_json(s.b)}, {"f", to_json(s.p.f)}, {"g", to_json(s.p.g)}};
}

Json to_json(const SchlesingerState& s) {
  return Json{{"theta", to_json(s.t)}, {"x", to_json(s.x)}, {"y", to_json(s.y)}};
}

Json to_json(const CheckState& s) {
  return std::visit([](const auto& v) { return to_json(v); }, s);
}

Json to_json(const CheckResult& c) {
  Json j{{"name", c.name},
         {"verdict", to_string(c.verdict)},
         {"accepted", c.accepted},
         {"rejected", c.rejected}};
  if (c.counterexample) j["counterexample"] = to_json(*c.counterexample);
  if (c.lhs) j["lhs"] = to_json(*c.lhs);
  if (c.rhs) j["rhs"] = to_json(*c.rhs);
  return j;
}

Json to_json(const EquivalenceReport& r) {
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) checks.push_back(to_json(c));
  return Json{{"passed", r.passed()}, {"no_samples", r.no_samples()}, {"checks", checks}};
}

Json to_json(const Decomposition& d, bool with_trace) {
  Json j{{"word", to_json(d.word)}};
  if (with_trace) {
    Json steps = Json::array();
    for (const ReductionStep& s : d.trace)
      steps.push_back(Json{{"index", s.index}, {"potential", s.potential}, {"images", to_json(s.images)}});
    j["trace"] = steps;
  }
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_object()) {
    const Json& n = field(j, "n");
    const Json& d = field(j, "d");
    if (!n.is_string() || !d.is_string()) throw ParseError("rational fields must be strings");
    return parse_rational(n.get<std::string>() + "/" + d.get<std::string>());
  }
  throw ParseError("expected a rational, got " + j.dump());
}

ProjectiveCoord coord_from_json(const Json& j) {
  if (j.is_string() && (j.get<std::string>() == "inf" || j.get<std::string>() == "infinity"))
    return ProjectiveCoord::infinity();
  if (j.is_object() && j.contains("d") && j.at("d").is_string() && j.at("d").get<std::string>() == "0") {
    const Rational n = rational_from_json(field(j, "n"));
    return ProjectiveCoord::from_pair(n, 0);
  }
  return rational_from_json(j);
}

PicMap picmap_from_json(const Json& j) {
  if (!j.is_array() || j.size() != kPicRank) throw ParseError("picmap must be a 10x10 array");
  PicMap m;
  for (int i = 0; i < kPicRank; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != kPicRank) throw ParseError("picmap must be a 10x10 array");
    for (int k = 0; k < kPicRank; ++k) {
      if (!row[k].is_number_integer()) throw ParseError("picmap entries must be integers");
      m(i, k) = row[k].get<Integer>();
    }
  }
  return m;
}

ParamVector params_from_json(const Json& j) {
  if (!j.is_array() || j.size() != kNumParams) throw ParseError("b must be an array of 8 rationals");
  ParamVector b;
  for (int i = 0; i < kNumParams; ++i) b(i) = rational_from_json(j[i]);
  return b;
}

SchlesingerParams schlesinger_from_json(const Json& j) {
  SchlesingerParams t;
  const std::array<Rational*, 7> v{&t.theta01, &t.theta02, &t.theta11, &t.theta12,
                                   &t.kappa1,  &t.kappa2,  &t.kappa3};
  if (j.is_array()) {
    if (j.size() != 7) throw ParseError("theta must have 7 entries");
    for (int i = 0; i < 7; ++i) *v[i] = rational_from_json(j[i]);
  } else {
    for (int i = 0; i < 7; ++i) *v[i] = rational_from_json(field(j, kSchlesingerNames[i]));
  }
  return t;
}

SurfaceState surface_state_from_json(const Json& j) {
  SurfaceState s;
  s.b = params_from_json(field(j, "b"));
  s.p.f = coord_from_json(field(j, "f"));
  s.p.g = coord_from_json(field(j, "g"));
  return s;
}

SchlesingerState schlesinger_state_from_json(const Json& j) {
  SchlesingerState s;
  s.t = schlesinger_from_json(field(j, "theta"));
  s.x = coord_from_json(field(j, "x"));
  s.y = coord_from_json(field(j, "y"));
  return s;
}

}  // namespace dpsym
