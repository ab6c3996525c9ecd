#pragma once

#include <string>

#include <json.hpp>

#include "hyperfan/classify.hpp"
#include "hyperfan/exceptional.hpp"
#include "hyperfan/intersect.hpp"
#include "hyperfan/matrix_id.hpp"
#include "hyperfan/mirror.hpp"
#include "hyperfan/transition.hpp"

namespace hyperfan {

using Json = nlohmann::json;  // std::map-backed: keys serialize sorted

// Deterministic scalar encodings: exact integers as JSON numbers, rationals
// as "p/q" strings in lowest terms, doubles as 12-significant-digit strings.
Json json_int(const Integer& x);
Json json_rational(const Rational& q);
std::string decimal12(double x);

Json to_json(const Vec2& v);
Json to_json(const Vec3& v);
Json to_json(const HyperconifoldClass& c);
Json to_json(const ToricDiagram& d);
Json to_json(const ConeDescription& cd);
Json to_json(const ExceptionalSurface& s);
Json to_json(const IntersectionTensor& t, const std::vector<Vec3>& divisors);
Json resolution_report(const Resolution& r, int index);
Json to_json(const MirrorGeometry& g);
Json to_json(const NodeCertificate& n);
Json to_json(const ExchangeAction& a);
Json to_json(const TransitionReport& t);
Json to_json(const MatrixIdentification& m);

// {command, inputs, schema_version, payload, warnings}; keys stay in this
// fixed order and serialization is byte-stable for identical inputs.
Json envelope(const std::string& command, Json inputs, Json payload,
              std::vector<std::string> warnings = {});

std::string dump_report(const Json& j);

}  // namespace hyperfan
