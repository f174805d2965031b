#pragma once

#include <nsl/locus.hpp>

#include <json.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace nsl {

// Field order in emitted documents is fixed, so equal inputs give
// byte-identical output.
using Json = nlohmann::ordered_json;

// FNV-1a, used to stamp reports with the fixture bytes they were checked
// against.
std::uint64_t fnv64(std::string_view s);
std::string fnv64_hex(std::string_view s);

// Rationals travel as strings "p/q" (or just "p"); parsing also accepts bare
// JSON integers.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json quadext_to_json(const QuadExt& x);

Json nsclass_to_json(const NSClass& e);
NSClass nsclass_from_json(const Json& j);
Json triple_to_json(const std::array<NSClass, 3>& t);
std::array<NSClass, 3> triple_from_json(const Json& j);

Json period_to_json(const PeriodMatrix& tau);
PeriodMatrix period_from_json(const Json& j);

const char* torus_kind_name(TorusKind k);
const char* polarization_status_name(PolarizationStatus s);
const char* approx_status_name(ApproxStatus s);

Json ns_rank_to_json(const NSRankResult& r);
Json polarization_to_json(const PolarizationResult& r);
Json fiber_point_to_json(const FiberPoint& p);
// generators are rendered through the ring so the text matches the printer
Json fiber_report_to_json(const FiberReport& r, const Ring& ring);
Json approx_result_to_json(const ApproxResult& r);

}  // namespace nsl
