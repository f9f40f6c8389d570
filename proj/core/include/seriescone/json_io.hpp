#pragma once

#include <json.hpp>

#include "seriescone/artin_schreier.hpp"
#include "seriescone/dickson.hpp"
#include "seriescone/gap.hpp"
#include "seriescone/order.hpp"
#include "seriescone/support.hpp"

namespace seriescone {

// Deterministic JSON with exact numbers: rationals encode as plain integers
// or [num, den] pairs, quadratic values as {"a":..., "b":..., "D":...}.
using Json = nlohmann::ordered_json;

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json quad_to_json(const Quad& q);
Quad quad_from_json(const Json& j);

Json vec_to_json(const RatVec& v);
RatVec ratvec_from_json(const Json& j);
Json vec_to_json(const IntVec& v);
IntVec intvec_from_json(const Json& j);

Json cone_to_json(const Cone& c);
Cone cone_from_json(const Json& j);

Json order_to_json(const WeightOrder& o);
WeightOrder order_from_json(const Json& j);

Json spec_to_json(const SupportSpec& s);
SupportSpec spec_from_json(const Json& j);

Json tau_result_to_json(const TauResult& r);
Json threshold_to_json(const ThresholdInfo& t);
Json census_to_json(const HalfspaceCensus& c);
Json diagnostic_to_json(const DiagnosticReport& r);
Json dickson_to_json(const DicksonResult& r);
Json normalization_to_json(const NormalizationResult& r);

Json fq_to_json(const Fq& f);
Fq fq_from_json(const Json& j);
Json fqpoly_to_json(const FqPoly& f);
FqPoly fqpoly_from_json(const Json& j);

Json asroot_to_json(const AsRoot& r);
Json gap_report_to_json(const GapReport& r);
Json field_family_report_to_json(const FieldFamilyReport& r);

}  // namespace seriescone
