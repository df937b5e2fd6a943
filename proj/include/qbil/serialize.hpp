#pragma once

#include <json.hpp>

#include "qbil/verify.hpp"

namespace qbil {

using json = nlohmann::ordered_json;

// Scalars are serialized as [re, im] pairs for float values and "p/q"
// strings for exact rationals.
json scalar_to_json(const CDouble& v);
json scalar_to_json(const Rational& v);

json point_to_json(const PointRecord& pr);
PointRecord point_from_json(const json& j);

json shape_to_json(const Shape& sh);
Shape shape_from_json(const json& j);

json report_to_json(const VerificationReport& rep);
json summary_to_json(const SweepSummary& s);

extern const char* kReportCsvHeader;
std::string report_to_csv(const VerificationReport& rep);

json catalog_to_json();

// Series-spec files for the eval command:
//   {"kind": "unilateral"|"bilateral", "upper": [...], "lower": [...],
//    "q": <scalar>, "z": <scalar>}
// Values are [re, im] pairs or "p/q" strings; a file with any float entry
// cannot be evaluated in the exact tower.
struct SpecFile {
  SeriesKind kind = SeriesKind::Unilateral;
  std::vector<Scalar> upper, lower;
  Scalar q, z;
  bool all_exact = true;
};

SpecFile spec_from_json(const json& j);

}  // namespace qbil
