#pragma once

#include <string_view>

#include "json.hpp"
#include "polyomino/groebner.hpp"
#include "polyomino/orders.hpp"
#include "polyomino/path.hpp"
#include "polyomino/primitive.hpp"

namespace polyomino {

using json = nlohmann::ordered_json;

inline constexpr int report_schema_version = 1;

json to_json(Point p);
json to_json(const Cell& c);
json to_json(const Interval& I);
json to_json(const Configuration& cfg);
json to_json(const ClosedPathViolation& v);
json to_json(const YResult& y);
json to_json(const GBReport& rep);
json to_json(const InitialIdeal& ini);
json to_json(const ScanResult& scan);

json polyomino_stats(const Polyomino& P);
// Counts of each configuration kind plus the zig-zag census.
json configuration_census(const ClosedPath& cp, const DetectionOptions& opts);

// 64-bit FNV-1a of the input bytes, as 16 hex digits.
std::string digest(std::string_view bytes);

}  // namespace polyomino
