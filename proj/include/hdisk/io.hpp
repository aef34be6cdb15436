#pragma once

/// JSON and CSV encodings.  Every record carries schema version 1.

#include "hdisk/area.hpp"
#include "hdisk/circle_maps.hpp"
#include "hdisk/poisson.hpp"
#include "hdisk/verdict.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace hdisk {

inline constexpr int kSchemaVersion = 1;

/// Shortest decimal that round-trips; "nan", "inf", "-inf" for non-finite.
std::string format_double(double x);

/// {"kind", "omega_re", "omega_im", "knots": [[t, xi], ...]}.  Round-trips
/// bit-exactly.
nlohmann::json to_json(const BoundaryMap& map);
BoundaryMap boundary_map_from_json(const nlohmann::json& j);

/// [[n, re, im], ...] in ascending n.
nlohmann::json to_json(const FourierCoeffs& coeffs);
FourierCoeffs fourier_coeffs_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AreaEstimate& est);
nlohmann::json to_json(const VerdictRecord& v);

/// Verdict CSV columns, wall_time_ms last.
std::string_view verdict_csv_header();
std::string verdict_csv_row(const VerdictRecord& v);

struct AreaRow {
  std::string map_id;
  std::string family;
  std::string params;
  double r = 0.0;
  AreaEstimate estimate;
  double wall_time_ms = 0.0;
};

std::string_view area_csv_header();
std::string area_csv_row(const AreaRow& row);
nlohmann::json to_json(const AreaRow& row);

}  // namespace hdisk
