#include "hdisk/io.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace hdisk {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

// JSON has no non-finite numbers; encode them as strings.
nlohmann::json number(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

}  // namespace

nlohmann::json to_json(const BoundaryMap& map) {
  nlohmann::json knots = nlohmann::json::array();
  for (const auto& k : map.knots()) knots.push_back({k.t, k.xi});
  return {{"schema", kSchemaVersion},
          {"kind", std::string(to_string(map.kind()))},
          {"omega_re", map.omega().real()},
          {"omega_im", map.omega().imag()},
          {"knots", knots}};
}

BoundaryMap boundary_map_from_json(const nlohmann::json& j) {
  std::vector<Knot> knots;
  for (const auto& k : j.at("knots")) {
    if (!k.is_array() || k.size() != 2) throw std::invalid_argument("knot must be [t, xi]");
    knots.push_back({k[0].get<double>(), k[1].get<double>()});
  }
  const std::complex<double> omega(j.at("omega_re").get<double>(), j.at("omega_im").get<double>());
  return BoundaryMap(std::move(knots), omega, map_kind_from_string(j.at("kind").get<std::string>()));
}

nlohmann::json to_json(const FourierCoeffs& coeffs) {
  nlohmann::json out = nlohmann::json::array();
  for (int n = -coeffs.order(); n <= coeffs.order(); ++n) {
    out.push_back({n, coeffs[n].real(), coeffs[n].imag()});
  }
  return out;
}

FourierCoeffs fourier_coeffs_from_json(const nlohmann::json& j) {
  std::vector<std::pair<int, std::complex<double>>> terms;
  for (const auto& t : j) {
    terms.emplace_back(t.at(0).get<int>(), std::complex<double>(t.at(1).get<double>(), t.at(2).get<double>()));
  }
  return FourierCoeffs::from_terms(terms, "json");
}

nlohmann::json to_json(const AreaEstimate& est) {
  return {{"value", number(est.value)},
          {"method", std::string(to_string(est.method))},
          {"resolution", est.resolution},
          {"error_indicator", number(est.error_indicator)}};
}

nlohmann::json to_json(const VerdictRecord& v) {
  return {{"schema", kSchemaVersion},
          {"check_name", v.check_name},
          {"map_id", v.map_id},
          {"family", v.family},
          {"params", v.params},
          {"r", v.r},
          {"method", v.method},
          {"lhs", number(v.lhs)},
          {"rhs", number(v.rhs)},
          {"slack", number(v.slack)},
          {"tolerance", v.tolerance},
          {"passed", v.passed},
          {"inconclusive", v.inconclusive},
          {"resolution", v.resolution},
          {"error_indicator", number(v.error_indicator)},
          {"wall_time_ms", v.wall_time_ms}};
}

std::string_view verdict_csv_header() {
  return "schema,check_name,map_id,family,params,r,method,lhs,rhs,slack,tolerance,passed,resolution,"
         "error_indicator,wall_time_ms";
}

std::string verdict_csv_row(const VerdictRecord& v) {
  std::string passed = v.inconclusive ? "inconclusive" : (v.passed ? "true" : "false");
  std::string row = std::to_string(kSchemaVersion);
  for (const std::string& f :
       {csv_field(v.check_name), csv_field(v.map_id), csv_field(v.family), csv_field(v.params), format_double(v.r),
        csv_field(v.method), format_double(v.lhs), format_double(v.rhs), format_double(v.slack),
        format_double(v.tolerance), passed, std::to_string(v.resolution), format_double(v.error_indicator),
        format_double(v.wall_time_ms)}) {
    row += ',';
    row += f;
  }
  return row;
}

std::string_view area_csv_header() {
  return "schema,map_id,family,params,r,method,value,resolution,error_indicator,wall_time_ms";
}

std::string area_csv_row(const AreaRow& row) {
  std::string out = std::to_string(kSchemaVersion);
  for (const std::string& f :
       {csv_field(row.map_id), csv_field(row.family), csv_field(row.params), format_double(row.r),
        std::string(to_string(row.estimate.method)), format_double(row.estimate.value),
        std::to_string(row.estimate.resolution), format_double(row.estimate.error_indicator),
        format_double(row.wall_time_ms)}) {
    out += ',';
    out += f;
  }
  return out;
}

nlohmann::json to_json(const AreaRow& row) {
  auto j = to_json(row.estimate);
  j["schema"] = kSchemaVersion;
  j["map_id"] = row.map_id;
  j["family"] = row.family;
  j["params"] = row.params;
  j["r"] = row.r;
  j["wall_time_ms"] = row.wall_time_ms;
  return j;
}

}  // namespace hdisk
