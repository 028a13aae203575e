#ifndef IBS_REPORT_JSON_HPP
#define IBS_REPORT_JSON_HPP

// Structured serialization of verification reports. Value fields are a pure
// function of (catalog, precision); timings live in a separate section.

#include "ibs/verifier.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"

namespace ibs {

inline constexpr const char* kToolVersion = "0.1.0";

namespace detail {
// Two decimals keep the printed value independent of float formatting.
inline double rounded_digits(double d) { return std::round(d * 100.0) / 100.0; }

inline std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}
}  // namespace detail

inline nlohmann::ordered_json to_json(const VerificationReport& r, int digits) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["status"] = to_string(r.status);
  j["digits_agreed"] = detail::rounded_digits(r.digits_agreed);
  j["abs_diff"] = r.status == Status::error ? std::string() : to_string(r.abs_diff, 6);
  j["precision_used"] = r.precision_used;
  j["anchor"] = r.anchor;
  if (r.status != Status::error) {
    j["lhs"] = to_string(r.lhs_value, digits);
    j["rhs"] = to_string(r.rhs_value, digits);
  }
  if (r.contour_digits) j["contour_digits_agreed"] = detail::rounded_digits(*r.contour_digits);
  if (!r.message.empty()) j["error"] = r.message;
  return j;
}

/// {metadata: {tool_version, digits, catalog_hash}, reports: [...],
///  timing: {elapsed_ms: {id: ms}}}
inline nlohmann::ordered_json report_document(const std::vector<VerificationReport>& reports,
                                              const std::vector<Identity>& catalog, int digits) {
  nlohmann::ordered_json doc;
  doc["metadata"] = {{"tool_version", kToolVersion},
                     {"digits", digits},
                     {"catalog_hash", detail::hex64(catalog_hash(catalog))}};
  auto arr = nlohmann::ordered_json::array();
  auto timing = nlohmann::ordered_json::object();
  for (const auto& r : reports) {
    arr.push_back(to_json(r, digits));
    timing[r.id] = r.elapsed_ms;
  }
  doc["reports"] = std::move(arr);
  doc["timing"] = {{"elapsed_ms", std::move(timing)}};
  return doc;
}

}  // namespace ibs

#endif  // IBS_REPORT_JSON_HPP
