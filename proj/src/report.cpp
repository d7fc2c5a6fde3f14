#include "bicomlab/report.hpp"

namespace bicomlab {

void Report::require(bool ok, const std::string& what) {
  if (!ok) {
    pass = false;
    notes.push_back("FAILED: " + what);
  }
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["claim"] = claim;
  if (degree > 0) j["degree"] = degree;
  j["pass"] = pass;
  nlohmann::json d = nlohmann::json::object();
  for (const auto& [k, v] : dims) d[k] = v;
  j["dims"] = std::move(d);
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

std::string Report::str() const {
  std::string s = claim;
  if (degree > 0) s += " degree " + std::to_string(degree);
  s += pass ? ": PASS" : ": FAIL";
  for (const auto& [k, v] : dims) s += "  " + k + "=" + std::to_string(v);
  for (const auto& n : notes) s += "\n  " + n;
  return s;
}

}  // namespace bicomlab
