#include "eptl/certificate.hpp"

#include "json.hpp"

#include <sstream>

namespace eptl {

void Certificate::add(const std::string& name, bool pass, const std::string& detail) {
  entries.push_back({name, pass, detail});
}

bool Certificate::all_pass() const {
  for (const auto& e : entries) {
    if (!e.pass) return false;
  }
  return true;
}

std::string Certificate::json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["params"] = params;
  j["seed"] = seed;
  j["status"] = all_pass() ? "pass" : "fail";
  j["evidence"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json je;
    je["name"] = e.name;
    je["status"] = e.pass ? "pass" : "fail";
    if (!e.detail.empty()) je["witness"] = e.detail;
    j["evidence"].push_back(je);
  }
  return j.dump(2);
}

std::string Certificate::text() const {
  std::ostringstream os;
  os << (all_pass() ? "PASS " : "FAIL ") << check;
  if (!params.empty()) os << " [" << params << "]";
  os << "\n";
  for (const auto& e : entries) {
    os << "  " << (e.pass ? "pass " : "FAIL ") << e.name;
    if (!e.detail.empty()) os << "  (" << e.detail << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace eptl
