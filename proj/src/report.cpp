#include "twoslice/report.hpp"

#include <cstdint>
#include <sstream>

namespace twoslice::report {

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::add(const std::string& name, bool pass, std::vector<std::string> witnesses) {
  checks.push_back({name, pass, std::move(witnesses)});
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["inputs"] = nlohmann::ordered_json::array();
  for (const auto& in : inputs) j["inputs"].push_back({{"name", in.name}, {"hash", in.hash}});
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["witnesses"] = c.witnesses;
    j["checks"].push_back(e);
  }
  j["certificates"] = certificates;
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    for (const auto& w : c.witnesses) j["witnesses"].push_back(c.name + ": " + w);
  if (with_timing)
    j["timing_ms"] = timing_ms;
  else
    j["timing_ms"] = nullptr;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  for (const auto& in : inputs) os << "input: " << in.name << " (" << in.hash << ")\n";
  int passed = 0;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
    for (const auto& w : c.witnesses) os << "  witness: " << w << "\n";
    if (c.pass) ++passed;
  }
  os << passed << "/" << checks.size() << " checks passed\n";
  if (with_timing) os << "timing_ms: " << timing_ms << "\n";
  return os.str();
}

std::string emit_report(const Report& r, const std::string& format) {
  if (format == "text") return r.to_text();
  return r.to_json().dump(2) + "\n";
}

}  // namespace twoslice::report
