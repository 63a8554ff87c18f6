#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace twoslice::report {

struct CheckEntry {
  std::string name;
  bool pass = false;
  std::vector<std::string> witnesses;
};

struct InputEntry {
  std::string name;
  std::string hash;  // FNV-1a of the canonical block text
};

// Machine-readable verification report. Serialization is deterministic for
// identical inputs; wall-clock timing is emitted only on request so that the
// default output is byte-identical across runs.
struct Report {
  std::string command;
  std::vector<InputEntry> inputs;
  std::vector<CheckEntry> checks;
  std::vector<nlohmann::ordered_json> certificates;
  bool with_timing = false;
  double timing_ms = 0.0;

  bool all_pass() const;
  void add(const std::string& name, bool pass, std::vector<std::string> witnesses = {});
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

std::string fnv1a_hex(const std::string& data);

// format is "json" or "text"
std::string emit_report(const Report& r, const std::string& format);

}  // namespace twoslice::report
