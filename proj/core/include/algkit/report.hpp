// Deterministic check reports: byte-identical JSON for identical input.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "algkit/algebroid.hpp"

namespace algkit {

inline constexpr const char* kToolVersion = "algkit 0.1.0";

struct Report {
  std::string command;
  std::string version = kToolVersion;
  std::string input_digest;
  std::vector<CheckReport> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// FNV-1a 64-bit, lowercase hex.
std::string fnv1a_hex(std::string_view bytes);

std::string render_report_text(const Report& report, bool color);
std::string render_report_json(const Report& report);

}  // namespace algkit
