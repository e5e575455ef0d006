#include "algkit/report.hpp"

#include <json.hpp>
#include <sstream>

namespace algkit {

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) out << ((h >> shift) & 0xf);
  return out.str();
}

std::string render_report_text(const Report& report, bool color) {
  const char* green = color ? "\033[32m" : "";
  const char* red = color ? "\033[31m" : "";
  const char* reset = color ? "\033[0m" : "";
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.pass ? green : red) << (c.pass ? "[PASS] " : "[FAIL] ") << reset << c.name;
    if (!c.notes.empty()) out << "  (" << c.notes << ")";
    out << "\n";
    if (c.witness) out << "       witness: " << *c.witness << "\n";
  }
  out << (report.all_pass() ? "ok" : "FAILED") << ": " << report.command << "\n";
  return out.str();
}

std::string render_report_json(const Report& report) {
  nlohmann::ordered_json doc;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json row;
    row["name"] = c.name;
    row["pass"] = c.pass;
    row["witness"] = c.witness ? nlohmann::ordered_json(*c.witness) : nlohmann::ordered_json();
    row["notes"] = c.notes;
    doc["checks"].push_back(std::move(row));
  }
  doc["version"] = report.version;
  doc["command"] = report.command;
  doc["input_digest"] = report.input_digest;
  return doc.dump(2) + "\n";
}

}  // namespace algkit
