// Algebroid definition files: UTF-8 JSON carrying the structure functions,
// anchors and named tensors, with coefficient expressions in the polynomial
// grammar over the declared base coordinates.
#pragma once

#include <map>
#include <string>

#include "algkit/pn.hpp"

namespace algkit {

// Schema or semantic violation, with a path-to-field diagnostic ("brackets[0].outputs[0].coeff").
struct SemanticError : std::runtime_error {
  SemanticError(const std::string& path_, const std::string& message)
      : std::runtime_error(path_ + ": " + message), path(path_) {}
  std::string path;
};

struct ParsedDefinition {
  std::string name;
  Algebroid algebroid;
  std::map<std::string, FiberMultivector> multivectors;
  std::map<std::string, EndoTensor> endomorphisms;
};

// Throws nlohmann::json::parse_error on malformed JSON and SemanticError on
// schema violations (index out of range, skew violation, unknown coordinate).
ParsedDefinition parse_definition(const std::string& json_text);

// Canonical JSON serialization; parse_definition(render_definition(d))
// round-trips structurally.
std::string render_definition(const ParsedDefinition& def);

}  // namespace algkit
