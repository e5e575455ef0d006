#include "algkit/definition.hpp"

#include <json.hpp>

namespace algkit {

namespace {

using json = nlohmann::ordered_json;

std::string at_index(const std::string& field, std::size_t i) {
  return field + "[" + std::to_string(i) + "]";
}

int require_int(const json& node, const std::string& path) {
  if (!node.is_number_integer()) throw SemanticError(path, "expected an integer");
  return node.get<int>();
}

std::string require_string(const json& node, const std::string& path) {
  if (!node.is_string()) throw SemanticError(path, "expected a string");
  return node.get<std::string>();
}

int require_index(const json& node, const std::string& path, int lo, int hi) {
  const int v = require_int(node, path);
  if (v < lo || v > hi)
    throw SemanticError(path, "index " + std::to_string(v) + " out of range [" +
                                  std::to_string(lo) + "," + std::to_string(hi) + "]");
  return v;
}

Polynomial parse_coeff(const json& node, const std::string& path, const VarSpace& base) {
  const std::string src = require_string(node, path);
  try {
    return parse_polynomial(src, base);
  } catch (const ParseError& e) {
    throw SemanticError(path, std::string(e.what()) + " at position " + std::to_string(e.pos));
  }
}

bool reserved_coordinate_name(const std::string& name) {
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (name.size() > 1 && name[0] == 'y' && all_digits(std::string_view(name).substr(1)))
    return true;
  if (name.size() > 2 && name.compare(0, 2, "xi") == 0 &&
      all_digits(std::string_view(name).substr(2)))
    return true;
  return false;
}

}  // namespace

ParsedDefinition parse_definition(const std::string& json_text) {
  const json doc = json::parse(json_text);  // propagates json::parse_error
  if (!doc.is_object()) throw SemanticError("$", "definition must be a JSON object");

  const std::string name = doc.contains("name") ? require_string(doc["name"], "name") : "";

  if (!doc.contains("base_coords")) throw SemanticError("base_coords", "missing field");
  if (!doc["base_coords"].is_array()) throw SemanticError("base_coords", "expected an array");
  std::vector<std::string> base_coords;
  for (std::size_t i = 0; i < doc["base_coords"].size(); ++i) {
    std::string coord = require_string(doc["base_coords"][i], at_index("base_coords", i));
    if (reserved_coordinate_name(coord))
      throw SemanticError(at_index("base_coords", i),
                          "'" + coord + "' collides with reserved fiber coordinate names");
    for (const auto& seen : base_coords)
      if (seen == coord)
        throw SemanticError(at_index("base_coords", i), "duplicate coordinate '" + coord + "'");
    base_coords.push_back(std::move(coord));
  }
  const int m = static_cast<int>(base_coords.size());

  if (!doc.contains("rank")) throw SemanticError("rank", "missing field");
  const int n = require_int(doc["rank"], "rank");
  if (n < 1) throw SemanticError("rank", "rank must be positive");

  if (!doc.contains("skew") || !doc["skew"].is_boolean())
    throw SemanticError("skew", "missing or non-boolean field");
  const bool skew = doc["skew"].get<bool>();

  Algebroid A(base_coords, n, skew, Carrier::on_E);
  const VarSpace& base = A.base_space();

  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) throw SemanticError("brackets", "expected an array");
    for (std::size_t b = 0; b < doc["brackets"].size(); ++b) {
      const json& row = doc["brackets"][b];
      const std::string path = at_index("brackets", b);
      if (!row.is_object()) throw SemanticError(path, "expected an object");
      const int i = require_index(row.contains("i") ? row["i"] : json(), path + ".i", 1, n);
      const int j = require_index(row.contains("j") ? row["j"] : json(), path + ".j", 1, n);
      if (skew && i >= j)
        throw SemanticError(path, "skew file: bracket rows must have i < j");
      if (!row.contains("outputs") || !row["outputs"].is_array())
        throw SemanticError(path + ".outputs", "expected an array");
      for (std::size_t o = 0; o < row["outputs"].size(); ++o) {
        const json& out = row["outputs"][o];
        const std::string opath = path + ".outputs[" + std::to_string(o) + "]";
        if (!out.is_object()) throw SemanticError(opath, "expected an object");
        const int k = require_index(out.contains("k") ? out["k"] : json(), opath + ".k", 1, n);
        Polynomial coeff =
            parse_coeff(out.contains("coeff") ? out["coeff"] : json(), opath + ".coeff", base);
        if (skew)
          A.add_bracket_term(i, j, k, coeff);
        else
          A.set_c(k, i, j, A.c(k, i, j) + coeff);
      }
    }
  }

  auto read_anchor = [&](const char* field, bool left) {
    if (!doc.contains(field)) return;
    if (!doc[field].is_array()) throw SemanticError(field, "expected an array");
    if (skew && !left && !doc[field].empty())
      throw SemanticError(field, "skew file: anchor_right must be omitted (one anchor)");
    for (std::size_t r = 0; r < doc[field].size(); ++r) {
      const json& row = doc[field][r];
      const std::string path = at_index(field, r);
      if (!row.is_object()) throw SemanticError(path, "expected an object");
      const int i = require_index(row.contains("i") ? row["i"] : json(), path + ".i", 1, n);
      const int a = require_index(row.contains("a") ? row["a"] : json(), path + ".a", 1,
                                  std::max(m, 0));
      Polynomial coeff =
          parse_coeff(row.contains("coeff") ? row["coeff"] : json(), path + ".coeff", base);
      if (skew) {
        A.set_anchor(a, i, A.anchor_left(a, i) + coeff);
      } else if (left) {
        A.set_anchor_left(a, i, A.anchor_left(a, i) + coeff);
      } else {
        A.set_anchor_right(a, i, A.anchor_right(a, i) + coeff);
      }
    }
  };
  read_anchor("anchor_left", true);
  read_anchor("anchor_right", false);

  ParsedDefinition def{name, std::move(A), {}, {}};

  if (doc.contains("tensors")) {
    if (!doc["tensors"].is_object()) throw SemanticError("tensors", "expected an object");
    for (const auto& [tname, tnode] : doc["tensors"].items()) {
      const std::string path = "tensors." + tname;
      if (!tnode.is_object()) throw SemanticError(path, "expected an object");
      const std::string kind =
          require_string(tnode.contains("kind") ? tnode["kind"] : json(), path + ".kind");
      if (kind == "multivector") {
        const int degree =
            require_int(tnode.contains("degree") ? tnode["degree"] : json(), path + ".degree");
        if (degree < 0 || degree > n)
          throw SemanticError(path + ".degree", "degree out of range [0," + std::to_string(n) + "]");
        FiberMultivector u(base, n, degree);
        if (tnode.contains("terms")) {
          if (!tnode["terms"].is_array()) throw SemanticError(path + ".terms", "expected an array");
          for (std::size_t t = 0; t < tnode["terms"].size(); ++t) {
            const json& term = tnode["terms"][t];
            const std::string tpath = path + ".terms[" + std::to_string(t) + "]";
            if (!term.is_object()) throw SemanticError(tpath, "expected an object");
            if (!term.contains("indices") || !term["indices"].is_array())
              throw SemanticError(tpath + ".indices", "expected an array");
            IndexTuple indices;
            for (std::size_t q = 0; q < term["indices"].size(); ++q)
              indices.push_back(require_index(term["indices"][q],
                                              tpath + ".indices[" + std::to_string(q) + "]", 1, n));
            if (static_cast<int>(indices.size()) != degree)
              throw SemanticError(tpath + ".indices", "expected " + std::to_string(degree) +
                                                          " indices");
            for (std::size_t q = 1; q < indices.size(); ++q)
              if (indices[q] <= indices[q - 1])
                throw SemanticError(tpath + ".indices", "indices must be strictly increasing");
            u.add_term(indices, parse_coeff(term.contains("coeff") ? term["coeff"] : json(),
                                            tpath + ".coeff", base));
          }
        }
        def.multivectors.emplace(tname, std::move(u));
      } else if (kind == "endomorphism") {
        EndoTensor N(base, n);
        if (tnode.contains("terms")) {
          if (!tnode["terms"].is_array()) throw SemanticError(path + ".terms", "expected an array");
          for (std::size_t t = 0; t < tnode["terms"].size(); ++t) {
            const json& term = tnode["terms"][t];
            const std::string tpath = path + ".terms[" + std::to_string(t) + "]";
            if (!term.is_object()) throw SemanticError(tpath, "expected an object");
            const int row =
                require_index(term.contains("row") ? term["row"] : json(), tpath + ".row", 1, n);
            const int col =
                require_index(term.contains("col") ? term["col"] : json(), tpath + ".col", 1, n);
            N.set(row, col, N.at(row, col) + parse_coeff(term.contains("coeff") ? term["coeff"]
                                                                                 : json(),
                                                         tpath + ".coeff", base));
          }
        }
        def.endomorphisms.emplace(tname, std::move(N));
      } else {
        throw SemanticError(path + ".kind", "expected 'multivector' or 'endomorphism'");
      }
    }
  }
  return def;
}

std::string render_definition(const ParsedDefinition& def) {
  const Algebroid& A = def.algebroid;
  json doc;
  doc["name"] = def.name;
  doc["base_coords"] = A.base_space().base_names();
  doc["rank"] = A.rank();
  doc["skew"] = A.skew();

  json brackets = json::array();
  for (int i = 1; i <= A.rank(); ++i) {
    const int j_lo = A.skew() ? i + 1 : 1;
    for (int j = j_lo; j <= A.rank(); ++j) {
      json outputs = json::array();
      for (int k = 1; k <= A.rank(); ++k)
        if (!A.c(k, i, j).is_zero())
          outputs.push_back({{"k", k}, {"coeff", A.c(k, i, j).to_string()}});
      if (!outputs.empty()) brackets.push_back({{"i", i}, {"j", j}, {"outputs", outputs}});
    }
  }
  doc["brackets"] = std::move(brackets);

  auto anchor_json = [&](bool left) {
    json rows = json::array();
    for (int a = 1; a <= A.base_dim(); ++a)
      for (int i = 1; i <= A.rank(); ++i) {
        const Polynomial& p = left ? A.anchor_left(a, i) : A.anchor_right(a, i);
        if (!p.is_zero()) rows.push_back({{"i", i}, {"a", a}, {"coeff", p.to_string()}});
      }
    return rows;
  };
  doc["anchor_left"] = anchor_json(true);
  if (!A.skew()) doc["anchor_right"] = anchor_json(false);

  json tensors = json::object();
  for (const auto& [tname, u] : def.multivectors) {
    json terms = json::array();
    for (const auto& [tuple, p] : u.components())
      terms.push_back({{"indices", tuple}, {"coeff", p.to_string()}});
    tensors[tname] = {{"kind", "multivector"}, {"degree", u.degree()}, {"terms", terms}};
  }
  for (const auto& [tname, N] : def.endomorphisms) {
    json terms = json::array();
    for (int i = 1; i <= N.rank(); ++i)
      for (int j = 1; j <= N.rank(); ++j)
        if (!N.at(i, j).is_zero())
          terms.push_back({{"row", i}, {"col", j}, {"coeff", N.at(i, j).to_string()}});
    tensors[tname] = {{"kind", "endomorphism"}, {"terms", terms}};
  }
  doc["tensors"] = std::move(tensors);
  return doc.dump(2) + "\n";
}

}  // namespace algkit
