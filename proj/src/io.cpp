#include "lsc/io.h"

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "lsc/errors.h"

namespace lsc {

using nlohmann::json;

namespace {

Field field_from_json(const json& j) {
  if (j.is_string()) return Field::parse(j.get<std::string>());
  if (j.is_object() && j.size() == 1 && j.contains("Fp") &&
      j["Fp"].is_number_unsigned())
    return Field::prime(j["Fp"].get<std::uint32_t>());
  throw ParseError("bad \"field\" (expected \"Q\" or {\"Fp\": <odd prime>})");
}

std::vector<std::string> name_list(const json& doc, const std::string& key, bool required) {
  if (!doc.contains(key)) {
    if (required) throw ParseError("missing \"" + key + "\"");
    return {};
  }
  const json& arr = doc[key];
  if (!arr.is_array()) throw ParseError("\"" + key + "\" must be a list of names");
  std::vector<std::string> out;
  for (const json& v : arr) {
    if (!v.is_string() || v.get<std::string>().empty())
      throw ParseError("\"" + key + "\" must contain nonempty strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::string coefficient_string(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError("bracket coefficient must be a string or integer");
}

FamilyTag family_from_json(const json& j) {
  static const std::map<std::string, FamilyTag::Kind> kinds = {
      {"L", FamilyTag::Kind::filiform},
      {"SL", FamilyTag::Kind::solvable_filiform},
      {"N", FamilyTag::Kind::nilpotent},
      {"SN", FamilyTag::Kind::solvable_nilpotent}};
  const auto it = kinds.find(j.value("kind", std::string()));
  if (it == kinds.end())
    throw ParseError("\"family.kind\" must be one of L, SL, N, SN");
  FamilyTag tag;
  tag.kind = it->second;
  for (const json& v : j.value("ns", json::array())) tag.ns.push_back(v.get<std::uint32_t>());
  for (const json& v : j.value("ms", json::array())) tag.ms.push_back(v.get<std::uint32_t>());
  return tag;
}

std::string kind_string(FamilyTag::Kind k) {
  switch (k) {
    case FamilyTag::Kind::filiform: return "L";
    case FamilyTag::Kind::solvable_filiform: return "SL";
    case FamilyTag::Kind::nilpotent: return "N";
    default: return "SN";
  }
}

}  // namespace

SuperAlgebra parse_algebra(const std::string& text, bool run_validation) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("spec is not well-formed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("spec must be a JSON object");
  if (!doc.contains("field")) throw ParseError("missing \"field\"");

  const Field field = field_from_json(doc["field"]);
  const std::vector<std::string> evens = name_list(doc, "even_basis", true);
  const std::vector<std::string> odds = name_list(doc, "odd_basis", false);

  std::vector<BasisVector> basis;
  std::map<std::string, std::size_t> index;
  for (const std::string& n : evens) basis.push_back({n, Parity::even});
  for (const std::string& n : odds) basis.push_back({n, Parity::odd});
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!index.emplace(basis[i].name, i).second)
      throw ParseError("duplicate basis name '" + basis[i].name + "'");
  if (basis.empty()) throw ParseError("basis is empty");

  const auto lookup = [&](const json& v, const char* where) -> std::size_t {
    if (!v.is_string()) throw ParseError(std::string(where) + " must be a basis name");
    const auto it = index.find(v.get<std::string>());
    if (it == index.end())
      throw ParseError("unknown basis name '" + v.get<std::string>() + "' in " + where);
    return it->second;
  };

  ConstantsMap raw;
  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) throw ParseError("\"brackets\" must be a list");
    std::size_t pos = 0;
    for (const json& b : doc["brackets"]) {
      const std::string where = "brackets[" + std::to_string(pos++) + "]";
      if (!b.is_object() || !b.contains("left") || !b.contains("right"))
        throw ParseError(where + " must be {left, right, result}");
      const std::uint32_t i = static_cast<std::uint32_t>(lookup(b["left"], where.c_str()));
      const std::uint32_t j = static_cast<std::uint32_t>(lookup(b["right"], where.c_str()));
      SparseVector rv(basis.size(), field);
      for (const json& term : b.value("result", json::array())) {
        if (!term.is_object() || !term.contains("basis") || !term.contains("coeff"))
          throw ParseError(where + ".result entries must be {basis, coeff}");
        const std::size_t k = lookup(term["basis"], (where + ".result").c_str());
        Scalar c = Scalar::zero(field);
        try {
          c = Scalar::parse(coefficient_string(term["coeff"]), field);
        } catch (const Error& e) {
          throw ParseError(where + ".result: " + e.what());
        }
        rv.add(k, c);
      }
      if (!raw.emplace(BracketKey{i, j}, std::move(rv)).second)
        throw ParseError(where + " repeats the pair [" + basis[i].name + ", " +
                         basis[j].name + "]");
    }
  }

  std::optional<FamilyTag> tag;
  if (doc.contains("family")) tag = family_from_json(doc["family"]);

  SuperAlgebra g(field, std::move(basis), raw, tag);
  if (run_validation) {
    const ValidationReport rep = g.validate();
    if (!rep.ok()) throw DomainError(rep.describe(g.basis()));
  }
  return g;
}

std::string serialize_algebra(const SuperAlgebra& g) {
  json doc;
  if (g.field().is_rational())
    doc["field"] = "Q";
  else
    doc["field"] = json{{"Fp", g.field().characteristic()}};

  json evens = json::array(), odds = json::array();
  for (const BasisVector& b : g.basis())
    (b.parity == Parity::even ? evens : odds).push_back(b.name);
  doc["even_basis"] = std::move(evens);
  doc["odd_basis"] = std::move(odds);

  json brackets = json::array();
  for (const auto& [key, vec] : g.constants()) {
    json result = json::array();
    for (const auto& [idx, c] : vec.entries()) {
      const std::string coeff =
          g.field().is_rational() ? c.str() : std::to_string(c.residue_value());
      result.push_back(json{{"basis", g.basis(idx).name}, {"coeff", coeff}});
    }
    brackets.push_back(json{{"left", g.basis(key.first).name},
                            {"right", g.basis(key.second).name},
                            {"result", std::move(result)}});
  }
  doc["brackets"] = std::move(brackets);

  if (g.family()) {
    const FamilyTag& tag = *g.family();
    doc["family"] =
        json{{"kind", kind_string(tag.kind)}, {"ns", tag.ns}, {"ms", tag.ms}};
  }
  return doc.dump(2) + "\n";
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    buf << in.rdbuf();
  }
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace lsc
