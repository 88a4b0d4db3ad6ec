#include <fmt/format.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lieweyl/lie_algebra.hpp"

namespace lieweyl {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed, std::string_view where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw AlgebraError(fmt::format("unknown key '{}' in {}", key, where));
  }
}

int index_field(const json& rec, const char* key, int dim, std::size_t pos) {
  if (!rec.contains(key)) throw AlgebraError(fmt::format("bracket record {} lacks '{}'", pos + 1, key));
  const auto& v = rec.at(key);
  if (!v.is_number_integer()) throw AlgebraError(fmt::format("bracket record {}: '{}' must be an integer", pos + 1, key));
  auto i = v.get<long long>();
  if (i < 1 || i > dim)
    throw AlgebraError(fmt::format("bracket record {}: index {}={} outside 1..{}", pos + 1, key, i, dim));
  return static_cast<int>(i) - 1;
}

}  // namespace

LieAlgebra load_algebra(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw AlgebraError(std::string("malformed algebra document: ") + e.what());
  }
  if (!doc.is_object()) throw AlgebraError("algebra document must be an object");
  reject_unknown_keys(doc, {"name", "dim", "bracket"}, "algebra document");

  std::string name = "custom";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw AlgebraError("'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) throw AlgebraError("'dim' must be an integer");
  auto dim = doc["dim"].get<long long>();
  if (dim < 1 || dim > kMaxDim) throw AlgebraError(fmt::format("dimension {} outside 1..{}", dim, kMaxDim));

  std::vector<BracketEntry> entries;
  if (doc.contains("bracket")) {
    const auto& list = doc["bracket"];
    if (!list.is_array()) throw AlgebraError("'bracket' must be a list");
    for (std::size_t pos = 0; pos < list.size(); ++pos) {
      const auto& rec = list[pos];
      if (!rec.is_object()) throw AlgebraError(fmt::format("bracket record {} must be an object", pos + 1));
      reject_unknown_keys(rec, {"i", "j", "k", "c"}, fmt::format("bracket record {}", pos + 1));
      BracketEntry e;
      e.i = index_field(rec, "i", static_cast<int>(dim), pos);
      e.j = index_field(rec, "j", static_cast<int>(dim), pos);
      e.k = index_field(rec, "k", static_cast<int>(dim), pos);
      if (!rec.contains("c") || !rec["c"].is_string())
        throw AlgebraError(fmt::format("bracket record {}: 'c' must be a rational string", pos + 1));
      try {
        e.c = parse_rational(rec["c"].get<std::string>());
      } catch (const std::invalid_argument& err) {
        throw AlgebraError(fmt::format("bracket record {}: {}", pos + 1, err.what()));
      }
      entries.push_back(e);
    }
  }
  return LieAlgebra::from_entries(name, static_cast<int>(dim), entries);
}

LieAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("cannot open algebra file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_algebra(ss.str());
}

std::string serialize_algebra(const LieAlgebra& L) {
  json doc;
  doc["name"] = L.name();
  doc["dim"] = L.dim();
  doc["bracket"] = json::array();
  for (const auto& e : L.entries())
    doc["bracket"].push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"k", e.k + 1}, {"c", to_string(e.c)}});
  return doc.dump(2) + "\n";
}

}  // namespace lieweyl
