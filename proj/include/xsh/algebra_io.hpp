#pragma once

// JSON form of an algebra:
//   {"ring": "Q" | "Z" | "Fp:5", "dim": d, "unit": [..],
//    "constants": [[i, j, k, value], ...], "name": optional}
// Indices are 0-based, omitted constants are zero, values are integers or
// "a/b" strings.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "xsh/algebra.hpp"
#include "xsh/error.hpp"

namespace xsh {

namespace detail {

inline mpq_class json_scalar(const nlohmann::json& v) {
  try {
    if (v.is_number_integer()) return mpq_class(mpz_class(v.dump()));
    if (v.is_string()) {
      mpq_class q(v.get<std::string>());
      q.canonicalize();
      return q;
    }
  } catch (const std::invalid_argument&) {
  }
  throw parse_error("algebra scalar must be an integer or an \"a/b\" string, got " + v.dump());
}

inline std::string scalar_text(const mpq_class& q) { return q.get_str(); }

}  // namespace detail

inline Algebra algebra_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw parse_error("algebra document must be a JSON object");
  for (const char* key : {"ring", "dim", "constants"})
    if (!doc.contains(key)) throw parse_error(std::string("algebra document lacks \"") + key + "\"");
  if (!doc["ring"].is_string()) throw parse_error("\"ring\" must be a string");
  const Ring ring = parse_ring(doc["ring"].get<std::string>());
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1)
    throw parse_error("\"dim\" must be a positive integer");
  const int dim = doc["dim"].get<int>();
  if (!doc["constants"].is_array()) throw parse_error("\"constants\" must be an array");
  std::vector<std::tuple<int, int, int, mpq_class>> c;
  for (const auto& e : doc["constants"]) {
    if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        !e[2].is_number_integer())
      throw parse_error("each constant must be [i, j, k, value], got " + e.dump());
    c.emplace_back(e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), detail::json_scalar(e[3]));
  }
  if (!doc.contains("unit")) throw validation_error("algebra has no unit: \"unit\" is missing");
  if (!doc["unit"].is_array() || static_cast<int>(doc["unit"].size()) != dim)
    throw parse_error("\"unit\" must be an array of length dim");
  std::vector<mpq_class> unit;
  for (const auto& v : doc["unit"]) unit.push_back(detail::json_scalar(v));
  std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "";
  return Algebra(ring, dim, c, std::move(unit), std::move(name));
}

inline Algebra parse_algebra(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("algebra JSON: ") + e.what());
  }
  return algebra_from_json(doc);
}

inline Algebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open algebra file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

inline nlohmann::json algebra_to_json(const Algebra& a) {
  nlohmann::json doc;
  if (!a.name().empty()) doc["name"] = a.name();
  doc["ring"] = to_string(a.ring());
  doc["dim"] = a.dim();
  nlohmann::json unit = nlohmann::json::array();
  auto scalar = [](const mpq_class& q) -> nlohmann::json {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
  };
  for (const auto& u : a.unit()) unit.push_back(scalar(u));
  doc["unit"] = unit;
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& [i, j, k, v] : a.constants()) cs.push_back({i, j, k, scalar(v)});
  doc["constants"] = cs;
  return doc;
}

}  // namespace xsh
