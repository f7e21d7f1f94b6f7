#ifndef BJORTHO_NORM_JSON_HPP
#define BJORTHO_NORM_JSON_HPP

#include <fstream>
#include <string>

#include "json.hpp"

#include "error.hpp"
#include "norm.hpp"

namespace bjortho {

// Norm description documents:
//   {"type": "lp", "p": <number or "inf">, "dim": n}
//   {"type": "polyhedral", "vertices": [[x, y], ...]}

inline Norm norm_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("type") || !doc["type"].is_string())
    throw InputError("norm spec: expected an object with a string field \"type\"");
  const std::string type = doc["type"].get<std::string>();

  if (type == "lp") {
    if (!doc.contains("p")) throw InputError("norm spec: lp norm needs field \"p\"");
    const auto& p_field = doc["p"];
    double p = 0.0;
    if (p_field.is_string()) {
      const auto s = p_field.get<std::string>();
      if (s != "inf" && s != "infinity")
        throw InputError("norm spec: \"p\" must be a number or \"inf\", got \"" + s + "\"");
      p = kInf;
    } else if (p_field.is_number()) {
      p = p_field.get<double>();
    } else {
      throw InputError("norm spec: \"p\" must be a number or \"inf\"");
    }
    std::size_t dim = 2;
    if (doc.contains("dim")) {
      if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1)
        throw InputError("norm spec: \"dim\" must be a positive integer");
      dim = doc["dim"].get<std::size_t>();
    }
    return Norm::lp(p, dim);
  }

  if (type == "polyhedral") {
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
      throw InputError("norm spec: polyhedral norm needs an array field \"vertices\"");
    std::vector<std::array<double, 2>> vertices;
    for (const auto& v : doc["vertices"]) {
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw InputError("norm spec: each vertex must be a pair [x, y]");
      vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    if (doc.contains("dim") && doc["dim"] != 2)
      throw InputError("norm spec: polyhedral norms are only supported in dimension 2");
    return Norm::polygon(std::move(vertices));
  }

  throw InputError("norm spec: unknown type \"" + type + "\" (expected lp or polyhedral)");
}

inline Norm norm_from_string(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("norm spec: invalid JSON: ") + e.what());
  }
  return norm_from_json(doc);
}

inline Norm norm_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open norm spec file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return norm_from_string(text);
}

} // namespace bjortho

#endif // BJORTHO_NORM_JSON_HPP
