#include "mhopf/json_io.hpp"

#include <limits>

#include "mhopf/error.hpp"
#include "mhopf/forest_text.hpp"

namespace mhopf {

namespace {

Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      throw DomainError("invalid integer '" + j.get<std::string>() + "'");
    }
  }
  throw DomainError("expected an integer in JSON coefficient");
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("JSON term is missing \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& [d, c] : p.coefficients()) out.push_back(Json::array({d, integer_json(c)}));
  return out;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("coefficient must be a list of [degree, value] pairs");
  Poly out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned())
      throw DomainError("coefficient entries must be [degree, value]");
    out += Poly::monomial(integer_from_json(pair[1]), pair[0].get<unsigned>());
  }
  return out;
}

Json to_json(const LinComb& a) {
  Json out = Json::array();
  for (const auto& [f, c] : a) out.push_back({{"coeff", to_json(c)}, {"forest", f.text()}});
  return out;
}

LinComb lincomb_from_json(const Json& j, const DecorationRegistry& registry) {
  if (!j.is_array()) throw DomainError("linear combination must be a JSON list");
  LinComb out;
  for (const auto& t : j)
    out.add(parse_forest(member(t, "forest").get<std::string>(), registry), poly_from_json(member(t, "coeff")));
  return out;
}

Json to_json(const TensorLinComb& t) {
  Json out = Json::array();
  for (const auto& [p, c] : t)
    out.push_back({{"coeff", to_json(c)}, {"left", p.first.text()}, {"right", p.second.text()}});
  return out;
}

TensorLinComb tensor_from_json(const Json& j, const DecorationRegistry& registry) {
  if (!j.is_array()) throw DomainError("tensor combination must be a JSON list");
  TensorLinComb out;
  for (const auto& t : j)
    out.add(ForestPair{parse_forest(member(t, "left").get<std::string>(), registry),
                       parse_forest(member(t, "right").get<std::string>(), registry)},
            poly_from_json(member(t, "coeff")));
  return out;
}

Json to_json(const DecorationRegistry& registry) {
  return {{"x", registry.x_names()}, {"omega", registry.omega_names()}};
}

DecorationRegistry registry_from_json(const Json& j) {
  try {
    auto names = [&](const char* key) {
      return j.contains(key) ? j.at(key).get<std::vector<std::string>>() : std::vector<std::string>{};
    };
    return DecorationRegistry(names("x"), names("omega"));
  } catch (const Json::exception& e) {
    throw RegistryError(std::string("invalid registry JSON: ") + e.what());
  }
}

Json to_json(const CheckReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) failures.push_back({{"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  return {{"check", report.check}, {"instances", report.instances}, {"failures", failures}};
}

Json to_json(const std::vector<CheckReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

}  // namespace mhopf
