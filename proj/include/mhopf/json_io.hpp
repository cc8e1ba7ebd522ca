#pragma once

#include <json.hpp>
#include <vector>

#include "mhopf/combination.hpp"
#include "mhopf/decoration.hpp"
#include "mhopf/verify.hpp"

namespace mhopf {

using Json = nlohmann::json;

// [[degree, coefficient], ...]; coefficients beyond 64 bits are strings.
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

// [{"coeff": ..., "forest": "<text>"}, ...] in canonical order.
Json to_json(const LinComb& a);
LinComb lincomb_from_json(const Json& j, const DecorationRegistry& registry);

// [{"coeff": ..., "left": "<text>", "right": "<text>"}, ...]
Json to_json(const TensorLinComb& t);
TensorLinComb tensor_from_json(const Json& j, const DecorationRegistry& registry);

// {"x": [...], "omega": [...]}
Json to_json(const DecorationRegistry& registry);
DecorationRegistry registry_from_json(const Json& j);

// {"check": name, "instances": n, "failures": [{"input", "lhs", "rhs"}]}
Json to_json(const CheckReport& report);
Json to_json(const std::vector<CheckReport>& reports);

}  // namespace mhopf
