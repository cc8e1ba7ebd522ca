#include "mhopf/morphism.hpp"

namespace mhopf {

LinComb phi_lambda(const LinComb& a, const Poly& lambda0) {
  LinComb out;
  for (const auto& [f, c] : a) out.add(f, c * lambda0.pow(static_cast<unsigned>(x_leaf_count(f))));
  return out;
}

TensorLinComb phi_lambda(const TensorLinComb& t, const Poly& lambda0) {
  TensorLinComb out;
  for (const auto& [p, c] : t)
    out.add(p, c * lambda0.pow(static_cast<unsigned>(x_leaf_count(p.first) + x_leaf_count(p.second))));
  return out;
}

Interpretation<LinComb> identity_interpretation(const DecorationRegistry& registry) {
  Interpretation<LinComb> in;
  in.unit = unit();
  in.product = [](const LinComb& a, const LinComb& b) { return a * b; };
  for (const auto& d : registry.x_decorations()) in.leaf_map.emplace(std::string(d.name()), LinComb(make_leaf(d)));
  for (const auto& d : registry.omega_decorations())
    in.operator_map.emplace(std::string(d.name()), [d](const LinComb& a) {
      return apply_linear(a, [&](const Forest& f) { return LinComb(graft(d, f).as_forest()); });
    });
  return in;
}

}  // namespace mhopf
