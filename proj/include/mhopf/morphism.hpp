#pragma once

#include <functional>
#include <map>
#include <string>

#include "mhopf/combination.hpp"
#include "mhopf/error.hpp"

namespace mhopf {

// F -> lambda0^{d_X(F)} F, extended linearly.
LinComb phi_lambda(const LinComb& a, const Poly& lambda0);
TensorLinComb phi_lambda(const TensorLinComb& t, const Poly& lambda0);

// Target of the universal evaluation: an associative unital product, a value
// per X decoration and an operator per Omega decoration. Keys are names.
template <typename T>
struct Interpretation {
  T unit;
  std::function<T(const T&, const T&)> product;
  std::map<std::string, T, std::less<>> leaf_map;
  std::map<std::string, std::function<T(const T&)>, std::less<>> operator_map;
};

namespace detail {

template <typename T>
T evaluate_from(const Forest& f, std::size_t root, const Interpretation<T>& in) {
  const Vertex& v = f.vertex(root);
  const auto name = v.decoration.name();
  if (v.decoration.is_x()) {
    auto it = in.leaf_map.find(name);
    if (it == in.leaf_map.end()) throw DomainError("interpretation has no value for '" + std::string(name) + "'");
    return it->second;
  }
  auto op = in.operator_map.find(name);
  if (op == in.operator_map.end()) throw DomainError("interpretation has no operator for '" + std::string(name) + "'");
  T inner = in.unit;
  const std::size_t end = root + v.subtree_size;
  for (std::size_t c = root + 1; c < end; c += f.vertex(c).subtree_size)
    inner = in.product(inner, evaluate_from(f, c, in));
  return op->second(inner);
}

}  // namespace detail

// The unique operated-algebra morphism out of the forest algebra: 1 -> unit,
// x -> leaf_map(x), B+_w(G) -> operator_map(w)(evaluate(G)), products to
// products. An Omega leaf is operator_map(w)(unit).
template <typename T>
T evaluate(const Forest& f, const Interpretation<T>& in) {
  T out = in.unit;
  for (std::size_t r = 0; r < f.weight(); r += f.vertex(r).subtree_size)
    out = in.product(out, detail::evaluate_from(f, r, in));
  return out;
}

// The inclusion of forests into LinComb, as an interpretation.
Interpretation<LinComb> identity_interpretation(const DecorationRegistry& registry);

}  // namespace mhopf
