#include "mhopf/dual.hpp"

#include "mhopf/error.hpp"

namespace mhopf {

LinComb star(const Forest& f, const Forest& g, const DecorationRegistry& registry) {
  const ForestMatrix a = encode(f), b = encode(g);
  LinComb out;
  for (const auto& s : shuffles(a.rows(), b.rows()))
    for (const auto& c : fm_sigma(a, b, s, registry)) out.add(decode(c, registry), 1);
  return out;
}

LinComb star(const LinComb& a, const LinComb& b, const DecorationRegistry& registry) {
  LinComb out;
  for (const auto& [f, c] : a)
    for (const auto& [g, d] : b) out += (c * d) * star(f, g, registry);
  return out;
}

LinComb star_lambda(const Forest& f, const Forest& g, const DecorationRegistry& registry, const Poly& lambda) {
  const ForestMatrix a = encode(f), b = encode(g);
  const std::size_t total = a.rows() + b.rows();
  LinComb out;
  for (const auto& s : quasi_shuffles(a.rows(), b.rows())) {
    const Poly coeff = lambda.pow(static_cast<unsigned>(total - s.m()));
    if (coeff.is_zero()) continue;
    for (const auto& c : fm_sigma_quasi(a, b, s, registry)) out.add(decode(c, registry), coeff);
  }
  return out;
}

LinComb star_lambda(const LinComb& a, const LinComb& b, const DecorationRegistry& registry, const Poly& lambda) {
  LinComb out;
  for (const auto& [f, c] : a)
    for (const auto& [g, d] : b) out += (c * d) * star_lambda(f, g, registry, lambda);
  return out;
}

Poly pairing(const LinComb& a, const LinComb& b) {
  Poly out;
  for (const auto& [f, c] : a) out += c * b.coefficient(f);
  return out;
}

Poly pairing2(const TensorLinComb& t, const TensorLinComb& u) {
  Poly out;
  for (const auto& [p, c] : t) out += c * u.coefficient(p);
  return out;
}

Integer n_count(const Forest& f, const Forest& g, const Forest& h) {
  const std::size_t n = h.weight();
  if (n > max_subset_weight) throw DomainError("n_count supports at most 64 vertices");
  if (f.weight() + g.weight() != n) return 0;
  if (n >= 63) throw DomainError("n_count subset enumeration is limited to 62 vertices");
  const VertexSet all = VertexSet::all(n);
  Integer count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const VertexSet i(bits);
    if (i.size() != f.weight()) continue;
    if (induced_subforest(h, i) == f && induced_subforest(h, all.minus(i)) == g) ++count;
  }
  return count;
}

}  // namespace mhopf
