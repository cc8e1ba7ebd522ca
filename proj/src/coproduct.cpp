#include "mhopf/coproduct.hpp"

#include <vector>

#include "mhopf/error.hpp"

namespace mhopf {

TensorLinComb coproduct(const Forest& f, const Poly& lambda) {
  const std::size_t n = f.weight();
  if (n > max_subset_weight) throw DomainError("coproduct supports at most 64 vertices");
  const VertexSet xs = x_vertices(f);

  std::vector<Poly> lambda_powers{Poly(1)};
  for (std::size_t k = 1; k <= xs.size(); ++k) lambda_powers.push_back(lambda_powers.back() * lambda);

  // Each vertex goes left (0) or right (1); X-vertices may also go to both (2).
  std::vector<unsigned> choice(n, 0);
  TensorLinComb out;
  for (;;) {
    VertexSet left, right;
    std::size_t overlap = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (choice[i] != 1) left.insert(i);
      if (choice[i] != 0) right.insert(i);
      if (choice[i] == 2) ++overlap;
    }
    if (!lambda_powers[overlap].is_zero())
      out.add(ForestPair{induced_subforest(f, left), induced_subforest(f, right)}, lambda_powers[overlap]);

    std::size_t i = 0;
    for (; i < n; ++i) {
      const unsigned radix = xs.contains(i) ? 3 : 2;
      if (++choice[i] < radix) break;
      choice[i] = 0;
    }
    if (i == n) break;
  }
  return out;
}

TensorLinComb apply_coproduct(const CoproductFn& delta, const LinComb& a, const Poly& lambda) {
  TensorLinComb out;
  for (const auto& [f, c] : a) out += c * delta(f, lambda);
  return out;
}

TensorLinComb coproduct(const LinComb& a, const Poly& lambda) {
  return apply_coproduct(default_coproduct(), a, lambda);
}

TensorLinComb graft_tensor(const Decoration& omega, const TensorLinComb& t) {
  TensorLinComb out;
  for (const auto& [p, c] : t) {
    out.add(ForestPair{graft(omega, p.first), p.second}, c);
    out.add(ForestPair{p.first, graft(omega, p.second)}, c);
  }
  return out;
}

TensorLinComb coproduct_recursive(const Forest& f, const Poly& lambda) {
  if (f.empty()) return TensorLinComb(ForestPair{Forest{}, Forest{}});
  if (f.breadth() >= 2) {
    TensorLinComb out(ForestPair{Forest{}, Forest{}});
    for (const auto& t : f.trees()) out = out * coproduct_recursive(t.as_forest(), lambda);
    return out;
  }
  const Tree t = f.trees().front();
  const Decoration& root = t.root_decoration();
  if (root.is_x()) {
    TensorLinComb out;
    out.add(ForestPair{f, Forest{}}, 1);
    out.add(ForestPair{Forest{}, f}, 1);
    out.add(ForestPair{f, f}, lambda);
    return out;
  }
  return graft_tensor(root, coproduct_recursive(t.children(), lambda));
}

TensorLinComb coproduct_recursive(const LinComb& a, const Poly& lambda) {
  TensorLinComb out;
  for (const auto& [f, c] : a) out += c * coproduct_recursive(f, lambda);
  return out;
}

TensorLinComb reduced_coproduct(const Forest& f) {
  if (f.empty()) return {};
  TensorLinComb out = coproduct(f, Poly{});
  out.add(ForestPair{f, Forest{}}, -1);
  out.add(ForestPair{Forest{}, f}, -1);
  return out;
}

TensorLinComb reduced_coproduct(const LinComb& a) {
  TensorLinComb out;
  for (const auto& [f, c] : a) out += c * reduced_coproduct(f);
  return out;
}

Tensor3 coproduct_left(const CoproductFn& delta, const TensorLinComb& t, const Poly& lambda) {
  Tensor3 out;
  for (const auto& [p, c] : t)
    for (const auto& [q, d] : delta(p.first, lambda)) out.add(ForestTriple{q.first, q.second, p.second}, c * d);
  return out;
}

Tensor3 coproduct_right(const CoproductFn& delta, const TensorLinComb& t, const Poly& lambda) {
  Tensor3 out;
  for (const auto& [p, c] : t)
    for (const auto& [q, d] : delta(p.second, lambda)) out.add(ForestTriple{p.first, q.first, q.second}, c * d);
  return out;
}

Tensor3 iterated_coproduct(const Forest& f, const Poly& lambda) {
  return coproduct_left(default_coproduct(), coproduct(f, lambda), lambda);
}

}  // namespace mhopf
