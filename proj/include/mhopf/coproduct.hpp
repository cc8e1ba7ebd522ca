#pragma once

#include <functional>

#include "mhopf/combination.hpp"
#include "mhopf/decoration.hpp"

namespace mhopf {

// A coproduct on basis forests, parameterized by the value substituted for
// lambda (Poly::lambda() keeps it symbolic).
using CoproductFn = std::function<TensorLinComb(const Forest&, const Poly&)>;

// Sum over covers V(F) = I u J with I n J inside the X-vertices of
// lambda^{|I n J|} F_I (x) F_J.
TensorLinComb coproduct(const Forest& f, const Poly& lambda = Poly::lambda());
TensorLinComb coproduct(const LinComb& a, const Poly& lambda = Poly::lambda());

// Defined by recursion on depth and breadth: the X-dot rule, the cocycle rule
// for grafted trees, and multiplicativity over concatenation.
TensorLinComb coproduct_recursive(const Forest& f, const Poly& lambda = Poly::lambda());
TensorLinComb coproduct_recursive(const LinComb& a, const Poly& lambda = Poly::lambda());

// At lambda = 0: Delta(F) - F (x) 1 - 1 (x) F for F != 1, and 0 on 1.
TensorLinComb reduced_coproduct(const Forest& f);
TensorLinComb reduced_coproduct(const LinComb& a);

// Extends a basis-level coproduct linearly.
TensorLinComb apply_coproduct(const CoproductFn& delta, const LinComb& a, const Poly& lambda);
// (Delta (x) id) and (id (x) Delta) on H (x) H.
Tensor3 coproduct_left(const CoproductFn& delta, const TensorLinComb& t, const Poly& lambda);
Tensor3 coproduct_right(const CoproductFn& delta, const TensorLinComb& t, const Poly& lambda);
// (Delta (x) id) Delta(F), the Sweedler triple F_1 (x) F_2 (x) F_3.
Tensor3 iterated_coproduct(const Forest& f, const Poly& lambda = Poly::lambda());

// (B+_omega (x) id + id (x) B+_omega)
TensorLinComb graft_tensor(const Decoration& omega, const TensorLinComb& t);

inline const CoproductFn& default_coproduct() {
  static const CoproductFn fn = [](const Forest& f, const Poly& lambda) { return coproduct(f, lambda); };
  return fn;
}

}  // namespace mhopf
