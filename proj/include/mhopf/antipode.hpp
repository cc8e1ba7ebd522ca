#pragma once

#include <functional>
#include <map>

#include "mhopf/combination.hpp"

namespace mhopf {

using AntipodeFn = std::function<LinComb(const Forest&)>;

// The antipode exists only for lambda = 0; a nonzero `lambda` throws
// DomainError("antipode requires λ=0").

// Sum over ordered set partitions (I_1..I_k) of V(F) of (-1)^k F_{I_1}...F_{I_k}.
LinComb antipode_takeuchi(const Forest& f, const Poly& lambda = Poly{});
LinComb antipode_takeuchi(const LinComb& a, const Poly& lambda = Poly{});

// S(1) = 1, S(F) = -F - sum S(F')F'' over the reduced coproduct.
LinComb antipode_recursive(const Forest& f, const Poly& lambda = Poly{});
LinComb antipode_recursive(const LinComb& a, const Poly& lambda = Poly{});

// Memoized evaluator: the recursion on trees, extended anti-multiplicatively
// to forests. Not thread-safe; use one per thread.
class AntipodeCache {
 public:
  LinComb operator()(const Forest& f);
  LinComb apply(const LinComb& a);

 private:
  const LinComb& tree(const Forest& t);
  std::map<Forest, LinComb> trees_;
};

}  // namespace mhopf
