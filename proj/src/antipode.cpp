#include "mhopf/antipode.hpp"

#include <unordered_map>

#include "mhopf/coproduct.hpp"
#include "mhopf/error.hpp"

namespace mhopf {

namespace {

void require_zero(const Poly& lambda) {
  if (!lambda.is_zero()) throw DomainError("antipode requires λ=0");
}

class Takeuchi {
 public:
  explicit Takeuchi(const Forest& f) : f_(f) {
    if (f.weight() > 20) throw DomainError("Takeuchi antipode supports at most 20 vertices");
  }

  LinComb run() {
    walk(VertexSet::all(f_.weight()).bits(), Forest{}, 1);
    return std::move(out_);
  }

 private:
  const Forest& sub(std::uint64_t mask) {
    auto it = cache_.find(mask);
    if (it == cache_.end()) it = cache_.emplace(mask, induced_subforest(f_, VertexSet(mask))).first;
    return it->second;
  }

  void walk(std::uint64_t remaining, const Forest& prefix, int sign) {
    if (remaining == 0) {
      out_.add(prefix, sign);
      return;
    }
    for (std::uint64_t s = remaining; s; s = (s - 1) & remaining) walk(remaining & ~s, prefix * sub(s), -sign);
  }

  const Forest& f_;
  std::unordered_map<std::uint64_t, Forest> cache_;
  LinComb out_;
};

LinComb recursive(const Forest& f, std::map<Forest, LinComb>& memo) {
  if (f.empty()) return unit();
  if (auto it = memo.find(f); it != memo.end()) return it->second;
  LinComb s = -LinComb(f);
  for (const auto& [p, c] : reduced_coproduct(f)) s -= c * (recursive(p.first, memo) * LinComb(p.second));
  memo.emplace(f, s);
  return s;
}

}  // namespace

LinComb antipode_takeuchi(const Forest& f, const Poly& lambda) {
  require_zero(lambda);
  if (f.empty()) return unit();
  return Takeuchi(f).run();
}

LinComb antipode_takeuchi(const LinComb& a, const Poly& lambda) {
  require_zero(lambda);
  return apply_linear(a, [](const Forest& f) { return antipode_takeuchi(f); });
}

LinComb antipode_recursive(const Forest& f, const Poly& lambda) {
  require_zero(lambda);
  std::map<Forest, LinComb> memo;
  return recursive(f, memo);
}

LinComb antipode_recursive(const LinComb& a, const Poly& lambda) {
  require_zero(lambda);
  std::map<Forest, LinComb> memo;
  return apply_linear(a, [&](const Forest& f) { return recursive(f, memo); });
}

const LinComb& AntipodeCache::tree(const Forest& t) {
  if (auto it = trees_.find(t); it != trees_.end()) return it->second;
  LinComb s = -LinComb(t);
  for (const auto& [p, c] : reduced_coproduct(t)) s -= c * ((*this)(p.first) * LinComb(p.second));
  return trees_.emplace(t, std::move(s)).first->second;
}

LinComb AntipodeCache::operator()(const Forest& f) {
  LinComb out = unit();
  // S(T_1 ... T_k) = S(T_k) ... S(T_1)
  for (const auto& t : f.trees()) out = tree(t.as_forest()) * out;
  return out;
}

LinComb AntipodeCache::apply(const LinComb& a) {
  return apply_linear(a, [this](const Forest& f) { return (*this)(f); });
}

}  // namespace mhopf
