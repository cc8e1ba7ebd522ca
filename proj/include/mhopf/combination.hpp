#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "mhopf/forest.hpp"
#include "mhopf/poly.hpp"

namespace mhopf {

// A finite formal sum of basis keys with Z[L] coefficients. Zero
// coefficients are never stored; iteration follows the key order.
template <typename Key, typename Compare = std::less<Key>>
class Combination {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Poly, Compare>;
  using const_iterator = typename map_type::const_iterator;

  Combination() = default;
  explicit Combination(const Key& k, Poly c = 1) { add(k, std::move(c)); }

  void add(const Key& k, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Poly{} : it->second;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const noexcept { return terms_; }

  Combination& operator+=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  Combination& operator*=(const Poly& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  Combination operator-() const {
    Combination r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(const Poly& s, Combination a) { return a *= s; }
  friend bool operator==(const Combination&, const Combination&) = default;

  // Applies `f` to every coefficient and drops terms that become zero.
  template <typename F>
  Combination map_coefficients(F&& f) const {
    Combination r;
    for (const auto& [k, c] : terms_) r.add(k, f(c));
    return r;
  }

 private:
  map_type terms_;
};

using ForestPair = std::pair<Forest, Forest>;
using ForestTriple = std::array<Forest, 3>;

// Tensor terms are ordered by the right factor first, so F(x)1 precedes 1(x)F.
struct RightFirst {
  bool operator()(const ForestPair& a, const ForestPair& b) const {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  }
};

// Elements of the forest algebra H.
using LinComb = Combination<Forest>;
// Elements of H (x) H.
using TensorLinComb = Combination<ForestPair, RightFirst>;
// Elements of H (x) H (x) H.
using Tensor3 = Combination<ForestTriple>;

inline LinComb unit() { return LinComb(Forest{}); }

// Concatenation extended bilinearly.
LinComb product(const LinComb& a, const LinComb& b);
// (a (x) b)(c (x) d) = ac (x) bd
TensorLinComb product(const TensorLinComb& a, const TensorLinComb& b);
inline LinComb operator*(const LinComb& a, const LinComb& b) { return product(a, b); }
inline TensorLinComb operator*(const TensorLinComb& a, const TensorLinComb& b) { return product(a, b); }

TensorLinComb tensor(const LinComb& a, const LinComb& b);
TensorLinComb flip(const TensorLinComb& t);
// m: H (x) H -> H
LinComb multiply(const TensorLinComb& t);

// Coefficient of the empty forest.
Poly counit(const LinComb& a);
LinComb apply_counit_left(const TensorLinComb& t);   // (eps (x) id)
LinComb apply_counit_right(const TensorLinComb& t);  // (id (x) eps)

// Applies a linear map given on basis forests.
template <typename F>
LinComb apply_linear(const LinComb& a, F&& f) {
  LinComb out;
  for (const auto& [forest, c] : a) out += c * f(forest);
  return out;
}

// (f (x) g) on H (x) H, with f and g given on basis forests.
template <typename F, typename G>
TensorLinComb apply_tensor(const TensorLinComb& t, F&& f, G&& g) {
  TensorLinComb out;
  for (const auto& [pair, c] : t) {
    const LinComb l = f(pair.first);
    const LinComb r = g(pair.second);
    for (const auto& [lf, lc] : l)
      for (const auto& [rf, rc] : r) out.add(ForestPair{lf, rf}, c * lc * rc);
  }
  return out;
}

// Text rendering: "a[x] + 2 x a - L x(x)x"; tensors use `sep` between factors.
std::string to_string(const LinComb& a);
std::string to_string(const TensorLinComb& t, const std::string& sep = "⊗");
std::string to_string(const Tensor3& t, const std::string& sep = "⊗");

}  // namespace mhopf
