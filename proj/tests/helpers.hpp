#pragma once

#include <string>

#include "mhopf/combination.hpp"
#include "mhopf/decoration.hpp"
#include "mhopf/forest_text.hpp"

namespace testing {

inline const mhopf::DecorationRegistry& reg() {
  static const mhopf::DecorationRegistry r({"x", "y", "z"}, {"a", "b", "c", "d"});
  return r;
}

// X={x}, Omega={a,b}: the suite registry.
inline const mhopf::DecorationRegistry& small() {
  static const mhopf::DecorationRegistry r({"x"}, {"a", "b"});
  return r;
}

inline mhopf::Forest F(const std::string& s, const mhopf::DecorationRegistry& r = reg()) {
  return mhopf::parse_forest(s, r);
}

inline mhopf::LinComb L(const std::string& s) { return mhopf::LinComb(F(s)); }

inline mhopf::ForestPair P(const std::string& l, const std::string& r) { return {F(l), F(r)}; }

// Independent count of forests of weight n: trees t_1 = |X|+|Omega|,
// t_k = |Omega| f_{k-1}; f_n = sum_k t_k f_{n-k}.
inline std::vector<unsigned long long> forest_counts(std::size_t max, unsigned long long nx, unsigned long long nomega) {
  std::vector<unsigned long long> f(max + 1, 0), t(max + 1, 0);
  f[0] = 1;
  for (std::size_t n = 1; n <= max; ++n) {
    t[n] = n == 1 ? nx + nomega : nomega * f[n - 1];
    for (std::size_t k = 1; k <= n; ++k) f[n] += t[k] * f[n - k];
  }
  return f;
}

}  // namespace testing
