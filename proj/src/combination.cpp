#include "mhopf/combination.hpp"

namespace mhopf {

namespace {

// Splits a coefficient into (negative?, prefix) for display in a sum.
std::pair<bool, std::string> coefficient_prefix(const Poly& c) {
  const auto& cs = c.coefficients();
  if (cs.size() != 1) return {false, "(" + c.to_string() + ") "};
  const auto& [d, v] = *cs.begin();
  const bool negative = v < 0;
  const Integer mag = negative ? Integer(-v) : v;
  std::string s;
  if (mag != 1 || d == 0) s += mag.str();
  if (d >= 1) s += 'L';
  if (d >= 2) s += '^' + std::to_string(d);
  if (d == 0 && mag == 1) s.clear();
  if (!s.empty()) s += ' ';
  return {negative, s};
}

template <typename C, typename KeyText>
std::string render(const C& comb, KeyText&& key_text) {
  if (comb.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : comb) {
    auto [negative, prefix] = coefficient_prefix(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    out += prefix;
    out += key_text(k);
  }
  return out;
}

}  // namespace

LinComb product(const LinComb& a, const LinComb& b) {
  LinComb out;
  for (const auto& [fa, ca] : a)
    for (const auto& [fb, cb] : b) out.add(concat(fa, fb), ca * cb);
  return out;
}

TensorLinComb product(const TensorLinComb& a, const TensorLinComb& b) {
  TensorLinComb out;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b)
      out.add(ForestPair{concat(pa.first, pb.first), concat(pa.second, pb.second)}, ca * cb);
  return out;
}

TensorLinComb tensor(const LinComb& a, const LinComb& b) {
  TensorLinComb out;
  for (const auto& [fa, ca] : a)
    for (const auto& [fb, cb] : b) out.add(ForestPair{fa, fb}, ca * cb);
  return out;
}

TensorLinComb flip(const TensorLinComb& t) {
  TensorLinComb out;
  for (const auto& [p, c] : t) out.add(ForestPair{p.second, p.first}, c);
  return out;
}

LinComb multiply(const TensorLinComb& t) {
  LinComb out;
  for (const auto& [p, c] : t) out.add(concat(p.first, p.second), c);
  return out;
}

Poly counit(const LinComb& a) { return a.coefficient(Forest{}); }

LinComb apply_counit_left(const TensorLinComb& t) {
  LinComb out;
  for (const auto& [p, c] : t)
    if (p.first.empty()) out.add(p.second, c);
  return out;
}

LinComb apply_counit_right(const TensorLinComb& t) {
  LinComb out;
  for (const auto& [p, c] : t)
    if (p.second.empty()) out.add(p.first, c);
  return out;
}

std::string to_string(const LinComb& a) {
  return render(a, [](const Forest& f) { return f.text(); });
}

std::string to_string(const TensorLinComb& t, const std::string& sep) {
  return render(t, [&](const ForestPair& p) { return p.first.text() + sep + p.second.text(); });
}

std::string to_string(const Tensor3& t, const std::string& sep) {
  return render(t, [&](const ForestTriple& p) { return p[0].text() + sep + p[1].text() + sep + p[2].text(); });
}

}  // namespace mhopf
