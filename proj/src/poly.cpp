#include "mhopf/poly.hpp"

namespace mhopf {

Poly::Poly(const Integer& c) {
  if (c != 0) coeffs_.emplace(0U, c);
}

Poly Poly::monomial(const Integer& c, unsigned degree) {
  Poly p;
  if (c != 0) p.coeffs_.emplace(degree, c);
  return p;
}

Integer Poly::coefficient(unsigned degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void Poly::add(unsigned degree, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [d, c] : o.coeffs_) add(d, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [d, c] : o.coeffs_) add(d, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [d, c] : p.coeffs_) c = -c;
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly p;
  for (const auto& [da, ca] : a.coeffs_)
    for (const auto& [db, cb] : b.coeffs_) p.add(da + db, ca * cb);
  return p;
}

Integer Poly::evaluate(const Integer& at) const {
  Integer result = 0;
  unsigned current = 0;
  Integer power = 1;
  for (const auto& [d, c] : coeffs_) {
    for (; current < d; ++current) power *= at;
    result += c * power;
  }
  return result;
}

Poly Poly::substitute(const Poly& value) const {
  Poly result;
  unsigned current = 0;
  Poly power = 1;
  for (const auto& [d, c] : coeffs_) {
    for (; current < d; ++current) power *= value;
    result += Poly(c) * power;
  }
  return result;
}

Poly Poly::pow(unsigned e) const {
  Poly result = 1;
  Poly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : coeffs_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (c < 0)
      out += '-';
    else if (!first)
      out += '+';
    first = false;
    if (d == 0 || mag != 1) out += mag.str();
    if (d >= 1) out += 'L';
    if (d >= 2) out += '^' + std::to_string(d);
  }
  return out;
}

}  // namespace mhopf
