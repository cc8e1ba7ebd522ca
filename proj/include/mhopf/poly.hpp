#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <map>
#include <string>

namespace mhopf {

using Integer = boost::multiprecision::cpp_int;

// An element of Z[L], L standing for the deformation parameter lambda.
// Sparse: only nonzero coefficients are stored.
class Poly {
 public:
  static constexpr int minus_infinity = std::numeric_limits<int>::min();

  Poly() = default;
  Poly(int c) : Poly(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Integer(c)) {}  // NOLINT
  Poly(long long c) : Poly(Integer(c)) {}  // NOLINT
  Poly(const Integer& c);  // NOLINT

  // c * L^degree
  static Poly monomial(const Integer& c, unsigned degree);
  // The indeterminate L.
  static Poly lambda() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0); }
  // minus_infinity for the zero polynomial.
  int degree() const noexcept { return coeffs_.empty() ? minus_infinity : static_cast<int>(coeffs_.rbegin()->first); }
  Integer coefficient(unsigned degree) const;
  const std::map<unsigned, Integer>& coefficients() const noexcept { return coeffs_; }

  Integer evaluate(const Integer& at) const;
  // Substitutes L := value.
  Poly substitute(const Poly& value) const;
  Poly pow(unsigned e) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

  // "0", "3", "-L", "1+2L", "L^2-4L^3"
  std::string to_string() const;

 private:
  void add(unsigned degree, const Integer& c);
  std::map<unsigned, Integer> coeffs_;
};

inline std::string to_string(const Poly& p) { return p.to_string(); }

}  // namespace mhopf
