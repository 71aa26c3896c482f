#pragma once

#include <string>
#include <vector>

#include "bigint.hpp"

namespace kdyck {

// Dense polynomial in z over BigInt. Normalized: no trailing zero
// coefficients; the zero polynomial has an empty coefficient vector.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<BigInt> coeffs);

  static ZPoly constant(BigInt c);
  static ZPoly one() { return constant(1); }
  // c * z^degree
  static ZPoly monomial(BigInt c, long degree);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const BigInt& coeff(long d) const;

  // multiply by z^s
  ZPoly shifted(long s) const;

  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);

  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const BigInt& c, const ZPoly& p);
  ZPoly operator-() const;

  bool operator==(const ZPoly& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string() const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

}  // namespace kdyck
