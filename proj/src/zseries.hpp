#pragma once

#include <string>
#include <vector>

#include "bigint.hpp"
#include "zpolynomial.hpp"

namespace kdyck {

// Truncated formal power series in z over BigInt. The truncation order is
// explicit data: coefficients above it are unknown, not zero. Arithmetic
// never reads above the order, and the order of a sum or product is the
// minimum of the operand orders.
class ZSeries {
 public:
  // zero series known through z^order
  explicit ZSeries(long order);
  // coefficients for z^0..z^order; the vector is padded or cut to order+1
  ZSeries(std::vector<BigInt> coeffs, long order);

  static ZSeries constant(const BigInt& c, long order);
  static ZSeries one(long order) { return constant(1, order); }
  static ZSeries from_poly(const ZPoly& p, long order);

  long order() const { return order_; }
  // requires 0 <= i <= order(): above the order the value is unknown
  const BigInt& coeff(long i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  // new_order must not exceed the current order
  ZSeries truncated(long new_order) const;
  // multiply by z^s; the result is known through z^(order+s)
  ZSeries shifted(long s) const;

  ZSeries pow(long e) const;

  friend ZSeries operator+(const ZSeries& a, const ZSeries& b);
  friend ZSeries operator-(const ZSeries& a, const ZSeries& b);
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b);
  friend ZSeries operator*(const BigInt& c, const ZSeries& s);
  ZSeries operator-() const;

  // Strict value equality: same order and same coefficients.
  bool operator==(const ZSeries& o) const;

  // The spec'd comparison: coefficients checked through the smaller of the
  // two orders, which is reported back. mismatch_index is -1 on agreement.
  struct Agreement {
    bool equal;
    long order;
    long mismatch_index;
  };
  Agreement agreement(const ZSeries& o) const;

  std::string to_string() const;

 private:
  long order_;
  std::vector<BigInt> coeffs_;  // size order_+1
};

}  // namespace kdyck
