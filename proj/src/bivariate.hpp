#pragma once

#include <string>
#include <vector>

#include "bigint.hpp"
#include "zpolynomial.hpp"

namespace kdyck {

// Exact polynomial in z and u over BigInt, stored as one z-polynomial per
// u-degree. Normalized: no trailing zero u-rows. Both degree bounds are
// finite; nothing is truncated.
class BivariatePoly {
 public:
  BivariatePoly() = default;

  static BivariatePoly monomial(BigInt c, long z_deg, long u_deg);
  // p(z) * u^u_deg
  static BivariatePoly from_u_monomial(ZPoly p, long u_deg);

  bool is_zero() const { return by_u_.empty(); }
  // -1 for the zero polynomial
  long u_degree() const { return static_cast<long>(by_u_.size()) - 1; }
  long z_degree() const;
  const ZPoly& u_coeff(long u_deg) const;
  const BigInt& coeff(long z_deg, long u_deg) const;

  // substitute u = 1: the sum of the u-rows
  ZPoly eval_u_one() const;

  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);

  bool operator==(const BivariatePoly& o) const { return by_u_ == o.by_u_; }

  std::string to_string() const;

 private:
  void normalize();

  std::vector<ZPoly> by_u_;  // by_u_[d] = coefficient of u^d
};

}  // namespace kdyck
