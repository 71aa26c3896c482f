#include "bivariate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace kdyck {

namespace {
const ZPoly kZeroPoly{};
const BigInt kZero = 0;
}  // namespace

BivariatePoly BivariatePoly::monomial(BigInt c, long z_deg, long u_deg) {
  return from_u_monomial(ZPoly::monomial(std::move(c), z_deg), u_deg);
}

BivariatePoly BivariatePoly::from_u_monomial(ZPoly p, long u_deg) {
  if (u_deg < 0) throw std::invalid_argument("BivariatePoly: negative u-degree");
  BivariatePoly r;
  if (p.is_zero()) return r;
  r.by_u_.resize(static_cast<std::size_t>(u_deg) + 1);
  r.by_u_.back() = std::move(p);
  return r;
}

void BivariatePoly::normalize() {
  while (!by_u_.empty() && by_u_.back().is_zero()) by_u_.pop_back();
}

long BivariatePoly::z_degree() const {
  long d = -1;
  for (const auto& row : by_u_) d = std::max(d, row.degree());
  return d;
}

const ZPoly& BivariatePoly::u_coeff(long u_deg) const {
  if (u_deg < 0 || u_deg >= static_cast<long>(by_u_.size())) return kZeroPoly;
  return by_u_[static_cast<std::size_t>(u_deg)];
}

const BigInt& BivariatePoly::coeff(long z_deg, long u_deg) const {
  if (u_deg < 0 || u_deg >= static_cast<long>(by_u_.size())) return kZero;
  return by_u_[static_cast<std::size_t>(u_deg)].coeff(z_deg);
}

ZPoly BivariatePoly::eval_u_one() const {
  ZPoly sum;
  for (const auto& row : by_u_) sum += row;
  return sum;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  if (by_u_.size() < o.by_u_.size()) by_u_.resize(o.by_u_.size());
  for (std::size_t d = 0; d < o.by_u_.size(); ++d) by_u_[d] += o.by_u_[d];
  normalize();
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  if (by_u_.size() < o.by_u_.size()) by_u_.resize(o.by_u_.size());
  for (std::size_t d = 0; d < o.by_u_.size(); ++d) by_u_[d] -= o.by_u_[d];
  normalize();
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.by_u_.resize(a.by_u_.size() + b.by_u_.size() - 1);
  for (std::size_t i = 0; i < a.by_u_.size(); ++i) {
    if (a.by_u_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.by_u_.size(); ++j) r.by_u_[i + j] += a.by_u_[i] * b.by_u_[j];
  }
  r.normalize();
  return r;
}

std::string BivariatePoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = 0; d < by_u_.size(); ++d) {
    if (by_u_[d].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << by_u_[d].to_string() << ")";
    if (d == 1) out << "*u";
    if (d > 1) out << "*u^" << d;
  }
  return out.str();
}

}  // namespace kdyck
