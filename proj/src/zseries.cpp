#include "zseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace kdyck {

ZSeries::ZSeries(long order) : order_(order) {
  if (order < 0) throw std::invalid_argument("ZSeries: negative order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

ZSeries::ZSeries(std::vector<BigInt> coeffs, long order) : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("ZSeries: negative order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

ZSeries ZSeries::constant(const BigInt& c, long order) {
  ZSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

ZSeries ZSeries::from_poly(const ZPoly& p, long order) {
  ZSeries s(order);
  for (long d = 0; d <= std::min(order, p.degree()); ++d) s.coeffs_[static_cast<std::size_t>(d)] = p.coeff(d);
  return s;
}

const BigInt& ZSeries::coeff(long i) const {
  if (i < 0 || i > order_) throw std::out_of_range("ZSeries::coeff: index outside known range");
  return coeffs_[static_cast<std::size_t>(i)];
}

bool ZSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

ZSeries ZSeries::truncated(long new_order) const {
  if (new_order > order_) throw std::invalid_argument("ZSeries::truncated: cannot raise the order");
  ZSeries s(new_order);
  std::copy(coeffs_.begin(), coeffs_.begin() + new_order + 1, s.coeffs_.begin());
  return s;
}

ZSeries ZSeries::shifted(long s) const {
  if (s < 0) throw std::invalid_argument("ZSeries::shifted: negative shift");
  ZSeries r(order_ + s);
  std::copy(coeffs_.begin(), coeffs_.end(), r.coeffs_.begin() + s);
  return r;
}

ZSeries operator+(const ZSeries& a, const ZSeries& b) {
  const long n = std::min(a.order_, b.order_);
  ZSeries r(n);
  for (long i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return r;
}

ZSeries operator-(const ZSeries& a, const ZSeries& b) {
  const long n = std::min(a.order_, b.order_);
  ZSeries r(n);
  for (long i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return r;
}

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
  const long n = std::min(a.order_, b.order_);
  ZSeries r(n);
  for (long i = 0; i <= n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (long j = 0; i + j <= n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

ZSeries operator*(const BigInt& c, const ZSeries& s) {
  ZSeries r(s.order_);
  for (std::size_t i = 0; i < s.coeffs_.size(); ++i) r.coeffs_[i] = c * s.coeffs_[i];
  return r;
}

ZSeries ZSeries::operator-() const {
  ZSeries r(order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
  return r;
}

ZSeries ZSeries::pow(long e) const {
  if (e < 0) throw std::invalid_argument("ZSeries::pow: negative exponent");
  ZSeries r = ZSeries::one(order_);
  for (long i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool ZSeries::operator==(const ZSeries& o) const { return order_ == o.order_ && coeffs_ == o.coeffs_; }

ZSeries::Agreement ZSeries::agreement(const ZSeries& o) const {
  const long n = std::min(order_, o.order_);
  for (long i = 0; i <= n; ++i) {
    if (coeffs_[i] != o.coeffs_[i]) return {false, n, i};
  }
  return {true, n, -1};
}

std::string ZSeries::to_string() const {
  std::ostringstream out;
  out << ZPoly(coeffs_).to_string() << " + O(z^" << order_ + 1 << ")";
  return out.str();
}

}  // namespace kdyck
