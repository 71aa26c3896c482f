#include "zpolynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace kdyck {

namespace {
const BigInt kZero = 0;
}

ZPoly::ZPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

ZPoly ZPoly::constant(BigInt c) {
  std::vector<BigInt> v;
  v.push_back(std::move(c));
  return ZPoly(std::move(v));
}

ZPoly ZPoly::monomial(BigInt c, long degree) {
  if (degree < 0) throw std::invalid_argument("ZPoly::monomial: negative degree");
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return ZPoly(std::move(v));
}

void ZPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& ZPoly::coeff(long d) const {
  if (d < 0 || d >= static_cast<long>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(d)];
}

ZPoly ZPoly::shifted(long s) const {
  if (s < 0) throw std::invalid_argument("ZPoly::shifted: negative shift");
  if (is_zero() || s == 0) return s == 0 ? *this : ZPoly{};
  std::vector<BigInt> v(coeffs_.size() + static_cast<std::size_t>(s));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + static_cast<std::size_t>(s)] = coeffs_[i];
  return ZPoly(std::move(v));
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ZPoly(std::move(v));
}

ZPoly operator*(const BigInt& c, const ZPoly& p) {
  if (c == 0 || p.is_zero()) return {};
  std::vector<BigInt> v(p.coeffs_);
  for (auto& x : v) x *= c;
  return ZPoly(std::move(v));
}

ZPoly ZPoly::operator-() const {
  std::vector<BigInt> v(coeffs_);
  for (auto& x : v) x = -x;
  return ZPoly(std::move(v));
}

std::string ZPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const BigInt& c = coeffs_[d];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (d == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "z";
      if (d > 1) out << "^" << d;
    }
  }
  return out.str();
}

}  // namespace kdyck
