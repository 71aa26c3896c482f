#pragma once

#include <gmpxx.h>

#include <string>

namespace kdyck {

// Exact signed integer of arbitrary magnitude. Every count and coefficient
// in the library is a BigInt; there is no floating point anywhere.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

}  // namespace kdyck
