// SPDX-License-Identifier: MIT
//
// Overflow-checked 64-bit integer helpers.  Every product or sum that can grow
// with the input goes through these so that wraparound becomes a hard error.

#pragma once

#include <cstdint>
#include <cstdlib>

#include "twobridge/error.hpp"

namespace twobridge::checked {

using i64 = std::int64_t;

inline i64 add(i64 a, i64 b) {
  i64 out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("int64 overflow in addition");
  return out;
}

inline i64 sub(i64 a, i64 b) {
  i64 out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("int64 overflow in subtraction");
  return out;
}

inline i64 mul(i64 a, i64 b) {
  i64 out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("int64 overflow in multiplication");
  return out;
}

inline i64 neg(i64 a) { return sub(0, a); }

inline i64 abs(i64 a) { return a < 0 ? neg(a) : a; }

// Non-negative gcd with gcd(x, 0) = |x| and gcd(0, 0) = 0.
inline i64 gcd(i64 a, i64 b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Floor division for a non-zero divisor.
inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q = sub(q, 1);
  return q;
}

}  // namespace twobridge::checked
