#pragma once

#include <cstdint>
#include <stdexcept>

namespace weilcomb {

// Coefficients are exact signed integers. Machine words are enough for every
// computation this tool performs, but overflow must never pass silently.
using Coeff = std::int64_t;

namespace checked {

inline Coeff add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in exact arithmetic (add)");
  }
  return r;
}

inline Coeff sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in exact arithmetic (sub)");
  }
  return r;
}

inline Coeff mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in exact arithmetic (mul)");
  }
  return r;
}

inline Coeff neg(Coeff a) { return sub(0, a); }

}  // namespace checked
}  // namespace weilcomb
