#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rho {

// Unsigned 64-bit arithmetic that refuses to wrap around: any overflow is a
// loud std::overflow_error instead of a silently truncated value.

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("checked_add: " + std::to_string(a) + " + " +
                              std::to_string(b) + " exceeds 64 bits");
  }
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("checked_mul: " + std::to_string(a) + " * " +
                              std::to_string(b) + " exceeds 64 bits");
  }
  return r;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  std::uint64_t acc = base;
  while (exp != 0) {
    if (exp & 1) result = checked_mul(result, acc);
    exp >>= 1;
    if (exp != 0) acc = checked_mul(acc, acc);
  }
  return result;
}

}  // namespace rho
