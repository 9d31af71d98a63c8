#pragma once

#include <cstdint>
#include <stdexcept>

namespace skewht::fp {

// Default modulus for randomized verification: the Mersenne prime 2^31 - 1.
// Operands stay below 2^31, so products fit in 64 bits without widening.
inline constexpr std::uint64_t kDefaultPrime = 2147483647ull;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t neg(std::uint64_t a, std::uint64_t p) {
  return a == 0 ? 0 : p - a;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) r = mul(r, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("fp::inv: zero is not invertible");
  return pow(a % p, p - 2, p);  // p prime
}

// a^e for signed e.
inline std::uint64_t pow_signed(std::uint64_t a, long long e, std::uint64_t p) {
  if (e >= 0) return pow(a, static_cast<std::uint64_t>(e), p);
  return inv(pow(a, static_cast<std::uint64_t>(-e), p), p);
}

}  // namespace skewht::fp
