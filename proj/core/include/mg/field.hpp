#pragma once

#include <cstdint>

namespace mg {

using Coefficient = std::uint32_t;

inline constexpr Coefficient kDefaultCharacteristic = 32003;

/// Arithmetic in F_p for p < 2^31. Values are kept in [0, p).
namespace field {

inline Coefficient add(Coefficient a, Coefficient b, Coefficient p) {
  const std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline Coefficient sub(Coefficient a, Coefficient b, Coefficient p) {
  return a >= b ? a - b : a + p - b;
}

inline Coefficient neg(Coefficient a, Coefficient p) { return a == 0 ? 0 : p - a; }

inline Coefficient mul(Coefficient a, Coefficient b, Coefficient p) {
  return static_cast<Coefficient>(static_cast<std::uint64_t>(a) * b % p);
}

Coefficient inverse(Coefficient a, Coefficient p);

/// Reduces an arbitrary signed integer into [0, p).
Coefficient reduce(std::int64_t value, Coefficient p);

/// Symmetric representative in (-p/2, p/2], used for printing.
std::int64_t lift(Coefficient a, Coefficient p);

bool is_prime(std::uint64_t n);

/// Lucas' theorem: whether binomial(n, k) is nonzero modulo p.
bool binomial_nonzero_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p);

}  // namespace field
}  // namespace mg
