#include "mg/field.hpp"

#include "mg/errors.hpp"

namespace mg::field {

Coefficient inverse(Coefficient a, Coefficient p) {
  if (a % p == 0) throw PreconditionError("division by zero in F_p");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<Coefficient>(t);
}

Coefficient reduce(std::int64_t value, Coefficient p) {
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<Coefficient>(r);
}

std::int64_t lift(Coefficient a, Coefficient p) {
  return a > p / 2 ? static_cast<std::int64_t>(a) - p : static_cast<std::int64_t>(a);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool binomial_nonzero_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (k > n) return false;
  while (n > 0 || k > 0) {
    if (k % p > n % p) return false;
    n /= p;
    k /= p;
  }
  return true;
}

}  // namespace mg::field
