#include "cgt/numtheory.hpp"

#include <numeric>

namespace cgt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  if (n == 0 || p < 2) return 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) { return n != 0 && p_part(n, p) == n; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 result = 1, b = base % mod;
  while (exp) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t multiplicative_order(std::uint64_t k, std::uint64_t n) {
  if (n == 1) return 1;
  if (std::gcd(k, n) != 1) return 0;
  std::uint64_t x = k % n, ord = 1;
  while (x != 1) {
    x = x * k % n;
    ++ord;
  }
  return ord;
}

std::uint64_t crt_idempotent(std::uint64_t a_mod, std::uint64_t b_mod) {
  // a = t * b_mod with t * b_mod = 1 mod a_mod
  const std::uint64_t m = a_mod * b_mod;
  if (a_mod == 1) return 0;
  for (std::uint64_t t = 0; t < a_mod; ++t)
    if ((t * b_mod) % a_mod == 1) return (t * b_mod) % m;
  return 0;
}

}  // namespace cgt
