#pragma once

#include <cstdint>
#include <vector>

namespace cgt {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n in increasing order (empty for n <= 1).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

/// True iff n is a power of p (including p^0 = 1).
bool is_power_of(std::uint64_t n, std::uint64_t p);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Multiplicative order of k modulo n; 0 when gcd(k, n) != 1.
std::uint64_t multiplicative_order(std::uint64_t k, std::uint64_t n);

/// The unique a in [0, a_mod * b_mod) with a = 1 mod a_mod and a = 0 mod b_mod.
/// Requires gcd(a_mod, b_mod) = 1.
std::uint64_t crt_idempotent(std::uint64_t a_mod, std::uint64_t b_mod);

}  // namespace cgt
