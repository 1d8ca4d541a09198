#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "galdef/common.hpp"

namespace galdef {

using int128 = __int128;
using uint128 = unsigned __int128;

std::string int128_to_string(int128 v);

/// Overflow-checked arithmetic on int128 (throws input_error on overflow).
int128 checked_mul(int128 a, int128 b);
int128 checked_add(int128 a, int128 b);
int128 checked_pow(int128 base, int exp);

bool is_prime_u64(uint64_t n);
bool is_prime_i128(int128 n);

/// Sorted distinct prime factors of |n| (n != 0). Trial division plus
/// Pollard rho; supports values up to ~10^36.
std::vector<int128> prime_factors(int128 n);

std::vector<int64_t> primes_up_to(int64_t bound);

/// Kronecker symbol (d / p) for p prime (p = 2 allowed).
int kronecker_prime(int64_t d, int64_t p);

bool is_fundamental_discriminant(int64_t d);

int64_t gcd_i64(int64_t a, int64_t b);

} // namespace galdef
