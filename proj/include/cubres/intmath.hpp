#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cubres {

using i128 = __int128;
using u128 = unsigned __int128;

std::string u128_to_string(u128 n);
std::string i128_to_string(i128 n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, u128 exp, std::uint64_t m);

/// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(std::uint64_t n);

/// Primes <= n in ascending order (sieve of Eratosthenes).
std::vector<std::int64_t> primes_up_to(std::int64_t n);

/// Trial-division factorization: (prime, exponent) pairs in ascending order.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

}  // namespace cubres
