#pragma once

#include <cstdint>
#include <vector>

namespace rho {

// Deterministic primality test, exact for every 64-bit value.
bool is_prime(std::uint64_t n) noexcept;

// base^exp mod m (m >= 1), safe for the full 64-bit range.
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Prime factors of n in ascending order, with multiplicity
// (e.g. 60 -> {2, 2, 3, 5}).  n = 1 yields the empty list.
// Throws std::domain_error for n = 0.
std::vector<std::uint64_t> prime_factorization(std::uint64_t n);

}  // namespace rho
