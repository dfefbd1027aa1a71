#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace rho {

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint64_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

// An exact nonnegative integer kept permanently in prime-factorized form:
// an ordered list of prime -> exponent entries.  The empty list is the
// number 1.  Invariants (enforced on construction):
//   * every base is prime,
//   * bases are strictly increasing,
//   * every exponent is >= 1.
// Values are immutable once built and safe to share across threads.
class FactoredInt {
 public:
  FactoredInt() = default;  // the number 1

  static FactoredInt one() { return FactoredInt{}; }

  // Validates the invariants above; throws std::invalid_argument on any
  // violation (non-prime base, unsorted/duplicate bases, zero exponent).
  static FactoredInt from_factorization(std::vector<PrimePower> entries);

  // The && overload hands the entries out by value so that iterating
  // `factor(n).factors()` never dangles.
  const std::vector<PrimePower>& factors() const& { return entries_; }
  std::vector<PrimePower> factors() && { return std::move(entries_); }
  bool is_one() const { return entries_.empty(); }

  // Multiplies the factorization back out.  Throws std::overflow_error when
  // the value exceeds 2^63 - 1 (the factorization input cap, kept symmetric
  // so expand/factor round-trip over exactly the same domain).
  std::uint64_t expand() const;

  // Canonical rendering: "1", or "^"-separated powers joined by "*" with
  // bases ascending and exponents always explicit, e.g. "2^15*3^20*5^24".
  std::string str() const;

  friend bool operator==(const FactoredInt&, const FactoredInt&) = default;

 private:
  std::vector<PrimePower> entries_;
};

// Factors n (1 <= n <= 2^63 - 1) into a FactoredInt.
// Throws std::domain_error for n = 0 or n > 2^63 - 1.
FactoredInt factor(std::uint64_t n);

// Exponentwise sum of two factored values (i.e. the product of the numbers).
// Exponent overflow throws std::overflow_error.
FactoredInt mul(const FactoredInt& a, const FactoredInt& b);

// Exponentwise scaling (i.e. the e-th power); pow(a, 0) is 1.
// Exponent overflow throws std::overflow_error.
FactoredInt pow(const FactoredInt& a, std::uint64_t e);

// The exponent of prime p in n ([n]_p), 0 when p does not divide n.
// Throws std::domain_error when p is not prime.
std::uint64_t exp_of(const FactoredInt& n, std::uint64_t p);

// The set of exponents appearing in n (Exp(n)), sorted ascending with
// duplicates collapsed.  Empty for n = 1.
std::vector<std::uint64_t> exp_set(const FactoredInt& n);

// The set of primes dividing n (pi(n)), sorted ascending.  Empty for n = 1.
std::vector<std::uint64_t> primes(const FactoredInt& n);

// Euler's totient of n (1 <= n <= 2^63 - 1), computed multiplicatively from
// the factorization.  Throws std::domain_error for n = 0 or n > 2^63 - 1.
std::uint64_t euler_phi(std::uint64_t n);

// Free-function spelling of FactoredInt::str().
std::string to_string(const FactoredInt& n);

}  // namespace rho
