#include "rho/primes.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace rho {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

// One strong-probable-prime round; n must be odd and >= 3.
bool passes_base(u64 n, u64 a) {
  a %= n;
  if (a == 0) return true;
  u64 d = n - 1;
  const int s = std::countr_zero(d);
  d >>= s;
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr std::uint32_t kSieveLimit = 1u << 20;

// Smallest-prime-factor table for everything below kSieveLimit, built once on
// first use (thread-safe by the magic-static guarantee).
const std::vector<std::uint32_t>& spf_table() {
  static const std::vector<std::uint32_t> table = [] {
    std::vector<std::uint32_t> t(kSieveLimit);
    std::iota(t.begin(), t.end(), 0u);
    for (std::uint32_t i = 2; static_cast<u64>(i) * i < kSieveLimit; ++i) {
      if (t[i] != i) continue;  // i is composite
      for (std::uint32_t j = i * i; j < kSieveLimit; j += i) {
        if (t[j] == j) t[j] = i;
      }
    }
    return t;
  }();
  return table;
}

// Brent's cycle-finding variant of Pollard's rho.  n must be composite and
// coprime to the small primes already stripped off.  Deterministic: the
// polynomial offset c is incremented until a factor splits.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    const u64 m = 128;
    u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        const u64 lim = std::min(m, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r <<= 1;
    }
    if (g == n) {
      // The batched gcd jumped past the factor; replay one step at a time.
      do {
        ys = (mulmod(ys, ys, n) + c) % n;
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(u64 n, std::vector<u64>& out) {
  while (n != 1) {
    if (n < kSieveLimit) {
      const auto& spf = spf_table();
      std::uint32_t v = static_cast<std::uint32_t>(n);
      while (v != 1) {
        out.push_back(spf[v]);
        v /= spf[v];
      }
      return;
    }
    if (is_prime(n)) {
      out.push_back(n);
      return;
    }
    u64 d = pollard_brent(n);
    split(d, out);
    n /= d;
  }
}

}  // namespace

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 0) throw std::domain_error("powmod: modulus must be >= 1");
  u64 r = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // These seven bases decide primality exactly for all 64-bit integers.
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull,
                1795265022ull}) {
    if (!passes_base(n, a)) return false;
  }
  return true;
}

std::vector<u64> prime_factorization(u64 n) {
  if (n == 0) throw std::domain_error("prime_factorization: n must be >= 1");
  std::vector<u64> out;
  // Strip small primes first so the recursive splitter only ever sees inputs
  // free of tiny factors.
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  split(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rho
