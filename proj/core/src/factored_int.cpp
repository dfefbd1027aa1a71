#include "rho/factored_int.hpp"

#include <algorithm>
#include <stdexcept>

#include "rho/checked_arith.hpp"
#include "rho/primes.hpp"

namespace rho {

namespace {
constexpr std::uint64_t kValueCap = 0x7fffffffffffffffull;  // 2^63 - 1
}  // namespace

FactoredInt FactoredInt::from_factorization(std::vector<PrimePower> entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& [p, e] = entries[i];
    if (!is_prime(p)) {
      throw std::invalid_argument("FactoredInt: base " + std::to_string(p) +
                                  " is not prime");
    }
    if (e == 0) {
      throw std::invalid_argument("FactoredInt: exponent of " +
                                  std::to_string(p) + " must be >= 1");
    }
    if (i > 0 && entries[i - 1].prime >= p) {
      throw std::invalid_argument(
          "FactoredInt: bases must be strictly increasing");
    }
  }
  FactoredInt r;
  r.entries_ = std::move(entries);
  return r;
}

std::uint64_t FactoredInt::expand() const {
  std::uint64_t value = 1;
  for (const auto& [p, e] : entries_) {
    value = checked_mul(value, checked_pow(p, e));
  }
  if (value > kValueCap) {
    throw std::overflow_error("FactoredInt::expand: value exceeds 2^63 - 1");
  }
  return value;
}

std::string FactoredInt::str() const {
  if (entries_.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : entries_) {
    if (!out.empty()) out += '*';
    out += std::to_string(p);
    out += '^';
    out += std::to_string(e);
  }
  return out;
}

FactoredInt factor(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factor: n must be >= 1");
  if (n > kValueCap) throw std::domain_error("factor: n exceeds 2^63 - 1");
  const std::vector<std::uint64_t> flat = prime_factorization(n);
  std::vector<PrimePower> entries;
  for (std::uint64_t p : flat) {
    if (!entries.empty() && entries.back().prime == p) {
      ++entries.back().exponent;
    } else {
      entries.push_back({p, 1});
    }
  }
  return FactoredInt::from_factorization(std::move(entries));
}

FactoredInt mul(const FactoredInt& a, const FactoredInt& b) {
  const auto& xs = a.factors();
  const auto& ys = b.factors();
  std::vector<PrimePower> entries;
  entries.reserve(xs.size() + ys.size());
  std::size_t i = 0, j = 0;
  while (i < xs.size() && j < ys.size()) {
    if (xs[i].prime < ys[j].prime) {
      entries.push_back(xs[i++]);
    } else if (ys[j].prime < xs[i].prime) {
      entries.push_back(ys[j++]);
    } else {
      entries.push_back(
          {xs[i].prime, checked_add(xs[i].exponent, ys[j].exponent)});
      ++i;
      ++j;
    }
  }
  entries.insert(entries.end(), xs.begin() + i, xs.end());
  entries.insert(entries.end(), ys.begin() + j, ys.end());
  return FactoredInt::from_factorization(std::move(entries));
}

FactoredInt pow(const FactoredInt& a, std::uint64_t e) {
  if (e == 0) return FactoredInt::one();
  std::vector<PrimePower> entries = a.factors();
  for (auto& pp : entries) pp.exponent = checked_mul(pp.exponent, e);
  return FactoredInt::from_factorization(std::move(entries));
}

std::uint64_t exp_of(const FactoredInt& n, std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::domain_error("exp_of: " + std::to_string(p) + " is not prime");
  }
  for (const auto& [q, e] : n.factors()) {
    if (q == p) return e;
    if (q > p) break;
  }
  return 0;
}

std::vector<std::uint64_t> exp_set(const FactoredInt& n) {
  std::vector<std::uint64_t> out;
  out.reserve(n.factors().size());
  for (const auto& [p, e] : n.factors()) out.push_back(e);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> primes(const FactoredInt& n) {
  std::vector<std::uint64_t> out;
  out.reserve(n.factors().size());
  for (const auto& [p, e] : n.factors()) out.push_back(p);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::domain_error("euler_phi: n must be >= 1");
  std::uint64_t phi = 1;
  const FactoredInt f = factor(n);  // keep alive: factors() refers into it
  for (const auto& [p, e] : f.factors()) {
    phi = checked_mul(phi, checked_mul(checked_pow(p, e - 1), p - 1));
  }
  return phi;
}

std::string to_string(const FactoredInt& n) { return n.str(); }

}  // namespace rho
