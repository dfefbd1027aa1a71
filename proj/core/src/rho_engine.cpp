#include "rho/rho_engine.hpp"

#include <numeric>
#include <stdexcept>

#include "rho/checked_arith.hpp"
#include "rho/primes.hpp"
#include "rho/spectra.hpp"

namespace rho {
namespace {

using u64 = std::uint64_t;

}  // namespace

FactoredInt rho_enumerative(const OrderSpectrum& spectrum) {
  spectrum.validate();
  FactoredInt result = FactoredInt::one();
  for (const auto& [t, count] : spectrum.counts) {
    result = mul(result, pow(factor(t), count));
  }
  return result;
}

FactoredInt rho_cyclic(std::uint64_t n) {
  if (n == 0) throw std::domain_error("rho_cyclic: order must be positive");
  FactoredInt result = FactoredInt::one();
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    result = mul(result, pow(factor(d), euler_phi(d)));
    const u64 e = n / d;
    if (e != d) result = mul(result, pow(factor(e), euler_phi(e)));
  }
  return result;
}

FactoredInt rho_direct_product(const std::vector<RhoPart>& parts) {
  for (const RhoPart& part : parts) {
    if (part.order == 0) {
      throw std::domain_error("rho_direct_product: orders must be positive");
    }
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (std::gcd(parts[i].order, parts[j].order) != 1) {
        throw std::invalid_argument(
            "rho_direct_product: factor orders " +
            std::to_string(parts[i].order) + " and " +
            std::to_string(parts[j].order) +
            " are not coprime; the product formula requires pairwise "
            "coprime orders");
      }
    }
  }
  FactoredInt result = FactoredInt::one();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    u64 cofactor = 1;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (j != i) cofactor = checked_mul(cofactor, parts[j].order);
    }
    result = mul(result, pow(parts[i].rho, cofactor));
  }
  return result;
}

FactoredInt rho_semidirect(const FactoredInt& rho_P, std::uint64_t order_P,
                           const FactoredInt& rho_F,
                           std::uint64_t centralizer_CF_P) {
  if (order_P == 0 || centralizer_CF_P == 0) {
    throw std::domain_error("rho_semidirect: sizes must be positive");
  }
  return mul(pow(rho_P, centralizer_CF_P), pow(rho_F, order_P));
}

FactoredInt rho_psl2(std::uint64_t q) {
  if (q < 5 || q % 2 == 0 || !is_prime(q)) {
    throw std::invalid_argument(
        "rho_psl2: q must be an odd prime >= 5 (got " + std::to_string(q) +
        ")");
  }
  const u64 half_minus = (q - 1) / 2;
  const u64 half_plus = (q + 1) / 2;
  FactoredInt result = pow(rho_cyclic(half_minus), checked_mul(q, half_plus));
  result = mul(result, pow(rho_cyclic(half_plus), checked_mul(q, half_minus)));
  result = mul(result, pow(factor(q), checked_mul(q, q) - 1));
  return result;
}

std::vector<std::uint64_t> exp_rho(const FiniteGroup& G) {
  return exp_set(rho_enumerative(G.spectrum()));
}

std::vector<std::uint64_t> exp_rho(const GroupSpec& spec) {
  return exp_set(rho_enumerative(spectrum_of_spec(spec)));
}

}  // namespace rho
