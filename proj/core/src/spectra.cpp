#include "rho/spectra.hpp"

#include <numeric>
#include <stdexcept>

#include "rho/catalog.hpp"
#include "rho/checked_arith.hpp"
#include "rho/factored_int.hpp"
#include "rho/primes.hpp"

namespace rho {

namespace {

using u64 = std::uint64_t;

std::vector<u64> divisors_of(u64 n) {
  std::vector<u64> divs{1};
  const FactoredInt f = factor(n);
  for (const auto& [p, e] : f.factors()) {
    const std::size_t count = divs.size();
    u64 pk = 1;
    for (u64 i = 1; i <= e; ++i) {
      pk = checked_mul(pk, p);
      for (std::size_t j = 0; j < count; ++j) {
        divs.push_back(checked_mul(divs[j], pk));
      }
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

OrderSpectrum spectrum_cyclic(u64 n) {
  if (n == 0) throw std::domain_error("spectrum_cyclic: n must be >= 1");
  OrderSpectrum s;
  s.group_order = n;
  for (u64 d : divisors_of(n)) s.counts[d] = euler_phi(d);
  s.validate();
  return s;
}

OrderSpectrum spectrum_dihedral(u64 order) {
  if (order < 2 || order % 2 != 0) {
    throw std::domain_error("spectrum_dihedral: order must be even and >= 2");
  }
  const u64 n = order / 2;
  // C_n extended by an inverting involution.
  return spectrum_metacyclic(n, 2, n == 1 ? 0 : n - 1);
}

OrderSpectrum spectrum_psl2(u64 q) {
  if (q < 3 || q % 2 == 0 || !is_prime(q)) {
    throw std::domain_error("spectrum_psl2: q must be an odd prime");
  }
  OrderSpectrum s;
  s.group_order = q * (q - 1) * (q + 1) / 2;
  s.counts[1] = 1;
  s.counts[q] = q * q - 1;
  for (u64 d : divisors_of((q - 1) / 2)) {
    if (d > 1) s.counts[d] += q * (q + 1) / 2 * euler_phi(d);
  }
  for (u64 d : divisors_of((q + 1) / 2)) {
    if (d > 1) s.counts[d] += q * (q - 1) / 2 * euler_phi(d);
  }
  s.validate();
  return s;
}

OrderSpectrum spectrum_metacyclic(u64 b, u64 a, u64 k) {
  if (b == 0 || a == 0) {
    throw std::domain_error("spectrum_metacyclic: orders must be >= 1");
  }
  const u64 kk = k % b;
  if (std::gcd(kk, b) != 1 || powmod(kk, a, b) != 1 % b) {
    throw std::domain_error("spectrum_metacyclic: invalid twist");
  }
  OrderSpectrum s;
  s.group_order = checked_mul(a, b);
  for (u64 j = 0; j < a; ++j) {
    const u64 m = a / std::gcd(a, j);  // order of y^j in the complement
    const u64 kj = powmod(kk, j, b);
    u64 sigma = 0, kjt = 1;
    for (u64 t = 0; t < m; ++t) {
      sigma = (sigma + kjt) % b;
      kjt = kjt * kj % b;
    }
    for (u64 i = 0; i < b; ++i) {
      const u64 kernel_part = b / std::gcd(b, i * sigma % b);
      ++s.counts[checked_mul(m, kernel_part)];
    }
  }
  s.validate();
  return s;
}

OrderSpectrum spectrum_product(const OrderSpectrum& lhs,
                               const OrderSpectrum& rhs) {
  OrderSpectrum s;
  s.group_order = checked_mul(lhs.group_order, rhs.group_order);
  for (const auto& [t1, c1] : lhs.counts) {
    for (const auto& [t2, c2] : rhs.counts) {
      const u64 t = std::lcm(t1, t2);
      s.counts[t] = checked_add(s.counts[t], checked_mul(c1, c2));
    }
  }
  s.validate();
  return s;
}

OrderSpectrum spectrum_of_spec(const GroupSpec& spec) {
  validate(spec);
  return std::visit(
      [](const auto& node) -> OrderSpectrum {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) {
          return spectrum_cyclic(node.n);
        } else if constexpr (std::is_same_v<T, DihedralSpec>) {
          return spectrum_dihedral(node.order);
        } else if constexpr (std::is_same_v<T, Psl2Spec>) {
          return spectrum_psl2(node.q);
        } else if constexpr (std::is_same_v<T, SemidirectSpec>) {
          return spectrum_metacyclic(node.kernel_n, node.complement_m,
                                     node.twist_k);
        } else if constexpr (std::is_same_v<T, DirectSpec>) {
          OrderSpectrum acc = spectrum_of_spec(node.factors.front());
          for (std::size_t i = 1; i < node.factors.size(); ++i) {
            acc = spectrum_product(acc, spectrum_of_spec(node.factors[i]));
          }
          return acc;
        } else if constexpr (std::is_same_v<T, CatalogRefSpec>) {
          const Catalog& cat = curated_catalog(node.order);
          if (node.index > cat.entries.size()) {
            throw std::invalid_argument("catalog index out of range");
          }
          return cat.entries[node.index - 1].spectrum();
        }
      },
      spec);
}

}  // namespace rho
