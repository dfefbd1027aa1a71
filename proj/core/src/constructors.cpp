#include "rho/constructors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rho/catalog.hpp"
#include "rho/checked_arith.hpp"
#include "rho/factored_int.hpp"
#include "rho/primes.hpp"

namespace rho {
namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

struct GenSet {
  u32 degree = 1;
  std::vector<Permutation> gens;
};

GenSet gens_cyclic(u64 n) {
  const u32 d = static_cast<u32>(n);
  std::vector<u32> images(d);
  for (u32 i = 0; i < d; ++i) images[i] = (i + 1) % d;
  return {d, {Permutation(std::move(images))}};
}

GenSet gens_dihedral(u64 order) {
  if (order == 2) return gens_cyclic(2);
  if (order == 4) {
    return {4, {Permutation({1, 0, 2, 3}), Permutation({0, 1, 3, 2})}};
  }
  const u32 n = static_cast<u32>(order / 2);
  std::vector<u32> r(n), s(n);
  for (u32 i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  return {n, {Permutation(std::move(r)), Permutation(std::move(s))}};
}

GenSet gens_psl2(u64 q) {
  const u32 qq = static_cast<u32>(q);
  std::vector<u32> t(qq + 1), s(qq + 1);
  for (u32 z = 0; z < qq; ++z) t[z] = (z + 1) % qq;
  t[qq] = qq;  // translation fixes infinity
  s[0] = qq;   // inversion swaps 0 and infinity
  s[qq] = 0;
  for (u32 z = 1; z < qq; ++z) {
    const u64 inv = powmod(z, q - 2, q);
    s[z] = static_cast<u32>((q - inv) % q);
  }
  return {qq + 1, {Permutation(std::move(t)), Permutation(std::move(s))}};
}

// C_n : C_m @ k on n+m points: the kernel generator translates the first
// block, the complement generator multiplies that block by k and cycles its
// own block.
GenSet gens_semidirect(u64 n, u64 m, u64 k) {
  const u32 nn = static_cast<u32>(n);
  const u32 mm = static_cast<u32>(m);
  const u64 kk = k % n;
  std::vector<u32> x(nn + mm), y(nn + mm);
  for (u32 i = 0; i < nn; ++i) {
    x[i] = (i + 1) % nn;
    y[i] = static_cast<u32>(kk * i % n);
  }
  for (u32 j = 0; j < mm; ++j) {
    x[nn + j] = nn + j;
    y[nn + j] = nn + (j + 1) % mm;
  }
  return {nn + mm, {Permutation(std::move(x)), Permutation(std::move(y))}};
}

// The same semidirect product on n*m points (the regular action on pairs),
// used only if the n+m realization ever failed to be faithful.
GenSet gens_semidirect_regular(u64 n, u64 m, u64 k) {
  const u64 total = n * m;
  const u64 kk = k % n;
  std::vector<u32> x(total), y(total);
  for (u64 j = 0; j < m; ++j) {
    for (u64 i = 0; i < n; ++i) {
      const u64 at = i + n * j;
      x[at] = static_cast<u32>((i + 1) % n + n * j);
      y[at] = static_cast<u32>(kk * i % n + n * ((j + 1) % m));
    }
  }
  return {static_cast<u32>(total),
          {Permutation(std::move(x)), Permutation(std::move(y))}};
}

GenSet concat_blocks(const std::vector<GenSet>& parts) {
  u64 degree = 0;
  for (const GenSet& p : parts) degree += p.degree;
  GenSet out;
  out.degree = static_cast<u32>(degree);
  u32 offset = 0;
  for (const GenSet& p : parts) {
    for (const Permutation& g : p.gens) {
      std::vector<u32> images(out.degree);
      std::iota(images.begin(), images.end(), 0u);
      for (u32 i = 0; i < p.degree; ++i) images[offset + i] = offset + g(i);
      out.gens.push_back(Permutation(std::move(images)));
    }
    offset += p.degree;
  }
  return out;
}

GenSet spec_gens(const GroupSpec& spec, u64 cap);

GenSet spec_gens_node(const CyclicSpec& s, u64) { return gens_cyclic(s.n); }
GenSet spec_gens_node(const DihedralSpec& s, u64) {
  return gens_dihedral(s.order);
}
GenSet spec_gens_node(const Psl2Spec& s, u64) { return gens_psl2(s.q); }
GenSet spec_gens_node(const SemidirectSpec& s, u64) {
  return gens_semidirect(s.kernel_n, s.complement_m, s.twist_k);
}
GenSet spec_gens_node(const DirectSpec& s, u64 cap) {
  std::vector<GenSet> parts;
  parts.reserve(s.factors.size());
  for (const GroupSpec& f : s.factors) parts.push_back(spec_gens(f, cap));
  return concat_blocks(parts);
}
GenSet spec_gens_node(const CatalogRefSpec& s, u64 cap) {
  const FiniteGroup g = resolve_catalog_ref(s, cap);
  return {g.degree(), g.generators()};
}

GenSet spec_gens(const GroupSpec& spec, u64 cap) {
  return std::visit([cap](const auto& node) { return spec_gens_node(node, cap); },
                    spec);
}

}  // namespace

FiniteGroup build(const GroupSpec& spec, u64 cap) {
  validate(spec);
  const u64 predicted = spec_order(spec);
  if (predicted > cap) throw GroupTooLargeError(cap);
  if (const auto* ref = std::get_if<CatalogRefSpec>(&spec)) {
    return resolve_catalog_ref(*ref, cap);
  }
  const GenSet gs = spec_gens(spec, cap);
  FiniteGroup g = FiniteGroup::enumerate(gs.degree, gs.gens, render(spec), cap);
  if (g.order() != predicted) {
    if (const auto* sd = std::get_if<SemidirectSpec>(&spec)) {
      const GenSet reg = gens_semidirect_regular(sd->kernel_n,
                                                 sd->complement_m, sd->twist_k);
      g = FiniteGroup::enumerate(reg.degree, reg.gens, render(spec), cap);
      if (g.order() == predicted) return g;
    }
    throw std::logic_error("build: realized order " +
                           std::to_string(g.order()) + " for " + render(spec) +
                           " does not match the predicted " +
                           std::to_string(predicted));
  }
  return g;
}

FiniteGroup cyclic(u64 n, u64 cap) { return build(CyclicSpec{n}, cap); }

FiniteGroup dihedral(u64 order, u64 cap) {
  return build(DihedralSpec{order}, cap);
}

FiniteGroup psl2(u64 q, u64 cap) { return build(Psl2Spec{q}, cap); }

FiniteGroup semidirect_cyclic(u64 n, u64 m, u64 k, u64 cap) {
  return build(SemidirectSpec{n, m, k}, cap);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           u64 cap) {
  const GenSet combined = concat_blocks(
      {GenSet{a.degree(), a.generators()}, GenSet{b.degree(), b.generators()}});
  const auto wrap = [](const std::string& s) {
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
  };
  FiniteGroup g =
      FiniteGroup::enumerate(combined.degree, combined.gens,
                             wrap(a.label()) + " x " + wrap(b.label()), cap);
  if (g.order() != checked_mul(a.order(), b.order())) {
    throw std::logic_error("direct_product: realized order mismatch");
  }
  return g;
}

std::vector<GroupSpec> holder_squarefree_specs(u64 n) {
  if (n == 0) throw std::domain_error("holder_squarefree: n must be >= 1");
  if (n > 10'000) {
    throw std::invalid_argument("holder_squarefree: n must be <= 10000");
  }
  const FactoredInt f = factor(n);
  for (const auto& [p, e] : f.factors()) {
    if (e > 1) {
      throw std::invalid_argument(
          "holder_squarefree: " + std::to_string(n) +
          " is not squarefree; non-squarefree orders are served by the "
          "curated catalog");
    }
  }
  const std::vector<u64> prime_list = primes(f);

  std::vector<u64> divisors{1};
  for (u64 p : prime_list) {
    const std::size_t count = divisors.size();
    for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * p);
  }
  std::sort(divisors.begin(), divisors.end());

  std::vector<GroupSpec> out;
  out.push_back(CyclicSpec{n});
  for (u64 b : divisors) {
    if (b == 1) continue;
    const u64 a = n / b;
    std::vector<u64> b_primes;
    for (u64 p : prime_list) {
      if (b % p == 0) b_primes.push_back(p);
    }
    for (u64 k = 2; k < b; ++k) {
      if (std::gcd(k, b) != 1) continue;
      if (powmod(k, a, b) != 1) continue;
      // Every prime of the kernel must be moved, otherwise the same group
      // already appears with a smaller kernel.
      bool moves_all = true;
      for (u64 p : b_primes) {
        if (k % p == 1) {
          moves_all = false;
          break;
        }
      }
      if (!moves_all) continue;
      // Keep one representative per twist orbit {k^i : gcd(i, a) = 1}.
      bool minimal = true;
      u64 power = k;
      for (u64 i = 2; i <= a && minimal; ++i) {
        power = power * k % b;
        if (std::gcd(i, a) == 1 && power < k) minimal = false;
      }
      if (!minimal) continue;
      out.push_back(SemidirectSpec{b, a, k});
    }
  }
  return out;
}

std::vector<FiniteGroup> holder_squarefree(u64 n, u64 cap) {
  std::vector<FiniteGroup> out;
  for (const GroupSpec& spec : holder_squarefree_specs(n)) {
    out.push_back(build(spec, cap));
  }
  return out;
}

}  // namespace rho
