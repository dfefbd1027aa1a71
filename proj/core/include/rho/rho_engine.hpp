#pragma once

#include <cstdint>
#include <vector>

#include "rho/factored_int.hpp"
#include "rho/group.hpp"
#include "rho/group_spec.hpp"

namespace rho {

// The product of the orders of all elements of a group, kept in factored
// form throughout.  Computed two independent ways: from an order spectrum
// (the defining product), and by closed forms for the structured families.
// The test suite pins both ways against each other exactly.

// prod_t t^{s_t} over the spectrum.  Requires a valid spectrum.
FactoredInt rho_enumerative(const OrderSpectrum& spectrum);

// Cyclic groups: prod_{d | n} d^{phi(d)}.
FactoredInt rho_cyclic(std::uint64_t n);

// One factor of a direct product with pairwise coprime orders.
struct RhoPart {
  FactoredInt rho;
  std::uint64_t order = 1;
};

// Coprime direct products: prod_i rho_i ^ (prod_{j != i} order_j).
// The coprimality precondition is enforced; the formula does not hold
// without it.  An empty list gives 1; a single part passes through.
FactoredInt rho_direct_product(const std::vector<RhoPart>& parts);

// Split extensions P : F where P is a cyclic p-group acting-on side and F
// acts with centralizer C_F(P):  rho(P)^|C_F(P)| * rho(F)^|P|.
// Preconditions (P cyclic of prime-power order, gcd(|P|, |F|) = 1, F
// nontrivial) are the caller's obligation; they are not checkable from the
// arguments alone.
FactoredInt rho_semidirect(const FactoredInt& rho_P, std::uint64_t order_P,
                           const FactoredInt& rho_F,
                           std::uint64_t centralizer_CF_P);

// PSL(2,q) for odd prime q >= 5:
//   rho(Z_{(q-1)/2})^{q(q+1)/2} * rho(Z_{(q+1)/2})^{q(q-1)/2} * q^{q^2-1}.
FactoredInt rho_psl2(std::uint64_t q);

// The exponent set of rho: Exp applied to the factored product.
std::vector<std::uint64_t> exp_rho(const FiniteGroup& G);
std::vector<std::uint64_t> exp_rho(const GroupSpec& spec);

}  // namespace rho
