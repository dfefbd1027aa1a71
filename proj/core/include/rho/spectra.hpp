#pragma once

#include <cstdint>

#include "rho/group.hpp"
#include "rho/group_spec.hpp"

namespace rho {

// Closed-form order spectra, independent of element enumeration.  Each
// result satisfies OrderSpectrum::validate().  Cross-checked against the
// enumerative spectra in the test suite.

// s_d = phi(d) for every divisor d of n.
OrderSpectrum spectrum_cyclic(std::uint64_t n);

// Dihedral group of the given even order.
OrderSpectrum spectrum_dihedral(std::uint64_t order);

// PSL(2,q), odd prime q: 1 + the q^2-1 elements of order q + cyclic
// subgroups of orders dividing (q-1)/2 and (q+1)/2 spread over q(q+1)/2
// resp. q(q-1)/2 conjugates.
OrderSpectrum spectrum_psl2(std::uint64_t q);

// C_b : C_a @ k.  For the element x^i y^j with m = a/gcd(a,j) and
// s = 1 + k^j + k^{2j} + ... + k^{(m-1)j} (mod b), the order is
// m * b / gcd(b, i*s).
OrderSpectrum spectrum_metacyclic(std::uint64_t b, std::uint64_t a,
                                  std::uint64_t k);

// Direct product: orders combine by lcm, counts multiply.
OrderSpectrum spectrum_product(const OrderSpectrum& lhs,
                               const OrderSpectrum& rhs);

// Dispatch over a validated spec tree, staying arithmetic wherever a closed
// form exists; catalog references fall back to the referenced entry.
OrderSpectrum spectrum_of_spec(const GroupSpec& spec);

}  // namespace rho
