#pragma once

#include <cstdint>
#include <vector>

#include "rho/group.hpp"
#include "rho/group_spec.hpp"

namespace rho {

// Named constructions.  Every builder enumerates eagerly and checks that the
// realized order matches the predicted one.

FiniteGroup cyclic(std::uint64_t n, std::uint64_t cap = kDefaultEnumerationCap);

// The dihedral group of the given (even) total order 2n, on n points for
// 2n >= 6; the degenerate D2 and D4 are realized as C2 and the Klein
// four-group.
FiniteGroup dihedral(std::uint64_t order,
                     std::uint64_t cap = kDefaultEnumerationCap);

// PSL(2,q) for odd prime q, acting on the q+1 points of the projective line
// via z -> z+1 and z -> -1/z.
FiniteGroup psl2(std::uint64_t q, std::uint64_t cap = kDefaultEnumerationCap);

// C_n : C_m with the complement acting by x -> x^k.  Realized on n+m points
// (translation block + complement cycle); falls back to the regular
// representation on n*m points in the (never observed) event that the small
// realization is not faithful.
FiniteGroup semidirect_cyclic(std::uint64_t n, std::uint64_t m,
                              std::uint64_t k,
                              std::uint64_t cap = kDefaultEnumerationCap);

// Block-diagonal direct product (degree = sum of degrees).
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           std::uint64_t cap = kDefaultEnumerationCap);

// Realizes an arbitrary (validated) spec tree.
FiniteGroup build(const GroupSpec& spec,
                  std::uint64_t cap = kDefaultEnumerationCap);

// All groups of squarefree order n (n <= 10,000), exactly one per
// isomorphism class, via the classical parameterization: C_b : C_a with
// gcd(k,b) = 1, k^a ≡ 1 (mod b), k ≢ 1 (mod p) for every prime p | b, and
// k minimal in its power orbit {k^i : gcd(i,a) = 1}.  b = 1 contributes the
// cyclic group.  Deterministic order: b ascending, then twist ascending.
// Rejects non-squarefree n with a message pointing at the curated catalog.
std::vector<GroupSpec> holder_squarefree_specs(std::uint64_t n);
std::vector<FiniteGroup> holder_squarefree(
    std::uint64_t n, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace rho
