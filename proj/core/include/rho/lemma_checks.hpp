#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rho/group.hpp"

namespace rho {

// Outcome of one structural check on a group (or on its order spectrum).
// `lemma_id` names the rule that ran; a failed rule always carries a
// `witness` describing the offending prime, exponent, or divisor, so that
// reports can cite exactly which rule eliminated which candidate.
struct CheckOutcome {
  std::string lemma_id;
  bool holds = true;
  // False when no prime of the group order met the rule's precondition, so
  // the rule had nothing to examine (holds stays true in that case).
  bool applicable = true;
  std::optional<std::string> witness;
};

// "root-count": for every divisor m of |G|, m divides |{x : x^m = 1}| —
// Frobenius' theorem on the number of m-th roots of the identity.  The
// solution-set size is the sum of s_d over divisors d of m.
CheckOutcome check_root_counts(const OrderSpectrum& spectrum);
CheckOutcome check_root_counts(const FiniteGroup& G);

// "totient-count": phi(t) divides s_t for every occurring element order t,
// because the cyclic subgroups of order t partition those elements into
// classes of phi(t) generators each.
CheckOutcome check_totient_counts(const OrderSpectrum& spectrum);
CheckOutcome check_totient_counts(const FiniteGroup& G);

// "order-bound": |G| <= 1 + (sum of all exponents of the element-order
// product), with equality exactly when every nonidentity element has prime
// order.  Both the bound and the equality characterization are checked.
CheckOutcome check_order_bound(const OrderSpectrum& spectrum);
CheckOutcome check_order_bound(const FiniteGroup& G);

// "prime-count": the number of distinct primes dividing |G| is at least the
// number of distinct exponents of the element-order product.
CheckOutcome check_pi_lower_bound(const OrderSpectrum& spectrum);
CheckOutcome check_pi_lower_bound(const FiniteGroup& G);

// "coprime-part": writing |G| = p^a * m with p not dividing m, m divides
// the exponent of p in the element-order product, for every prime p | |G|.
CheckOutcome check_coprime_part_divides(const OrderSpectrum& spectrum);
CheckOutcome check_coprime_part_divides(const FiniteGroup& G);

// "totient-divides": p - 1 divides the exponent of p in the element-order
// product, for every prime p | |G|.
CheckOutcome check_phi_divides(const OrderSpectrum& spectrum);
CheckOutcome check_phi_divides(const FiniteGroup& G);

// "isolated-prime": when p divides |G| exactly once, p does not divide the
// exponent of p in the element-order product.  Primes with higher
// multiplicity are skipped; if none qualifies the outcome is marked not
// applicable.
CheckOutcome check_p_not_divides(const OrderSpectrum& spectrum);
CheckOutcome check_p_not_divides(const FiniteGroup& G);

// "parity": in the element-order product, the exponent of every odd prime
// of |G| is even, and the exponent of 2 (when 2 divides |G|) is odd.
CheckOutcome check_parity(const OrderSpectrum& spectrum);
CheckOutcome check_parity(const FiniteGroup& G);

// All of the above, in a fixed order, for catalog sweeps and reports.
std::vector<CheckOutcome> run_all_checks(const OrderSpectrum& spectrum);
std::vector<CheckOutcome> run_all_checks(const FiniteGroup& G);

// Union of the prime divisors of the given exponents, sorted ascending.
// Every prime dividing the order of a group divides some member of the
// group's exponent set, so this computes a superset of pi(G) from exponent
// data alone.  Throws std::invalid_argument on an empty set.
std::vector<std::uint64_t> prime_support_of_expset(
    const std::vector<std::uint64_t>& exponents);

// True iff every prime-power component q^a of n satisfies q^a = 1 (mod p):
// the classical constraint on the number of Sylow p-subgroups of a finite
// solvable group.  A count that fails this test cannot occur in a solvable
// group.  Throws std::domain_error for n = 0 and std::invalid_argument for
// non-prime p.  Exposed for analysis; the default recognition pipeline does
// not consult it.
bool check_hall_condition(std::uint64_t n, std::uint64_t p);

}  // namespace rho
