#include "rho/lemma_checks.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rho/factored_int.hpp"
#include "rho/primes.hpp"
#include "rho/rho_engine.hpp"

namespace rho {
namespace {

using u64 = std::uint64_t;

u64 total_exponent_sum(const FactoredInt& n) {
  u64 total = 0;
  for (const PrimePower& pp : n.factors()) total += pp.exponent;
  return total;
}

u64 p_part(const FactoredInt& order, u64 p) {
  u64 part = 1;
  for (u64 i = 0; i < exp_of(order, p); ++i) part *= p;
  return part;
}

CheckOutcome fail(std::string lemma_id, std::string witness) {
  CheckOutcome outcome;
  outcome.lemma_id = std::move(lemma_id);
  outcome.holds = false;
  outcome.witness = std::move(witness);
  return outcome;
}

CheckOutcome pass(std::string lemma_id, bool applicable = true) {
  CheckOutcome outcome;
  outcome.lemma_id = std::move(lemma_id);
  outcome.applicable = applicable;
  return outcome;
}

std::vector<u64> sorted_divisors(u64 n) {
  std::vector<u64> divs;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    divs.push_back(d);
    if (d != n / d) divs.push_back(n / d);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

CheckOutcome check_root_counts(const OrderSpectrum& spectrum) {
  static const std::string id = "root-count";
  spectrum.validate();
  for (const u64 m : sorted_divisors(spectrum.group_order)) {
    u64 roots = 0;
    for (const auto& [t, count] : spectrum.counts) {
      if (m % t == 0) roots += count;
    }
    if (roots % m != 0) {
      std::ostringstream oss;
      oss << "m=" << m << ": " << m << " does not divide the " << roots
          << " solutions of x^" << m << " = 1";
      return fail(id, oss.str());
    }
  }
  return pass(id);
}

CheckOutcome check_totient_counts(const OrderSpectrum& spectrum) {
  static const std::string id = "totient-count";
  spectrum.validate();
  for (const auto& [t, count] : spectrum.counts) {
    const u64 phi = euler_phi(t);
    if (count % phi != 0) {
      std::ostringstream oss;
      oss << "t=" << t << ": phi(" << t << ") = " << phi
          << " does not divide the count " << count;
      return fail(id, oss.str());
    }
  }
  return pass(id);
}

CheckOutcome check_order_bound(const OrderSpectrum& spectrum) {
  static const std::string id = "order-bound";
  const u64 order = spectrum.group_order;
  const u64 total = total_exponent_sum(rho_enumerative(spectrum));
  if (order > total + 1) {
    std::ostringstream oss;
    oss << "group order " << order << " exceeds 1 + " << total
        << ", the bound from the element-order product";
    return fail(id, oss.str());
  }
  bool all_prime = true;
  u64 composite_order = 0;
  for (const auto& [t, count] : spectrum.counts) {
    if (t > 1 && !is_prime(t)) {
      all_prime = false;
      composite_order = t;
      break;
    }
  }
  const bool equality = (order == total + 1);
  if (equality && !all_prime) {
    std::ostringstream oss;
    oss << "bound met with equality although an element of composite order "
        << composite_order << " exists";
    return fail(id, oss.str());
  }
  if (!equality && all_prime) {
    std::ostringstream oss;
    oss << "every nonidentity element has prime order, yet " << order
        << " < 1 + " << total;
    return fail(id, oss.str());
  }
  return pass(id);
}

CheckOutcome check_pi_lower_bound(const OrderSpectrum& spectrum) {
  static const std::string id = "prime-count";
  const std::size_t pi_size = primes(factor(spectrum.group_order)).size();
  const std::size_t exp_size = exp_set(rho_enumerative(spectrum)).size();
  if (pi_size < exp_size) {
    std::ostringstream oss;
    oss << "only " << pi_size << " primes divide the group order, but the "
        << "element-order product has " << exp_size << " distinct exponents";
    return fail(id, oss.str());
  }
  return pass(id);
}

CheckOutcome check_coprime_part_divides(const OrderSpectrum& spectrum) {
  static const std::string id = "coprime-part";
  const FactoredInt order = factor(spectrum.group_order);
  const FactoredInt rho = rho_enumerative(spectrum);
  for (const PrimePower& pp : order.factors()) {
    const u64 m = spectrum.group_order / p_part(order, pp.prime);
    const u64 exponent = exp_of(rho, pp.prime);
    if (exponent % m != 0) {
      std::ostringstream oss;
      oss << "p=" << pp.prime << ": the coprime part " << m
          << " of the group order does not divide the exponent " << exponent;
      return fail(id, oss.str());
    }
  }
  return pass(id);
}

CheckOutcome check_phi_divides(const OrderSpectrum& spectrum) {
  static const std::string id = "totient-divides";
  const FactoredInt rho = rho_enumerative(spectrum);
  for (const u64 p : primes(factor(spectrum.group_order)))  {
    const u64 exponent = exp_of(rho, p);
    if (exponent % (p - 1) != 0) {
      std::ostringstream oss;
      oss << "p=" << p << ": " << (p - 1) << " does not divide the exponent "
          << exponent;
      return fail(id, oss.str());
    }
  }
  return pass(id);
}

CheckOutcome check_p_not_divides(const OrderSpectrum& spectrum) {
  static const std::string id = "isolated-prime";
  const FactoredInt order = factor(spectrum.group_order);
  const FactoredInt rho = rho_enumerative(spectrum);
  bool examined = false;
  for (const PrimePower& pp : order.factors()) {
    if (pp.exponent != 1) continue;  // rule speaks only of multiplicity one
    examined = true;
    const u64 exponent = exp_of(rho, pp.prime);
    if (exponent % pp.prime == 0) {
      std::ostringstream oss;
      oss << "p=" << pp.prime << " divides the group order exactly once, yet "
          << "also divides the exponent " << exponent;
      return fail(id, oss.str());
    }
  }
  return pass(id, /*applicable=*/examined);
}

CheckOutcome check_parity(const OrderSpectrum& spectrum) {
  static const std::string id = "parity";
  const FactoredInt rho = rho_enumerative(spectrum);
  for (const u64 p : primes(factor(spectrum.group_order))) {
    const u64 exponent = exp_of(rho, p);
    if (p == 2 && exponent % 2 == 0) {
      std::ostringstream oss;
      oss << "the exponent " << exponent << " of 2 is even";
      return fail(id, oss.str());
    }
    if (p != 2 && exponent % 2 != 0) {
      std::ostringstream oss;
      oss << "p=" << p << ": the exponent " << exponent
          << " of an odd prime is odd";
      return fail(id, oss.str());
    }
  }
  return pass(id);
}

std::vector<CheckOutcome> run_all_checks(const OrderSpectrum& spectrum) {
  return {
      check_root_counts(spectrum),    check_totient_counts(spectrum),
      check_order_bound(spectrum),    check_pi_lower_bound(spectrum),
      check_coprime_part_divides(spectrum), check_phi_divides(spectrum),
      check_p_not_divides(spectrum),  check_parity(spectrum),
  };
}

CheckOutcome check_root_counts(const FiniteGroup& G) {
  return check_root_counts(G.spectrum());
}
CheckOutcome check_totient_counts(const FiniteGroup& G) {
  return check_totient_counts(G.spectrum());
}
CheckOutcome check_order_bound(const FiniteGroup& G) {
  return check_order_bound(G.spectrum());
}
CheckOutcome check_pi_lower_bound(const FiniteGroup& G) {
  return check_pi_lower_bound(G.spectrum());
}
CheckOutcome check_coprime_part_divides(const FiniteGroup& G) {
  return check_coprime_part_divides(G.spectrum());
}
CheckOutcome check_phi_divides(const FiniteGroup& G) {
  return check_phi_divides(G.spectrum());
}
CheckOutcome check_p_not_divides(const FiniteGroup& G) {
  return check_p_not_divides(G.spectrum());
}
CheckOutcome check_parity(const FiniteGroup& G) {
  return check_parity(G.spectrum());
}
std::vector<CheckOutcome> run_all_checks(const FiniteGroup& G) {
  return run_all_checks(G.spectrum());
}

std::vector<std::uint64_t> prime_support_of_expset(
    const std::vector<std::uint64_t>& exponents) {
  if (exponents.empty()) {
    throw std::invalid_argument(
        "prime_support_of_expset: the exponent set must be nonempty");
  }
  std::set<u64> support;
  for (const u64 e : exponents) {
    for (const u64 p : primes(factor(e))) support.insert(p);
  }
  return {support.begin(), support.end()};
}

bool check_hall_condition(std::uint64_t n, std::uint64_t p) {
  if (n == 0) {
    throw std::domain_error("check_hall_condition: n must be positive");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("check_hall_condition: p must be prime");
  }
  const FactoredInt n_factored = factor(n);
  for (const PrimePower& pp : n_factored.factors()) {
    u64 component = 1;
    for (u64 i = 0; i < pp.exponent; ++i) {
      component = static_cast<u64>(
          static_cast<unsigned __int128>(component) * pp.prime % p);
    }
    if (component != 1) return false;
  }
  return true;
}

}  // namespace rho
