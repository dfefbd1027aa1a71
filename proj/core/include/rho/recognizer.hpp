#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rho/catalog.hpp"

namespace rho {

// A set of distinct positive integers, kept sorted ascending: the exponent
// set of a factored value, and the input of the recognition procedure.
struct ExpSet {
  std::vector<std::uint64_t> exponents;

  // Sorts, collapses duplicates, and validates (nonempty, no zeros).
  // Throws std::invalid_argument on violation.
  static ExpSet of(std::vector<std::uint64_t> values);

  friend bool operator==(const ExpSet&, const ExpSet&) = default;
};

// One admissible way to hand every prime of a candidate prime set the
// exponent it contributes to the element-order product.  Pairs are
// (prime, exponent), ascending by prime; distinct primes may share an
// exponent value, and together they cover the whole target set.
struct ExponentAssignment {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> by_prime;

  friend bool operator==(const ExponentAssignment&,
                         const ExponentAssignment&) = default;
};

enum class BranchStatus {
  Eliminated,  // a named rule (or exhaustive table) rules the branch out
  Matched,     // at least one catalog group realizes the target exactly
  Unresolved,  // survives every rule but cannot be searched exhaustively
};

struct MatchedGroup {
  std::uint64_t order = 0;
  std::string label;  // catalog label at that order

  friend bool operator==(const MatchedGroup&, const MatchedGroup&) = default;
};

// The fate of one candidate group order inside a branch.
struct OrderVerdict {
  std::uint64_t order = 0;
  std::vector<ExponentAssignment> assignments;  // admissible at this order
  BranchStatus status = BranchStatus::Unresolved;
  std::string lemma_id;  // set when status == Eliminated
  std::string witness;   // set when status == Eliminated
  std::vector<MatchedGroup> matched;            // set when status == Matched
  std::optional<Completeness> catalog;  // nullopt: no catalog at this order
  std::string note;  // citation / explanation for partial or absent catalogs
};

// One candidate prime set pi (a subset of the support E with
// |pi| >= |target|), with its candidate orders and their verdicts.
struct Branch {
  std::vector<std::uint64_t> pi;
  std::vector<std::uint64_t> candidate_orders;
  BranchStatus status = BranchStatus::Eliminated;
  // Set when the branch dies before per-order analysis (prime-level rule).
  std::string lemma_id;
  std::string witness;
  std::vector<OrderVerdict> orders;  // per-order detail otherwise
};

struct RecognitionReport {
  ExpSet target;
  std::vector<std::uint64_t> support;  // E: primes dividing some exponent
  std::optional<std::uint64_t> known_order;
  std::vector<Branch> branches;  // ordered by (|pi|, pi lexicographic)
  // Completeness flag for every order whose catalog was consulted.
  std::map<std::uint64_t, Completeness> catalog_completeness;
  // Every matched group across all branches, deduplicated, ordered by
  // (order, label).  Each one's recomputed exponent set equals the target.
  std::vector<MatchedGroup> matched;
  BranchStatus overall = BranchStatus::Eliminated;
  std::vector<std::string> notes;  // global remarks (e.g. empty support)
};

// The recognition procedure: from a target exponent set (and optionally a
// known group order), derive the support E, the candidate prime sets, the
// candidate orders, and the admissible exponent assignments via the
// divisibility rules; then match surviving branches against the group
// catalogs by recomputing exponent sets.  Impossible inputs produce a
// report with empty branches, not an exception.
RecognitionReport recognize(
    const ExpSet& target,
    std::optional<std::uint64_t> known_order = std::nullopt);

// All admissible assignments of target values to the primes of pi for a
// group order of the given shape (prime -> multiplicity).  Every
// assignment satisfies the parity, totient, coprime-part, and
// isolated-prime rules and covers the whole target set; an empty result
// means the (pi, shape) combination is eliminated.
// Requires |pi| >= |target| and shape defined exactly on pi.
std::vector<ExponentAssignment> assign_exponents(
    const ExpSet& target, const std::vector<std::uint64_t>& pi,
    const std::map<std::uint64_t, std::uint64_t>& order_shape);

// Named two-parameter families with closed-form exponent sets.
struct Psl25xZpFamily {
  std::uint64_t p = 0;  // prime, 5 < p <= 31
};
struct Z2qrFamily {
  std::uint64_t q = 0;  // distinct odd primes with q*r <= 500
  std::uint64_t r = 0;
};
using FamilyTarget = std::variant<Psl25xZpFamily, Z2qrFamily>;

// The family's exponent set: {15p, 20p, 24p, 60(p-1)} resp.
// {qr, 2r(q-1), 2q(r-1)}.  Throws std::invalid_argument on parameters
// outside the documented bounds.
ExpSet family_exp_set(const FamilyTarget& family);

// recognize() on the instantiated family target.
RecognitionReport recognize_family(const FamilyTarget& family);

}  // namespace rho
