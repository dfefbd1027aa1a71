#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rho/permutation.hpp"

namespace rho {

inline constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

// Raised when a breadth-first closure would exceed the enumeration cap.
class GroupTooLargeError : public std::runtime_error {
 public:
  explicit GroupTooLargeError(std::uint64_t cap)
      : std::runtime_error("group too large: enumeration exceeded the cap of " +
                           std::to_string(cap) + " elements"),
        cap_(cap) {}
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

// Element-order histogram of a finite group: counts[t] = s_t, the number of
// elements of order exactly t.
struct OrderSpectrum {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t group_order = 1;

  // Enforces: counts[1] == 1, every order divides group_order, every count
  // is >= 1, and the counts sum to group_order.  Throws std::logic_error.
  void validate() const;

  friend bool operator==(const OrderSpectrum&, const OrderSpectrum&) = default;
};

// A finite permutation group with full element enumeration.  Cheap to copy
// (shared immutable state); element list, index, and spectrum are computed
// on first use and memoized.  Thread-safe: concurrent first access is
// serialized internally, and everything is immutable afterwards.
class FiniteGroup {
 public:
  // Enumerates immediately via deterministic breadth-first closure over the
  // generators (by generator index); throws GroupTooLargeError past the cap.
  // The degree is explicit so an empty generator list still denotes the
  // trivial group on a definite point set.
  static FiniteGroup enumerate(std::uint32_t degree,
                               std::vector<Permutation> generators,
                               std::string label,
                               std::uint64_t cap = kDefaultEnumerationCap);

  // Same group, but enumeration is postponed until first use.
  static FiniteGroup deferred(std::uint32_t degree,
                              std::vector<Permutation> generators,
                              std::string label,
                              std::uint64_t cap = kDefaultEnumerationCap);

  const std::string& label() const;
  std::uint32_t degree() const;
  const std::vector<Permutation>& generators() const;
  std::uint64_t enumeration_cap() const;

  // Complete element list in breadth-first order; elements()[0] is the
  // identity.  Triggers enumeration.
  const std::vector<Permutation>& elements() const;
  std::uint64_t order() const;
  const OrderSpectrum& spectrum() const;
  bool contains(const Permutation& g) const;

  // The generator word reconstructing elements()[i]: composing
  // generators()[w[0]] ∘ generators()[w[1]] ∘ ... yields the element
  // (empty word = identity).
  std::vector<std::uint32_t> word_for(std::size_t element_index) const;

 private:
  struct Impl;
  explicit FiniteGroup(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

// Free-function spellings used throughout the checks.
OrderSpectrum order_spectrum(const FiniteGroup& G);

// |L_k(G)| = #{g : g^k = 1} = Σ_{d | k} s_d, read off the spectrum.
std::uint64_t count_kth_roots(const FiniteGroup& G, std::uint64_t k);
std::uint64_t count_kth_roots(const OrderSpectrum& spectrum, std::uint64_t k);

// Number of elements of G commuting with every member of S.
// Every member of S must itself lie in G (std::invalid_argument otherwise).
std::uint64_t centralizer_order(const FiniteGroup& G,
                                const std::vector<Permutation>& S);

}  // namespace rho
