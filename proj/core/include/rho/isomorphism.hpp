#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rho/group.hpp"

namespace rho {

// Cheap isomorphism invariants: equal fingerprints are necessary (not
// sufficient) for isomorphism; distinct fingerprints certify non-isomorphism.
struct GroupFingerprint {
  std::uint64_t order = 1;
  std::map<std::uint64_t, std::uint64_t> spectrum_counts;
  std::uint64_t center_order = 1;
  std::vector<std::uint64_t> class_sizes;  // conjugacy class sizes, ascending

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) =
      default;
};

GroupFingerprint fingerprint(const FiniteGroup& G);

// Exact isomorphism test by generator-image backtracking: candidate images
// are filtered by element order and conjugacy class size, partial
// assignments by pairwise product orders, and every surviving assignment is
// verified to extend to a bijective homomorphism on the full element list.
// Intended for the desk-scale groups this library enumerates.
bool is_isomorphic(const FiniteGroup& G, const FiniteGroup& H);

}  // namespace rho
