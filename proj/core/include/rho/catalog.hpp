#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rho/group.hpp"
#include "rho/group_spec.hpp"

namespace rho {

// Whether a catalog provably lists every isomorphism class of its order.
enum class Completeness {
  Complete,            // certified exhaustive for this order
  PartialDocumented,   // best-effort list; gaps are possible and documented
};

// One isomorphism class in a catalog.  Entries are cheap to copy (shared
// state) and lazy: the permutation group is only enumerated on demand, and
// the order spectrum is computed arithmetically whenever a spec is present.
class CatalogEntry {
 public:
  // Spec-backed entry; the label defaults to render(spec).
  explicit CatalogEntry(GroupSpec spec);
  CatalogEntry(GroupSpec spec, std::string label);
  // Spec-backed entry with a precomputed spectrum (skips recomputation).
  CatalogEntry(GroupSpec spec, std::string label, OrderSpectrum spectrum);
  // Entry realized directly by generating permutations, for groups the
  // spec grammar cannot express.
  CatalogEntry(std::string label, std::uint32_t degree,
               std::vector<Permutation> generators);

  const std::string& label() const;
  // Absent only for entries realized directly by generators.
  const std::optional<GroupSpec>& spec() const;
  // The realized permutation group; memoized after the first call.
  FiniteGroup group() const;
  // Memoized; never enumerates when a spec is present.
  const OrderSpectrum& spectrum() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

struct Catalog {
  std::uint64_t order = 0;
  Completeness completeness = Completeness::PartialDocumented;
  std::vector<CatalogEntry> entries;
};

// The curated table of non-squarefree candidate orders.  Throws
// std::out_of_range for an order outside the table.
const Catalog& curated_catalog(std::uint64_t order);

bool curated_catalog_has(std::uint64_t order);

// Every order in the curated table, ascending.
std::vector<std::uint64_t> curated_catalog_orders();

// Build the group a CatalogRefSpec points to (1-based index into the curated
// catalog of its order).  Throws std::out_of_range for an unknown order,
// std::invalid_argument for an index past the end of that catalog, and
// GroupTooLargeError when the order exceeds the cap.
FiniteGroup resolve_catalog_ref(const CatalogRefSpec& ref,
                                std::uint64_t cap = kDefaultEnumerationCap);

// Catalog lookup for recognition: squarefree orders up to 10,000 get the
// complete metacyclic classification, curated orders get the curated table,
// and every other order gets nullopt (no catalog available).
std::optional<Catalog> catalog_for_order(std::uint64_t order);

}  // namespace rho
