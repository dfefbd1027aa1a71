#include "rho/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "rho/constructors.hpp"
#include "rho/factored_int.hpp"
#include "rho/primes.hpp"
#include "rho/spectra.hpp"

namespace rho {
namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

}  // namespace

struct CatalogEntry::State {
  std::string label;
  std::optional<GroupSpec> spec;
  std::uint32_t degree = 0;
  std::vector<Permutation> raw_generators;
  std::once_flag group_once;
  std::optional<FiniteGroup> grp;
  std::once_flag spectrum_once;
  std::optional<OrderSpectrum> spectrum;
};

CatalogEntry::CatalogEntry(GroupSpec spec) : state_(std::make_shared<State>()) {
  state_->label = render(spec);
  state_->spec = std::move(spec);
}

CatalogEntry::CatalogEntry(GroupSpec spec, std::string label)
    : state_(std::make_shared<State>()) {
  state_->label = std::move(label);
  state_->spec = std::move(spec);
}

CatalogEntry::CatalogEntry(GroupSpec spec, std::string label,
                           OrderSpectrum spectrum)
    : state_(std::make_shared<State>()) {
  state_->label = std::move(label);
  state_->spec = std::move(spec);
  state_->spectrum = std::move(spectrum);
}

CatalogEntry::CatalogEntry(std::string label, std::uint32_t degree,
                           std::vector<Permutation> generators)
    : state_(std::make_shared<State>()) {
  state_->label = std::move(label);
  state_->degree = degree;
  state_->raw_generators = std::move(generators);
}

const std::string& CatalogEntry::label() const { return state_->label; }

const std::optional<GroupSpec>& CatalogEntry::spec() const {
  return state_->spec;
}

FiniteGroup CatalogEntry::group() const {
  std::call_once(state_->group_once, [this] {
    if (state_->spec.has_value()) {
      state_->grp = build(*state_->spec);
    } else {
      state_->grp = FiniteGroup::enumerate(
          state_->degree, state_->raw_generators, state_->label);
    }
  });
  return *state_->grp;
}

const OrderSpectrum& CatalogEntry::spectrum() const {
  std::call_once(state_->spectrum_once, [this] {
    if (state_->spectrum.has_value()) return;  // preset at construction
    if (state_->spec.has_value()) {
      state_->spectrum = spectrum_of_spec(*state_->spec);
    } else {
      state_->spectrum = group().spectrum();
    }
  });
  return *state_->spectrum;
}

namespace {

// ---------------------------------------------------------------------------
// Helpers

std::string spectrum_key(const OrderSpectrum& s) {
  std::ostringstream out;
  for (const auto& [order, count] : s.counts) {
    out << order << ':' << count << '|';
  }
  return out.str();
}

bool is_squarefree(u64 n) {
  const FactoredInt f = factor(n);
  for (const auto& [p, e] : f.factors()) {
    if (e > 1) return false;
  }
  return true;
}

std::vector<u64> sorted_divisors(u64 n) {
  std::vector<u64> divs{1};
  const FactoredInt f = factor(n);
  for (const auto& [p, e] : f.factors()) {
    const std::size_t count = divs.size();
    u64 pe = 1;
    for (u64 i = 0; i < e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Shorthand spec builders for the literal tables.
GroupSpec C(u64 n) { return CyclicSpec{n}; }
GroupSpec D(u64 order) { return DihedralSpec{order}; }
GroupSpec PSL(u64 q) { return Psl2Spec{q}; }
GroupSpec Sd(u64 n, u64 m, u64 k) { return SemidirectSpec{n, m, k}; }
GroupSpec X(std::vector<GroupSpec> factors) {
  return DirectSpec{std::move(factors)};
}

Permutation perm(std::vector<u32> images) {
  return Permutation(std::move(images));
}

// ---------------------------------------------------------------------------
// Literal complete tables

Catalog complete_order_4() {
  Catalog cat{4, Completeness::Complete, {}};
  cat.entries.emplace_back(C(4));
  cat.entries.emplace_back(X({C(2), C(2)}));
  return cat;
}

Catalog complete_order_60() {
  Catalog cat{60, Completeness::Complete, {}};
  cat.entries.emplace_back(C(60));
  cat.entries.emplace_back(X({C(2), C(30)}));
  cat.entries.emplace_back(PSL(5));
  cat.entries.emplace_back(D(60));
  cat.entries.emplace_back(Sd(15, 4, 14));
  cat.entries.emplace_back(Sd(15, 4, 2));
  cat.entries.emplace_back(Sd(5, 12, 2));
  cat.entries.emplace_back(Sd(5, 12, 4));
  cat.entries.emplace_back(X({C(5), PSL(3)}));
  cat.entries.emplace_back(X({C(6), D(10)}));
  cat.entries.emplace_back(X({C(10), D(6)}));
  cat.entries.emplace_back(X({D(6), D(10)}));
  cat.entries.emplace_back(X({C(5), Sd(3, 4, 2)}));
  return cat;
}

// The one group of order 84 outside the spec grammar: the kernel is a
// 7-cycle a on points {0..6}; the complement is the even permutation group
// on {7,8,9,10} generated by v=(7 8)(9 10) (acting trivially on the kernel)
// and t=(7 8 9) (squaring the kernel: t a t^-1 = a^2, consistent because
// 2^3 = 8 = 1 mod 7 and the complement modulo its normal four-group is a
// 3-cycle).
CatalogEntry order_84_exceptional() {
  const Permutation a = perm({1, 2, 3, 4, 5, 6, 0, 7, 8, 9, 10});
  const Permutation v = perm({0, 1, 2, 3, 4, 5, 6, 8, 7, 10, 9});
  const Permutation t = perm({0, 2, 4, 6, 1, 3, 5, 8, 9, 7, 10});
  return CatalogEntry("C7 : A4", 11, {a, v, t});
}

Catalog complete_order_84() {
  Catalog cat{84, Completeness::Complete, {}};
  cat.entries.emplace_back(C(84));
  cat.entries.emplace_back(Sd(7, 12, 3));
  cat.entries.emplace_back(Sd(7, 12, 2));
  cat.entries.emplace_back(Sd(7, 12, 6));
  cat.entries.emplace_back(X({C(2), C(42)}));
  cat.entries.emplace_back(X({C(6), D(14)}));
  cat.entries.emplace_back(X({C(2), C(2), Sd(7, 3, 2)}));
  cat.entries.emplace_back(X({C(2), Sd(7, 6, 3)}));
  cat.entries.emplace_back(X({C(7), PSL(3)}));
  cat.entries.push_back(order_84_exceptional());
  cat.entries.emplace_back(X({C(7), D(12)}));
  cat.entries.emplace_back(D(84));
  cat.entries.emplace_back(X({D(6), D(14)}));
  cat.entries.emplace_back(X({C(7), Sd(3, 4, 2)}));
  cat.entries.emplace_back(Sd(21, 4, 20));
  return cat;
}

// ---------------------------------------------------------------------------
// Generated partial tables

class PartialBuilder {
 public:
  PartialBuilder(u64 order, const std::map<u64, Catalog>& built_so_far)
      : order_(order), built_(built_so_far) {
    catalog_.order = order;
    catalog_.completeness = Completeness::PartialDocumented;
  }

  Catalog take() && { return std::move(catalog_); }

  void add(CatalogEntry entry) {
    const std::string key = spectrum_key(entry.spectrum());
    if (seen_.insert(key).second) catalog_.entries.push_back(std::move(entry));
  }

  // Projective special linear groups whose order matches.
  void add_psl2() {
    for (u64 q = 3; q * (q * q - 1) / 2 <= order_; q += 2) {
      if (q * (q * q - 1) / 2 == order_ && is_prime(q)) {
        add(CatalogEntry(PSL(q)));
      }
    }
  }

  // The cyclic group plus every split metacyclic extension C_b : C_a in
  // lowest terms: the twist must move every prime component of the kernel
  // that could instead be absorbed into a cyclic complement, and must be
  // minimal in its equivalence orbit {k^i mod b : gcd(i, a) = 1}.
  void add_metacyclic() {
    add(CatalogEntry(C(order_)));
    for (u64 b : sorted_divisors(order_)) {
      if (b == 1 || b == order_) continue;
      const u64 a = order_ / b;
      const FactoredInt bf = factor(b);
      for (u64 k = 2; k < b; ++k) {
        if (std::gcd(k, b) != 1) continue;
        if (powmod(k, a, b) != 1) continue;
        bool lowest_terms = true;
        for (const auto& [p, e] : bf.factors()) {
          u64 pe = 1;
          for (u64 i = 0; i < e; ++i) pe *= p;
          if (a % p != 0 && k % pe == 1) {
            lowest_terms = false;
            break;
          }
        }
        if (!lowest_terms) continue;
        bool canonical = true;
        u64 power = k;
        for (u64 i = 2; i <= a; ++i) {
          power = power * k % b;
          if (std::gcd(i, a) == 1 && power < k) {
            canonical = false;
            break;
          }
        }
        if (!canonical) continue;
        add(CatalogEntry(Sd(b, a, k)));
      }
    }
  }

  // Direct products over factorizations of the order into admissible parts
  // (squarefree, or an order with its own complete table), parts
  // nonincreasing so each unordered factorization appears once.
  void add_products() {
    std::vector<u64> parts;
    descend(order_, order_, parts);
  }

 private:
  struct Factor {
    GroupSpec spec;
    std::string label;
    OrderSpectrum spectrum;
  };

  bool admissible_part(u64 d) const {
    if (d < 2) return false;
    if (is_squarefree(d)) return true;
    return built_.count(d) > 0 &&
           built_.at(d).completeness == Completeness::Complete;
  }

  std::vector<Factor> factors_of_order(u64 part) const {
    std::vector<Factor> out;
    const auto complete_it = built_.find(part);
    if (complete_it != built_.end() &&
        complete_it->second.completeness == Completeness::Complete) {
      const Catalog& cat = complete_it->second;
      for (std::size_t i = 0; i < cat.entries.size(); ++i) {
        const CatalogEntry& e = cat.entries[i];
        GroupSpec spec = e.spec().has_value()
                             ? *e.spec()
                             : GroupSpec(CatalogRefSpec{part,
                                                        static_cast<u64>(i + 1)});
        out.push_back({std::move(spec), e.label(), e.spectrum()});
      }
      return out;
    }
    for (const GroupSpec& spec : holder_squarefree_specs(part)) {
      out.push_back({spec, render(spec), spectrum_of_spec(spec)});
    }
    return out;
  }

  static std::string joined_label(const std::vector<Factor>& tuple) {
    std::string label;
    for (const Factor& f : tuple) {
      if (!label.empty()) label += " x ";
      if (f.label.find(' ') != std::string::npos) {
        label += "(" + f.label + ")";
      } else {
        label += f.label;
      }
    }
    return label;
  }

  void emit_tuples(const std::vector<std::vector<Factor>>& lists,
                   std::size_t at, std::vector<Factor>& tuple) {
    if (at == lists.size()) {
      std::vector<GroupSpec> specs;
      OrderSpectrum spectrum = tuple.front().spectrum;
      for (const Factor& f : tuple) specs.push_back(f.spec);
      for (std::size_t i = 1; i < tuple.size(); ++i) {
        spectrum = spectrum_product(spectrum, tuple[i].spectrum);
      }
      add(CatalogEntry(DirectSpec{std::move(specs)}, joined_label(tuple),
                       std::move(spectrum)));
      return;
    }
    for (const Factor& f : lists[at]) {
      tuple.push_back(f);
      emit_tuples(lists, at + 1, tuple);
      tuple.pop_back();
    }
  }

  void descend(u64 remaining, u64 max_part, std::vector<u64>& parts) {
    if (remaining == 1) {
      if (parts.size() < 2) return;
      std::vector<std::vector<Factor>> lists;
      for (u64 part : parts) lists.push_back(factors_of_order(part));
      std::vector<Factor> tuple;
      emit_tuples(lists, 0, tuple);
      return;
    }
    std::vector<u64> divs = sorted_divisors(remaining);
    for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
      const u64 d = *it;
      if (d > max_part || !admissible_part(d)) continue;
      parts.push_back(d);
      descend(remaining / d, d, parts);
      parts.pop_back();
    }
  }

  u64 order_;
  const std::map<u64, Catalog>& built_;
  Catalog catalog_;
  std::set<std::string> seen_;
};

Catalog make_partial(u64 order, const std::map<u64, Catalog>& built_so_far) {
  PartialBuilder builder(order, built_so_far);
  builder.add_psl2();
  builder.add_metacyclic();
  builder.add_products();
  return std::move(builder).take();
}

std::map<u64, Catalog> build_registry() {
  std::map<u64, Catalog> reg;
  reg.emplace(4, complete_order_4());
  reg.emplace(60, complete_order_60());
  reg.emplace(84, complete_order_84());
  for (u64 order : {168ull, 420ull, 660ull, 780ull, 1020ull, 1092ull, 1140ull,
                    1380ull, 1740ull, 1860ull}) {
    reg.emplace(order, make_partial(order, reg));
  }
  return reg;
}

const std::map<u64, Catalog>& registry() {
  static const std::map<u64, Catalog> reg = build_registry();
  return reg;
}

}  // namespace

const Catalog& curated_catalog(std::uint64_t order) {
  const auto& reg = registry();
  const auto it = reg.find(order);
  if (it == reg.end()) {
    throw std::out_of_range("no curated catalog for order " +
                            std::to_string(order));
  }
  return it->second;
}

bool curated_catalog_has(std::uint64_t order) {
  return registry().count(order) > 0;
}

std::vector<std::uint64_t> curated_catalog_orders() {
  std::vector<u64> orders;
  for (const auto& [order, cat] : registry()) orders.push_back(order);
  return orders;
}

FiniteGroup resolve_catalog_ref(const CatalogRefSpec& ref, std::uint64_t cap) {
  const Catalog& cat = curated_catalog(ref.order);
  if (ref.index == 0 || ref.index > cat.entries.size()) {
    throw std::invalid_argument(
        "catalog index " + std::to_string(ref.index) +
        " out of range for order " + std::to_string(ref.order) + " (" +
        std::to_string(cat.entries.size()) + " entries)");
  }
  if (ref.order > cap) throw GroupTooLargeError(cap);
  return cat.entries[ref.index - 1].group();
}

std::optional<Catalog> catalog_for_order(std::uint64_t order) {
  if (order == 0) throw std::domain_error("group order must be positive");
  if (order <= 10'000 && is_squarefree(order)) {
    Catalog cat{order, Completeness::Complete, {}};
    for (const GroupSpec& spec : holder_squarefree_specs(order)) {
      cat.entries.emplace_back(spec);
    }
    return cat;
  }
  if (curated_catalog_has(order)) return curated_catalog(order);
  return std::nullopt;
}

}  // namespace rho
