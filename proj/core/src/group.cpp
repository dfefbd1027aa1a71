#include "rho/group.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>

#include "rho/checked_arith.hpp"

namespace rho {

void OrderSpectrum::validate() const {
  const auto it = counts.find(1);
  if (it == counts.end() || it->second != 1) {
    throw std::logic_error("OrderSpectrum: must contain exactly one identity");
  }
  std::uint64_t total = 0;
  for (const auto& [t, s] : counts) {
    if (t == 0 || s == 0) {
      throw std::logic_error("OrderSpectrum: zero order or empty count stored");
    }
    if (group_order % t != 0) {
      throw std::logic_error("OrderSpectrum: order " + std::to_string(t) +
                             " does not divide the group order " +
                             std::to_string(group_order));
    }
    total = checked_add(total, s);
  }
  if (total != group_order) {
    throw std::logic_error("OrderSpectrum: counts sum to " +
                           std::to_string(total) + ", expected " +
                           std::to_string(group_order));
  }
}

struct FiniteGroup::Impl {
  std::uint32_t degree = 1;
  std::vector<Permutation> generators;
  std::string label;
  std::uint64_t cap = kDefaultEnumerationCap;

  std::once_flag enumerate_once;
  std::vector<Permutation> elements;
  // parent[i] = (index of parent element, generator index) for BFS word
  // reconstruction; parent[0] is unused (identity).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> parents;
  std::unordered_map<Permutation, std::uint32_t, PermHash> index;
  std::exception_ptr enumerate_error;

  std::once_flag spectrum_once;
  std::optional<OrderSpectrum> spectrum;

  void ensure_enumerated() {
    std::call_once(enumerate_once, [this] {
      try {
        elements.push_back(Permutation::identity(degree));
        parents.emplace_back(0u, 0u);
        index.emplace(elements[0], 0u);
        for (std::size_t i = 0; i < elements.size(); ++i) {
          const Permutation current = elements[i];  // copy: vector may grow
          for (std::uint32_t j = 0;
               j < static_cast<std::uint32_t>(generators.size()); ++j) {
            Permutation next = current.compose(generators[j]);
            if (index.find(next) != index.end()) continue;
            if (elements.size() >= cap) throw GroupTooLargeError(cap);
            const auto pos = static_cast<std::uint32_t>(elements.size());
            index.emplace(next, pos);
            elements.push_back(std::move(next));
            parents.emplace_back(static_cast<std::uint32_t>(i), j);
          }
        }
      } catch (...) {
        elements.clear();
        parents.clear();
        index.clear();
        enumerate_error = std::current_exception();
      }
    });
    if (enumerate_error) std::rethrow_exception(enumerate_error);
  }

  void ensure_spectrum() {
    ensure_enumerated();
    std::call_once(spectrum_once, [this] {
      OrderSpectrum s;
      s.group_order = elements.size();
      for (const Permutation& g : elements) ++s.counts[g.order()];
      s.validate();
      spectrum = std::move(s);
    });
  }
};

FiniteGroup FiniteGroup::deferred(std::uint32_t degree,
                                  std::vector<Permutation> generators,
                                  std::string label, std::uint64_t cap) {
  if (degree == 0) {
    throw std::invalid_argument("FiniteGroup: degree must be >= 1");
  }
  for (const Permutation& g : generators) {
    if (g.degree() != degree) {
      throw std::invalid_argument(
          "FiniteGroup: generator degree mismatch (expected " +
          std::to_string(degree) + ", got " + std::to_string(g.degree()) + ")");
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->generators = std::move(generators);
  impl->label = std::move(label);
  impl->cap = cap;
  return FiniteGroup(std::move(impl));
}

FiniteGroup FiniteGroup::enumerate(std::uint32_t degree,
                                   std::vector<Permutation> generators,
                                   std::string label, std::uint64_t cap) {
  FiniteGroup g =
      deferred(degree, std::move(generators), std::move(label), cap);
  g.impl_->ensure_enumerated();
  return g;
}

const std::string& FiniteGroup::label() const { return impl_->label; }
std::uint32_t FiniteGroup::degree() const { return impl_->degree; }
const std::vector<Permutation>& FiniteGroup::generators() const {
  return impl_->generators;
}
std::uint64_t FiniteGroup::enumeration_cap() const { return impl_->cap; }

const std::vector<Permutation>& FiniteGroup::elements() const {
  impl_->ensure_enumerated();
  return impl_->elements;
}

std::uint64_t FiniteGroup::order() const { return elements().size(); }

const OrderSpectrum& FiniteGroup::spectrum() const {
  impl_->ensure_spectrum();
  return *impl_->spectrum;
}

bool FiniteGroup::contains(const Permutation& g) const {
  if (g.degree() != impl_->degree) return false;
  impl_->ensure_enumerated();
  return impl_->index.find(g) != impl_->index.end();
}

std::vector<std::uint32_t> FiniteGroup::word_for(
    std::size_t element_index) const {
  impl_->ensure_enumerated();
  if (element_index >= impl_->elements.size()) {
    throw std::out_of_range("FiniteGroup::word_for: index out of range");
  }
  std::vector<std::uint32_t> word;
  std::uint32_t i = static_cast<std::uint32_t>(element_index);
  while (i != 0) {
    const auto& [parent, gen] = impl_->parents[i];
    word.push_back(gen);
    i = parent;
  }
  // Parents were walked child-to-root; the word reads root-to-child.
  std::reverse(word.begin(), word.end());
  return word;
}

OrderSpectrum order_spectrum(const FiniteGroup& G) { return G.spectrum(); }

std::uint64_t count_kth_roots(const OrderSpectrum& spectrum, std::uint64_t k) {
  if (k == 0) throw std::domain_error("count_kth_roots: k must be >= 1");
  std::uint64_t total = 0;
  for (const auto& [t, s] : spectrum.counts) {
    if (k % t == 0) total += s;
  }
  return total;
}

std::uint64_t count_kth_roots(const FiniteGroup& G, std::uint64_t k) {
  return count_kth_roots(G.spectrum(), k);
}

std::uint64_t centralizer_order(const FiniteGroup& G,
                                const std::vector<Permutation>& S) {
  for (const Permutation& s : S) {
    if (!G.contains(s)) {
      throw std::invalid_argument(
          "centralizer_order: set member does not lie in the group");
    }
  }
  std::uint64_t count = 0;
  for (const Permutation& g : G.elements()) {
    bool commutes = true;
    for (const Permutation& s : S) {
      if (!(g.compose(s) == s.compose(g))) {
        commutes = false;
        break;
      }
    }
    if (commutes) ++count;
  }
  return count;
}

}  // namespace rho
