#include "rho/isomorphism.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace rho {
namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

using Index = std::unordered_map<Permutation, u32, PermHash>;

Index index_elements(const std::vector<Permutation>& elements) {
  Index idx;
  idx.reserve(elements.size() * 2);
  for (u32 i = 0; i < elements.size(); ++i) idx.emplace(elements[i], i);
  return idx;
}

// class_of[i] = id of the conjugacy class of elements[i]; returns the class
// sizes indexed by class id.
std::vector<u64> conjugacy_classes(const std::vector<Permutation>& elements,
                                   const Index& idx,
                                   std::vector<u32>& class_of) {
  constexpr u32 kUnassigned = ~0u;
  class_of.assign(elements.size(), kUnassigned);
  std::vector<u64> sizes;
  for (u32 start = 0; start < elements.size(); ++start) {
    if (class_of[start] != kUnassigned) continue;
    const u32 id = static_cast<u32>(sizes.size());
    u64 size = 0;
    for (const Permutation& h : elements) {
      const Permutation conj =
          h.compose(elements[start]).compose(h.inverse());
      const u32 at = idx.at(conj);
      if (class_of[at] == kUnassigned) {
        class_of[at] = id;
        ++size;
      }
    }
    sizes.push_back(size);
  }
  return sizes;
}

struct Analysis {
  std::vector<Permutation> elements;
  Index idx;
  std::vector<u32> class_of;
  std::vector<u64> class_sizes;   // by class id
  std::vector<u64> element_order; // by element index
};

Analysis analyze(const FiniteGroup& G) {
  Analysis a;
  a.elements = G.elements();
  a.idx = index_elements(a.elements);
  a.class_sizes = conjugacy_classes(a.elements, a.idx, a.class_of);
  a.element_order.reserve(a.elements.size());
  for (const Permutation& g : a.elements) a.element_order.push_back(g.order());
  return a;
}

// Images of all of G's elements under the generator assignment, built by
// replaying the breadth-first words; empty result when some image repeats
// (the assignment is not injective).
std::vector<Permutation> extend_by_words(const FiniteGroup& G,
                                         const std::vector<Permutation>& imgs) {
  const std::vector<Permutation>& elements = G.elements();
  std::vector<Permutation> phi;
  phi.reserve(elements.size());
  std::unordered_set<Permutation, PermHash> seen;
  seen.reserve(elements.size() * 2);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    Permutation image = Permutation::identity(imgs.empty()
                                                  ? 1u
                                                  : imgs.front().degree());
    for (u32 w : G.word_for(i)) image = image.compose(imgs[w]);
    if (!seen.insert(image).second) return {};
    phi.push_back(std::move(image));
  }
  return phi;
}

bool is_full_homomorphism(const FiniteGroup& G, const Analysis& ag,
                          const std::vector<Permutation>& imgs,
                          const std::vector<Permutation>& phi) {
  const std::vector<Permutation>& elements = G.elements();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < imgs.size(); ++j) {
      const Permutation product = elements[i].compose(G.generators()[j]);
      const u32 at = ag.idx.at(product);
      if (!(phi[at] == phi[i].compose(imgs[j]))) return false;
    }
  }
  return true;
}

bool backtrack(const FiniteGroup& G, const FiniteGroup& H, const Analysis& ag,
               const std::vector<std::vector<u32>>& candidates,
               std::vector<Permutation>& imgs, std::size_t position) {
  const std::vector<Permutation>& gens = G.generators();
  if (position == gens.size()) {
    if (gens.empty()) return H.order() == 1;
    const std::vector<Permutation> phi = extend_by_words(G, imgs);
    if (phi.empty() || phi.size() != H.order()) return false;
    return is_full_homomorphism(G, ag, imgs, phi);
  }
  for (u32 cand : candidates[position]) {
    const Permutation& img = H.elements()[cand];
    bool consistent = true;
    for (std::size_t q = 0; q < position && consistent; ++q) {
      // Pairwise product orders are isomorphism invariants of the assignment.
      consistent =
          gens[q].compose(gens[position]).order() ==
              imgs[q].compose(img).order() &&
          gens[position].compose(gens[q]).order() ==
              img.compose(imgs[q]).order();
    }
    if (!consistent) continue;
    imgs.push_back(img);
    if (backtrack(G, H, ag, candidates, imgs, position + 1)) return true;
    imgs.pop_back();
  }
  return false;
}

}  // namespace

GroupFingerprint fingerprint(const FiniteGroup& G) {
  GroupFingerprint fp;
  fp.order = G.order();
  fp.spectrum_counts = G.spectrum().counts;
  fp.center_order = centralizer_order(G, G.generators());
  Analysis a = analyze(G);
  fp.class_sizes = a.class_sizes;
  std::sort(fp.class_sizes.begin(), fp.class_sizes.end());
  return fp;
}

bool is_isomorphic(const FiniteGroup& G, const FiniteGroup& H) {
  if (G.order() != H.order()) return false;
  if (!(G.spectrum() == H.spectrum())) return false;
  if (!(fingerprint(G) == fingerprint(H))) return false;
  if (G.order() == 1) return true;

  const Analysis ag = analyze(G);
  const Analysis ah = analyze(H);

  // Candidate images for each generator: same order, same class size.
  std::vector<std::vector<u32>> candidates;
  for (const Permutation& gen : G.generators()) {
    const u32 at = ag.idx.at(gen);
    const u64 order = ag.element_order[at];
    const u64 class_size = ag.class_sizes[ag.class_of[at]];
    std::vector<u32> cands;
    for (u32 i = 0; i < ah.elements.size(); ++i) {
      if (ah.element_order[i] == order &&
          ah.class_sizes[ah.class_of[i]] == class_size) {
        cands.push_back(i);
      }
    }
    if (cands.empty()) return false;
    candidates.push_back(std::move(cands));
  }

  std::vector<Permutation> imgs;
  imgs.reserve(candidates.size());
  return backtrack(G, H, ag, candidates, imgs, 0);
}

}  // namespace rho
