#include "rho/permutation.hpp"

#include <numeric>
#include <stdexcept>

#include "rho/checked_arith.hpp"

namespace rho {

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  const std::uint32_t d = degree();
  std::vector<bool> seen(d, false);
  for (std::uint32_t img : images_) {
    if (img >= d || seen[img]) {
      throw std::invalid_argument(
          "Permutation: image array is not a bijection on {0..d-1}");
    }
    seen[img] = true;
  }
}

Permutation Permutation::identity(std::uint32_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(Unchecked{}, std::move(images));
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (degree() != other.degree()) {
    throw std::invalid_argument("Permutation::compose: degree mismatch");
  }
  std::vector<std::uint32_t> images(degree());
  for (std::uint32_t i = 0; i < degree(); ++i) {
    images[i] = images_[other.images_[i]];
  }
  return Permutation(Unchecked{}, std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> images(degree());
  for (std::uint32_t i = 0; i < degree(); ++i) {
    images[images_[i]] = i;
  }
  return Permutation(Unchecked{}, std::move(images));
}

std::uint64_t Permutation::order() const {
  std::vector<bool> visited(degree(), false);
  std::uint64_t result = 1;
  for (std::uint32_t start = 0; start < degree(); ++start) {
    if (visited[start]) continue;
    std::uint64_t len = 0;
    std::uint32_t p = start;
    do {
      visited[p] = true;
      p = images_[p];
      ++len;
    } while (p != start);
    const std::uint64_t g = std::gcd(result, len);
    result = checked_mul(result / g, len);
  }
  return result;
}

std::uint64_t element_order(const Permutation& g) { return g.order(); }

std::size_t PermHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words; deterministic across runs.
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t v : p.images()) {
    for (int shift = 0; shift < 32; shift += 8) {
      h ^= (v >> shift) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  return static_cast<std::size_t>(h);
}

}  // namespace rho
