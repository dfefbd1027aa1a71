#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rho {

// A permutation of {0, ..., d-1}, stored as its image array.
class Permutation {
 public:
  // Validates that images is a bijection; throws std::invalid_argument if not.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::uint32_t degree);

  std::uint32_t degree() const {
    return static_cast<std::uint32_t>(images_.size());
  }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;

  // Function composition: (a.compose(b))(x) = a(b(x)), i.e. b acts first.
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  // Least common multiple of the cycle lengths.
  std::uint64_t order() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<std::uint32_t> images)
      : images_(std::move(images)) {}

  std::vector<std::uint32_t> images_;
};

// The order of a group element (lcm of cycle lengths of its permutation).
std::uint64_t element_order(const Permutation& g);

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace rho
