#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qtak {

// A bijection of {0, ..., n-1}; images[i] is the image of point i.
class Permutation {
 public:
  Permutation() = default;
  // Throws ValidationError unless images is a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }
  std::uint32_t operator()(std::size_t point) const { return images_[point]; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::size_t fixed_points() const;
  // Least m >= 1 with p^m = identity.
  std::uint64_t order() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  std::string to_string() const;

 private:
  struct Unchecked {};
  Permutation(std::vector<std::uint32_t> images, Unchecked) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation power(const Permutation&, std::uint64_t);

  std::vector<std::uint32_t> images_;
};

// (outer o inner)(x) = outer(inner(x)). compose(a, b) is the product "ab" in
// the convention where the right factor acts first.
Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation power(const Permutation& p, std::uint64_t exponent);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace qtak
