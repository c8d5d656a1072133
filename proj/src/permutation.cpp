#include "qtak/permutation.hpp"

#include <numeric>

#include "qtak/error.hpp"
#include "qtak/kernels.hpp"

namespace qtak {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (const auto v : images_) {
    if (v >= images_.size() || seen[v]) throw ValidationError("image list is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(inv), Unchecked{});
}

std::size_t Permutation::fixed_points() const {
  return kernels::active().count_fixed_points(images_.data(), images_.size());
}

std::uint64_t Permutation::order() const {
  // lcm of cycle lengths
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i]);
  }
  return out + "]";
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.degree() != inner.degree()) {
    throw StructuralError("cannot compose permutations of degree " + std::to_string(outer.degree()) +
                          " and " + std::to_string(inner.degree()));
  }
  std::vector<std::uint32_t> out(inner.degree());
  kernels::active().compose(outer.images_.data(), inner.images_.data(), out.data(), out.size());
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation power(const Permutation& p, std::uint64_t exponent) {
  Permutation result = Permutation::identity(p.degree());
  Permutation base = p;
  while (exponent > 0) {
    if (exponent & 1u) result = compose(result, base);
    base = compose(base, base);
    exponent >>= 1u;
  }
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image list
  std::uint64_t h = 1469598103934665603ull;
  for (const auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace qtak
