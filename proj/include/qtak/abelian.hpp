#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qtak {

// A finite abelian group Z_{n_1} x ... x Z_{n_r}, kept in the order the user
// wrote it. Moduli are never canonicalized: the parity bookkeeping used by the
// decomposition depends on the presentation.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<std::int64_t> moduli);

  const std::vector<std::int64_t>& moduli() const noexcept { return moduli_; }
  std::size_t rank() const noexcept { return moduli_.size(); }
  std::int64_t modulus(std::size_t i) const { return moduli_.at(i); }

  std::int64_t order() const noexcept { return order_; }
  // Number of even moduli.
  std::size_t even_count() const noexcept { return even_count_; }
  // Number of odd moduli (a modulus of 1 counts as odd).
  std::size_t odd_count() const noexcept { return moduli_.size() - even_count_; }
  // Moduli divisible by 4, and moduli congruent to 2 mod 4.
  std::size_t doubly_even_count() const noexcept { return doubly_even_count_; }
  std::size_t singly_even_count() const noexcept { return even_count_ - doubly_even_count_; }

  // Every modulus is 1 or 2, i.e. the group is an elementary abelian 2-group.
  bool is_elementary_two() const noexcept;
  bool all_odd() const noexcept { return even_count_ == 0; }

  // "4x6x3"
  std::string to_string() const;
  // "Z_4 x Z_6 x Z_3"
  std::string pretty() const;

  bool operator==(const GroupSpec& other) const { return moduli_ == other.moduli_; }

 private:
  std::vector<std::int64_t> moduli_;
  std::int64_t order_ = 1;
  std::size_t even_count_ = 0;
  std::size_t doubly_even_count_ = 0;
};

// Coordinates with coords[i] in [0, n_i).
struct GroupElement {
  std::vector<std::int64_t> coords;

  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;
};

// Parses "n1xn2x...xnk". Throws ParseError naming the offending token.
GroupSpec parse_group_spec(std::string_view text);

// Reduces arbitrary integers into a conforming element.
GroupElement make_element(const GroupSpec& spec, std::vector<std::int64_t> coords);
GroupElement identity_element(const GroupSpec& spec);
// e_i: 1 in coordinate i (reduced mod n_i), 0 elsewhere.
GroupElement basis_element(const GroupSpec& spec, std::size_t i);

GroupElement group_add(const GroupElement& a, const GroupElement& b, const GroupSpec& spec);
GroupElement group_neg(const GroupElement& a, const GroupSpec& spec);
GroupElement group_sub(const GroupElement& a, const GroupElement& b, const GroupSpec& spec);
GroupElement group_scale(const GroupElement& a, std::int64_t m, const GroupSpec& spec);

// Least m >= 1 with m*a = 0.
std::int64_t element_order(const GroupElement& a, const GroupSpec& spec);

// Enumeration is lexicographic on coordinates, last coordinate fastest.
std::size_t element_index(const GroupElement& a, const GroupSpec& spec);
GroupElement element_at(std::size_t index, const GroupSpec& spec);
std::vector<GroupElement> enumerate(const GroupSpec& spec);

std::string format_element(const GroupElement& a);

// Injective homomorphism source -> target, tabulated over the enumeration of
// source.
struct Embedding {
  GroupSpec source;
  GroupSpec target;
  std::vector<GroupElement> map;  // map[element_index(x, source)] = image of x

  GroupElement operator()(const GroupElement& x) const;
  std::vector<GroupElement> image() const { return map; }
};

// The subgroup 2G = {g + g}, presented on moduli n_i / gcd(n_i, 2) with the
// generator r_i sent to 2 e_i.
Embedding double_subgroup(const GroupSpec& spec);

}  // namespace qtak
