#pragma once

// The generalized dihedral group Dih(H) = H x| Z_2, with the Z_2 generator s
// acting on H by inversion, and closed-form predictions for its center,
// centralizers and conjugacy-class profile.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qtak/abelian.hpp"
#include "qtak/permutation.hpp"

namespace qtak {

// (h, 0) is h in H; (h, 1) is the product h*s.
struct DihElement {
  GroupElement h;
  bool flip = false;

  bool operator==(const DihElement&) const = default;
  auto operator<=>(const DihElement&) const = default;

  std::string to_string() const;
};

// (h1,0)(h2,e) = (h1+h2, e);  (h1,1)(h2,e) = (h1-h2, 1-e)
DihElement dih_multiply(const DihElement& a, const DihElement& b, const GroupSpec& spec);
DihElement dih_inverse(const DihElement& a, const GroupSpec& spec);
DihElement dih_identity(const GroupSpec& spec);
DihElement dih_reflection(const GroupSpec& spec);

// Index in [0, 2|H|): flip * |H| + element_index(h).
std::size_t dih_index(const DihElement& a, const GroupSpec& spec);
DihElement dih_at(std::size_t index, const GroupSpec& spec);
// All 2|H| elements in dih_index order.
std::vector<DihElement> enumerate_dih(const GroupSpec& spec);

// Left-regular action of the generators (e_1,0), ..., (e_r,0), (0,1) on the
// 2|H| elements, as permutations of dih_index. Bridges to the brute-force
// machinery in perm_group.
std::vector<Permutation> regular_action_generators(const GroupSpec& spec);
Permutation regular_action(const DihElement& g, const GroupSpec& spec);

struct CenterPrediction {
  std::vector<DihElement> elements;
  // Set when H is an elementary abelian 2-group: Dih(H) is then abelian and
  // the "center" is the whole group.
  bool degenerate = false;
  std::string note;
};

// {(h,0) : h_j in {0, n_j/2} on even moduli, h_j = 0 on odd moduli}; 2^k elements.
CenterPrediction predicted_center(const GroupSpec& spec);

struct ClassProfile {
  std::int64_t singleton_count = 0;
  std::int64_t pair_count = 0;
  std::int64_t large_count = 0;
  std::int64_t large_size = 0;
  bool degenerate = false;

  std::int64_t total() const { return singleton_count + 2 * pair_count + large_count * large_size; }
  bool operator==(const ClassProfile&) const = default;
};

// (2^k, (|H| - 2^k)/2, 2^k, |Dih(H)| / 2^{k+1}) with k the number of even moduli.
// For elementary 2-groups: every class is a singleton, flagged degenerate.
ClassProfile predicted_class_profile(const GroupSpec& spec);

// 2^{k+1}; the order of C(s h) for every h.
std::int64_t predicted_reflection_centralizer_order(const GroupSpec& spec);

}  // namespace qtak
