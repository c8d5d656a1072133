#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qtak/abelian.hpp"
#include "qtak/dihedral.hpp"
#include "qtak/permutation.hpp"

namespace qtak {

struct ConjugacyClass {
  std::size_t representative;         // element index with the smallest image list
  std::vector<std::size_t> members;   // element indices, ascending
};

// A permutation group held as its generators plus the complete element list.
// Element 0 is the identity. Classes are sorted by size, then by
// representative image list.
class PermGroup {
 public:
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_.at(i); }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  std::size_t class_of(std::size_t element) const { return class_of_.at(element); }

 private:
  friend PermGroup closure(const std::vector<Permutation>& generators, std::size_t cap);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

// Breadth-first closure of the generated group, then the conjugacy-class sweep.
// Throws CapacityError ("group too large") once more than `cap` elements are
// found, StructuralError if generator degrees differ or the list is empty.
PermGroup closure(const std::vector<Permutation>& generators, std::size_t cap);

// Orbits of the group generated by `generators` on [0, degree): sorted point
// lists ordered by their minimum element.
std::vector<std::vector<std::uint32_t>> orbits(const std::vector<Permutation>& generators,
                                               std::size_t degree);

// Indices of the elements commuting with x. Throws MembershipError if x is not
// in the group.
std::vector<std::size_t> centralizer(const PermGroup& g, const Permutation& x);
std::vector<std::size_t> center(const PermGroup& g);

// Result of checking that a permutation group is Dih(expected) (or the abelian
// group `expected` when the reflection candidate is the identity) under the
// generator map r_i -> abelian_generators[i], s -> reflection.
struct PresentationCertificate {
  GroupSpec abelian_part;
  std::vector<Permutation> abelian_generators;
  Permutation reflection;
  bool reflection_is_identity = false;
  bool verified = false;
  std::string failure;  // first relation that failed

  // labels[i] is the abstract element h*s^e realized by element i of the group.
  // Filled only when verified.
  std::vector<DihElement> labels;
};

PresentationCertificate certify_generalized_dihedral(const PermGroup& g, const GroupSpec& expected,
                                                     const std::vector<Permutation>& abelian_generators,
                                                     const Permutation& reflection);

// The permutation realizing h * s^flip under a verified certificate.
Permutation realize(const PresentationCertificate& cert, const DihElement& x);

}  // namespace qtak
