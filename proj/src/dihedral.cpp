#include "qtak/dihedral.hpp"

#include "qtak/error.hpp"

namespace qtak {

std::string DihElement::to_string() const {
  return flip ? format_element(h) + "s" : format_element(h);
}

DihElement dih_multiply(const DihElement& a, const DihElement& b, const GroupSpec& spec) {
  if (!a.flip) return {group_add(a.h, b.h, spec), b.flip};
  return {group_sub(a.h, b.h, spec), !b.flip};
}

DihElement dih_inverse(const DihElement& a, const GroupSpec& spec) {
  if (a.flip) return a;
  return {group_neg(a.h, spec), false};
}

DihElement dih_identity(const GroupSpec& spec) { return {identity_element(spec), false}; }
DihElement dih_reflection(const GroupSpec& spec) { return {identity_element(spec), true}; }

std::size_t dih_index(const DihElement& a, const GroupSpec& spec) {
  return (a.flip ? static_cast<std::size_t>(spec.order()) : 0) + element_index(a.h, spec);
}

DihElement dih_at(std::size_t index, const GroupSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.order());
  if (index >= 2 * n) throw IndexError("Dih index out of range");
  return {element_at(index % n, spec), index >= n};
}

std::vector<DihElement> enumerate_dih(const GroupSpec& spec) {
  std::vector<DihElement> out;
  const auto elements = enumerate(spec);
  out.reserve(2 * elements.size());
  for (const auto& h : elements) out.push_back({h, false});
  for (const auto& h : elements) out.push_back({h, true});
  return out;
}

Permutation regular_action(const DihElement& g, const GroupSpec& spec) {
  const auto all = enumerate_dih(spec);
  std::vector<std::uint32_t> images(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    images[i] = static_cast<std::uint32_t>(dih_index(dih_multiply(g, all[i], spec), spec));
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> regular_action_generators(const GroupSpec& spec) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    gens.push_back(regular_action({basis_element(spec, i), false}, spec));
  }
  gens.push_back(regular_action(dih_reflection(spec), spec));
  return gens;
}

CenterPrediction predicted_center(const GroupSpec& spec) {
  CenterPrediction out;
  if (spec.is_elementary_two()) {
    out.elements = enumerate_dih(spec);
    out.degenerate = true;
    out.note = "Dih(H) abelian; center is whole group";
    return out;
  }
  for (const auto& h : enumerate(spec)) {
    bool central = true;
    for (std::size_t j = 0; j < spec.rank() && central; ++j) {
      const std::int64_t n = spec.modulus(j);
      const std::int64_t c = h.coords[j];
      central = (n % 2 == 0) ? (c == 0 || c == n / 2) : (c == 0);
    }
    if (central) out.elements.push_back({h, false});
  }
  return out;
}

ClassProfile predicted_class_profile(const GroupSpec& spec) {
  const std::int64_t order = spec.order();
  if (spec.is_elementary_two()) {
    return ClassProfile{2 * order, 0, 0, 0, true};
  }
  const std::int64_t two_k = std::int64_t{1} << spec.even_count();
  return ClassProfile{two_k, (order - two_k) / 2, two_k, 2 * order / (2 * two_k), false};
}

std::int64_t predicted_reflection_centralizer_order(const GroupSpec& spec) {
  return std::int64_t{2} << spec.even_count();
}

}  // namespace qtak
