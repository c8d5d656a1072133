#include "qtak/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "qtak/error.hpp"

namespace qtak {

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  const auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PermGroup closure(const std::vector<Permutation>& generators, std::size_t cap) {
  if (generators.empty()) throw StructuralError("closure needs at least one generator");
  if (cap == 0) throw ValidationError("closure cap must be ≥ 1");
  const std::size_t degree = generators.front().degree();

  PermGroup g;
  g.degree_ = degree;
  {
    std::unordered_set<Permutation, PermutationHash> seen;
    for (const auto& p : generators) {
      if (p.degree() != degree) throw StructuralError("generators have different degrees");
      if (seen.insert(p).second) g.generators_.push_back(p);
    }
  }

  auto add = [&g, cap](Permutation p) {
    const auto [it, inserted] = g.index_.try_emplace(p, g.elements_.size());
    if (!inserted) return;
    if (g.elements_.size() == cap) {
      throw CapacityError("group too large: more than " + std::to_string(cap) +
                              " elements (reached " + std::to_string(cap + 1) + ")",
                          cap + 1);
    }
    g.elements_.push_back(std::move(p));
  };

  add(Permutation::identity(degree));
  for (std::size_t next = 0; next < g.elements_.size(); ++next) {
    for (const auto& gen : g.generators_) add(compose(gen, g.elements_[next]));
  }

  // Conjugacy classes: orbit of each unclassified element under conjugation
  // by the generators.
  std::vector<Permutation> inverses;
  for (const auto& gen : g.generators_) inverses.push_back(gen.inverse());
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw_class(g.elements_.size(), unassigned);
  std::vector<ConjugacyClass> raw;
  for (std::size_t start = 0; start < g.elements_.size(); ++start) {
    if (raw_class[start] != unassigned) continue;
    ConjugacyClass cls{start, {start}};
    raw_class[start] = raw.size();
    for (std::size_t k = 0; k < cls.members.size(); ++k) {
      const Permutation& x = g.elements_[cls.members[k]];
      for (std::size_t t = 0; t < g.generators_.size(); ++t) {
        const std::size_t y = g.index_.at(compose(compose(g.generators_[t], x), inverses[t]));
        if (raw_class[y] == unassigned) {
          raw_class[y] = raw.size();
          cls.members.push_back(y);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = *std::min_element(
        cls.members.begin(), cls.members.end(),
        [&g](std::size_t a, std::size_t b) { return g.elements_[a].images() < g.elements_[b].images(); });
    raw.push_back(std::move(cls));
  }
  std::sort(raw.begin(), raw.end(), [&g](const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return g.elements_[a.representative].images() < g.elements_[b.representative].images();
  });
  g.class_of_.assign(g.elements_.size(), 0);
  for (std::size_t c = 0; c < raw.size(); ++c) {
    for (const auto m : raw[c].members) g.class_of_[m] = c;
  }
  g.classes_ = std::move(raw);
  return g;
}

std::vector<std::vector<std::uint32_t>> orbits(const std::vector<Permutation>& generators,
                                               std::size_t degree) {
  for (const auto& p : generators) {
    if (p.degree() != degree) throw StructuralError("generator degree does not match");
  }
  std::vector<bool> seen(degree, false);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t start = 0; start < degree; ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> orbit{static_cast<std::uint32_t>(start)};
    seen[start] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& p : generators) {
        const std::uint32_t y = p(orbit[k]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<std::size_t> centralizer(const PermGroup& g, const Permutation& x) {
  if (!g.contains(x)) throw MembershipError("element " + x.to_string() + " is not in the group");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (compose(g.element(i), x) == compose(x, g.element(i))) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> center(const PermGroup& g) {
  std::vector<std::size_t> out;
  for (const auto& cls : g.classes()) {
    if (cls.members.size() == 1) out.push_back(cls.members.front());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation realize(const PresentationCertificate& cert, const DihElement& x) {
  const std::size_t degree = cert.reflection.degree();
  Permutation p = Permutation::identity(degree);
  for (std::size_t i = 0; i < cert.abelian_generators.size(); ++i) {
    p = compose(p, power(cert.abelian_generators[i], static_cast<std::uint64_t>(x.h.coords.at(i))));
  }
  if (x.flip) p = compose(p, cert.reflection);
  return p;
}

PresentationCertificate certify_generalized_dihedral(const PermGroup& g, const GroupSpec& expected,
                                                     const std::vector<Permutation>& abelian_generators,
                                                     const Permutation& reflection) {
  if (abelian_generators.size() != expected.rank()) {
    throw StructuralError("expected " + std::to_string(expected.rank()) +
                          " abelian generators, got " + std::to_string(abelian_generators.size()));
  }
  if (reflection.degree() != g.degree()) throw StructuralError("reflection degree mismatch");
  for (const auto& a : abelian_generators) {
    if (a.degree() != g.degree()) throw StructuralError("abelian generator degree mismatch");
  }

  PresentationCertificate cert{expected, abelian_generators, reflection, reflection.is_identity(),
                               false, {}, {}};
  auto fail = [&cert](std::string why) {
    cert.failure = std::move(why);
    return cert;
  };
  const auto name = [](std::size_t i) { return "r_" + std::to_string(i + 1); };

  for (std::size_t i = 0; i < abelian_generators.size(); ++i) {
    if (!g.contains(abelian_generators[i])) return fail(name(i) + " is not in the group");
  }
  if (!g.contains(reflection)) return fail("s is not in the group");

  for (std::size_t i = 0; i < abelian_generators.size(); ++i) {
    const auto ord = abelian_generators[i].order();
    if (ord != static_cast<std::uint64_t>(expected.modulus(i))) {
      return fail("ord(" + name(i) + ") = " + std::to_string(ord) + ", expected " +
                  std::to_string(expected.modulus(i)));
    }
    for (std::size_t j = i + 1; j < abelian_generators.size(); ++j) {
      if (compose(abelian_generators[i], abelian_generators[j]) !=
          compose(abelian_generators[j], abelian_generators[i])) {
        return fail(name(i) + " " + name(j) + " != " + name(j) + " " + name(i));
      }
    }
  }
  if (!compose(reflection, reflection).is_identity()) return fail("s^2 != 1");
  if (!cert.reflection_is_identity) {
    for (std::size_t i = 0; i < abelian_generators.size(); ++i) {
      const Permutation conj = compose(compose(reflection, abelian_generators[i]), reflection);
      if (conj != abelian_generators[i].inverse()) {
        return fail("s " + name(i) + " s^-1 != " + name(i) + "^-1");
      }
    }
  }

  const std::size_t h_order = static_cast<std::size_t>(expected.order());
  const std::size_t predicted = cert.reflection_is_identity ? h_order : 2 * h_order;
  if (g.order() != predicted) {
    return fail("|G| = " + std::to_string(g.order()) + ", expected " + std::to_string(predicted));
  }

  std::vector<DihElement> labels(g.order());
  std::vector<bool> hit(g.order(), false);
  for (const auto& h : enumerate(expected)) {
    for (const bool flip : {false, true}) {
      if (flip && cert.reflection_is_identity) continue;
      const DihElement x{h, flip};
      const auto idx = g.index_of(realize(cert, x));
      if (!idx) return fail(x.to_string() + " realizes a permutation outside the group");
      if (hit[*idx]) return fail(x.to_string() + " coincides with " + labels[*idx].to_string());
      hit[*idx] = true;
      labels[*idx] = x;
    }
  }
  cert.labels = std::move(labels);
  cert.verified = true;
  return cert;
}

}  // namespace qtak
