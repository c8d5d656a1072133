#include <doctest.h>

#include <algorithm>

#include "oracles/oracles.hpp"
#include "qtak/decomposer.hpp"
#include "qtak/dihedral.hpp"
#include "qtak/error.hpp"
#include "qtak/perm_group.hpp"
#include "qtak/quandle.hpp"
#include "qtak/sweep.hpp"

using namespace qtak;

namespace {

std::vector<std::size_t> class_sizes(const PermGroup& g) {
  std::vector<std::size_t> s;
  for (const auto& c : g.classes()) s.push_back(c.members.size());
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<oracle::Perm> raw(const std::vector<Permutation>& ps) {
  std::vector<oracle::Perm> out;
  for (const auto& p : ps) out.push_back(p.images());
  return out;
}

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation p({1, 2, 0, 3});
  CHECK(p.order() == 3);
  CHECK(p.fixed_points() == 1);
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(compose(p, Permutation({1, 0, 2, 3})).images() == std::vector<std::uint32_t>{2, 1, 0, 3});
  CHECK(power(p, 3).is_identity());
  CHECK_THROWS_AS(Permutation({0, 0, 1}), ValidationError);
  CHECK_THROWS_AS(Permutation({0, 3}), ValidationError);
  CHECK_THROWS_AS(compose(p, Permutation::identity(3)), StructuralError);
}

TEST_CASE("closure against the naive set closure") {
  CHECK(closure(right_maps(takasaki(GroupSpec({3}))), 1000).order() == 6);
  CHECK(closure(right_maps(takasaki(GroupSpec({6}))), 1000).order() == 6);
  CHECK(closure({Permutation::identity(4)}, 10).order() == 1);
  CHECK_THROWS_AS(closure({}, 10), StructuralError);
  CHECK_THROWS_AS(closure({Permutation::identity(3), Permutation::identity(4)}, 10), StructuralError);

  for (const auto& s : sweep_specs(40)) {
    const auto maps = right_maps(takasaki(s));
    const PermGroup g = closure(maps, 5000);
    const auto naive = oracle::generate(raw(maps), static_cast<std::size_t>(s.order()));
    CHECK(g.order() == naive.size());
    CHECK(g.element(0).is_identity());
    // Closed under every generator, and every element is in the naive set.
    for (const auto& e : g.elements()) {
      CHECK(naive.count(e.images()) == 1);
      for (const auto& gen : g.generators()) CHECK(g.contains(compose(gen, e)));
    }
    // Class equation.
    std::size_t total = 0;
    for (const auto& c : g.classes()) {
      total += c.members.size();
      CHECK(g.order() % c.members.size() == 0);
    }
    CHECK(total == g.order());
    // |Inn(T)| = 2 |2H| outside elementary two-groups.
    if (!s.is_elementary_two()) CHECK(g.order() == 2 * static_cast<std::size_t>(double_subgroup(s).source.order()));
  }
}

TEST_CASE("closure cap") {
  const auto maps = right_maps(takasaki(GroupSpec({9})));
  try {
    closure(maps, 10);
    FAIL("expected CapacityError");
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()).find("group too large") != std::string::npos);
    CHECK(e.reached() > 10);
  }
}

TEST_CASE("orbits") {
  const auto o4 = orbits(right_maps(takasaki(GroupSpec({4}))), 4);
  CHECK(o4 == std::vector<std::vector<std::uint32_t>>{{0, 2}, {1, 3}});
  CHECK(orbits(right_maps(takasaki(GroupSpec({5}))), 5).size() == 1);
  for (const auto& s : sweep_specs(64)) {
    const auto maps = right_maps(takasaki(s));
    const auto o = orbits(maps, static_cast<std::size_t>(s.order()));
    CHECK(o == oracle::orbit_partition(raw(maps), static_cast<std::size_t>(s.order())));
    if (!s.is_elementary_two()) CHECK(o.size() == (std::size_t{1} << s.even_count()));
  }
}

TEST_CASE("conjugacy classes") {
  CHECK(class_sizes(closure(right_maps(takasaki(GroupSpec({5}))), 100)) == std::vector<std::size_t>{1, 2, 2, 5});
  CHECK(closure({Permutation::identity(2)}, 10).classes().size() == 1);
  const GroupSpec h({2, 6});
  const PermGroup dih = closure(regular_action_generators(h), 1000);
  CHECK(dih.order() == 24);
  CHECK(class_sizes(dih) == std::vector<std::size_t>{1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3});

  // Oracle classes on the abstract Dih(Z_2 x Z_6) agree up to the index bridge.
  const oracle::Dih od(h.moduli());
  auto expected = oracle::dih_classes(od);
  std::vector<std::vector<std::int64_t>> got;
  for (const auto& c : dih.classes()) {
    std::vector<std::int64_t> members;
    for (auto e : c.members) members.push_back(dih.element(e)(0));  // g * identity = g
    std::sort(members.begin(), members.end());
    got.push_back(members);
  }
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);
}

TEST_CASE("centralizers and center") {
  const GroupSpec h({2, 6});
  const PermGroup dih = closure(regular_action_generators(h), 1000);
  CHECK(centralizer(dih, Permutation::identity(24)).size() == 24);
  CHECK(centralizer(dih, regular_action(dih_reflection(h), h)).size() == 8);
  CHECK(center(dih).size() == 4);
  const GroupSpec z5({5});
  const PermGroup d5 = closure(regular_action_generators(z5), 100);
  CHECK(centralizer(d5, regular_action(dih_reflection(z5), z5)).size() == 2);
  CHECK_THROWS_AS(centralizer(d5, Permutation({1, 0, 2, 3, 4, 5, 6, 7, 8, 9})), MembershipError);
}

TEST_CASE("certify_generalized_dihedral") {
  {
    const Quandle q = takasaki(GroupSpec({5}));
    const auto inn = inner_automorphisms(q);
    CHECK(inn.certificate.verified);
    CHECK(!inn.certificate.reflection_is_identity);
    CHECK(inn.certificate.reflection.order() == 2);
    CHECK(inn.group.order() == 10);
  }
  {
    const Quandle q = takasaki(GroupSpec({2, 2}));
    const auto inn = inner_automorphisms(q);
    CHECK(inn.certificate.verified);
    CHECK(inn.certificate.reflection_is_identity);
    CHECK(inn.certificate.abelian_part.moduli() == std::vector<std::int64_t>{1, 1});
  }
  {
    // X_0 of takasaki([2,4]) is {(0,0),(0,2)}; r -> R_{e_1} R_0 restricted is
    // the swap and R_0 restricted is the identity.
    const Quandle q = takasaki(GroupSpec({2, 4}));
    const std::vector<std::uint32_t> pts{0, 2};
    auto restrict = [&](const Permutation& p) {
      std::vector<std::uint32_t> img;
      for (auto x : pts) img.push_back(static_cast<std::uint32_t>(std::find(pts.begin(), pts.end(), p(x)) - pts.begin()));
      return Permutation(img);
    };
    const Permutation r0 = restrict(right_map(q, 0));
    const Permutation r1 = compose(restrict(right_map(q, 1)), r0);
    const PermGroup g = closure({r0, r1}, 10);
    const auto cert = certify_generalized_dihedral(g, GroupSpec({2}), {r1}, r0);
    CHECK(cert.verified);
    CHECK(cert.reflection_is_identity);
    CHECK(g.order() == 2);
  }
  {
    // A wrong expectation fails with a named relation.
    const Quandle q = takasaki(GroupSpec({6}));
    const PermGroup g = closure(right_maps(q), 100);
    const Permutation s = right_map(q, 0);
    const Permutation r = compose(right_map(q, 1), s);
    const auto bad = certify_generalized_dihedral(g, GroupSpec({6}), {r}, s);
    CHECK(!bad.verified);
    CHECK(!bad.failure.empty());
    const auto good = certify_generalized_dihedral(g, GroupSpec({3}), {r}, s);
    CHECK(good.verified);
    CHECK(good.labels.size() == 6);
    for (std::size_t i = 0; i < g.order(); ++i) CHECK(realize(good, good.labels[i]) == g.element(i));
  }
  {
    const PermGroup g = closure({Permutation({1, 0})}, 10);
    CHECK_THROWS_AS(certify_generalized_dihedral(g, GroupSpec({1}), {Permutation::identity(3)},
                                                 Permutation({1, 0})),
                    StructuralError);
  }
}
