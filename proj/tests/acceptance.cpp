// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria (capped at 1 for ctest).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>
#include <string>

#include "oracles/oracles.hpp"
#include "qtak/char_table.hpp"
#include "qtak/cli.hpp"
#include "qtak/decomposer.hpp"
#include "qtak/dihedral.hpp"
#include "qtak/sweep.hpp"

using namespace qtak;
using nlohmann::json;

namespace {

// Pinned tolerances and budgets.
constexpr double kResidualTol = 1e-8;
constexpr double kOrthogonalityTol = 1e-9;
constexpr double kBruteTableTol = 1e-8;
constexpr double kBudgetWorkedExample = 1.0;
constexpr double kBudgetOdd = 30.0;
constexpr double kBudgetEven = 120.0;
constexpr double kBudgetSweep = 300.0;

// The four orbits of the Takasaki quandle on Z_4 x Z_6 x Z_3, written out by hand.
const std::map<std::string, std::string> kReferenceOrbits{
    {"X_(0,0,0)",
     "(0,0,0),(0,0,1),(0,0,2),(0,2,0),(0,2,1),(0,2,2),(0,4,0),(0,4,1),(0,4,2),(2,0,0),"
     "(2,0,1),(2,0,2),(2,2,0),(2,2,1),(2,2,2),(2,4,0),(2,4,1),(2,4,2)"},
    {"X_(0,1,0)",
     "(0,1,0),(0,1,1),(0,1,2),(0,3,0),(0,3,1),(0,3,2),(0,5,0),(0,5,1),(0,5,2),(2,1,0),"
     "(2,1,1),(2,1,2),(2,3,0),(2,3,1),(2,3,2),(2,5,0),(2,5,1),(2,5,2)"},
    {"X_(1,0,0)",
     "(1,0,0),(1,0,1),(1,0,2),(1,2,0),(1,2,1),(1,2,2),(1,4,0),(1,4,1),(1,4,2),(3,0,0),"
     "(3,0,1),(3,0,2),(3,2,0),(3,2,1),(3,2,2),(3,4,0),(3,4,1),(3,4,2)"},
    {"X_(1,1,0)",
     "(1,1,0),(1,1,1),(1,1,2),(1,3,0),(1,3,1),(1,3,2),(1,5,0),(1,5,1),(1,5,2),(3,1,0),"
     "(3,1,1),(3,1,2),(3,3,0),(3,3,1),(3,3,2),(3,5,0),(3,5,1),(3,5,2)"},
};

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int cli(std::vector<std::string> args, std::string& out) {
  args.insert(args.begin(), "qtak");
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  out = o.str();
  return code;
}

Decomposition run(const GroupSpec& s, std::optional<Field> f = std::nullopt) {
  DecomposeOptions o;
  o.verify_field = f;
  return decompose(s, o);
}

std::int64_t pow2(std::size_t k) { return std::int64_t{1} << k; }

std::vector<std::int64_t> doubled(const GroupSpec& s) {
  std::vector<std::int64_t> m;
  for (auto n : s.moduli()) m.push_back(n % 2 == 0 ? n / 2 : n);
  return m;
}

// Per orbit: multiplicities 1 on linear_plus and degree_two irreps, 0 on linear_minus.
void require_predicted_multiplicities(const Decomposition& d, Outcome& r) {
  for (std::size_t o = 0; o < d.actions.size(); ++o) {
    const auto t = identified_table(d.actions[o]);
    for (std::size_t i = 0; i < t.irreps().size(); ++i) {
      const std::int64_t want = t.irreps()[i].kind == IrrepKind::linear_minus ? 0 : 1;
      if (d.report.orbits[o].multiplicities[i] != want)
        r.fail(d.report.spec.to_string() + " " + t.irreps()[i].name() + " multiplicity");
    }
  }
}

std::pair<std::int64_t, std::int64_t> count_dims(const OrbitRecord& o) {
  return {std::count(o.dims.begin(), o.dims.end(), 1), std::count(o.dims.begin(), o.dims.end(), 2)};
}

Outcome worked_example() {
  Outcome r;
  const auto t0 = Clock::now();
  std::string out;
  if (cli({"orbits", "--group", "4x6x3", "--format", "json"}, out) != 0) {
    r.fail("orbits exited nonzero");
    return r;
  }
  const json j = json::parse(out);
  if (j["orbits"].size() != 4) r.fail("orbit count");
  std::map<std::string, std::string> got;
  for (const auto& o : j["orbits"]) {
    std::string pts;
    for (const auto& p : o["points"]) {
      if (!pts.empty()) pts += ",";
      pts += "(";
      for (std::size_t i = 0; i < p.size(); ++i) pts += (i ? "," : "") + std::to_string(p[i].get<int>());
      pts += ")";
    }
    got[o["name"].get<std::string>()] = pts;
  }
  if (got != kReferenceOrbits) r.fail("orbit sets differ from the reference listing");
  const double s = seconds_since(t0);
  if (s >= kBudgetWorkedExample) r.fail("runtime " + std::to_string(s) + " s");
  return r;
}

Outcome odd_theorem() {
  Outcome r;
  const auto t0 = Clock::now();
  int n = 0;
  for (const auto& s : sweep_specs(63)) {
    if (detect_case(s) != CaseTag::odd) continue;
    ++n;
    const auto d = run(s);
    const std::int64_t h = s.order();
    if (d.report.orbits.size() != 1) r.fail(s.to_string() + " orbit count");
    if (d.report.total_summands != 1 + (h - 1) / 2) r.fail(s.to_string() + " summand count");
    std::vector<int> dims = d.report.orbits.front().dims;
    std::sort(dims.begin(), dims.end());
    std::vector<int> want(static_cast<std::size_t>(1 + (h - 1) / 2), 2);
    want[0] = 1;
    if (dims != want) r.fail(s.to_string() + " dims");
    if (d.report.total_dimension != h) r.fail(s.to_string() + " dimension");
    require_predicted_multiplicities(d, r);
  }
  if (n == 0) r.fail("no odd groups enumerated");
  const double sec = seconds_since(t0);
  if (sec >= kBudgetOdd) r.fail("runtime " + std::to_string(sec) + " s");
  r.detail = r.pass ? std::to_string(n) + " groups" : r.detail;
  return r;
}

Outcome even_theorem() {
  Outcome r;
  const auto t0 = Clock::now();
  int n = 0;
  for (const auto& s : sweep_specs(64)) {
    if (detect_case(s) != CaseTag::even_general) continue;
    ++n;
    const auto d = run(s);
    const GroupSpec tilde(doubled(s));
    const std::int64_t k = pow2(tilde.even_count());  // 2^k, k = #moduli of H divisible by 4
    if (static_cast<std::int64_t>(d.report.orbits.size()) != pow2(s.even_count()))
      r.fail(s.to_string() + " orbit count");
    for (const auto& o : d.report.orbits) {
      const auto [one, two] = count_dims(o);
      if (one != k || two != (tilde.order() - k) / 2) r.fail(s.to_string() + " per-orbit summands");
    }
    if (d.report.total_dimension != s.order()) r.fail(s.to_string() + " dimension");
    require_predicted_multiplicities(d, r);
  }
  const double sec = seconds_since(t0);
  if (sec >= kBudgetEven) r.fail("runtime " + std::to_string(sec) + " s");
  r.detail = r.pass ? std::to_string(n) + " groups" : r.detail;
  return r;
}

Outcome special_theorem() {
  Outcome r;
  int n = 0;
  for (const auto& s : sweep_specs(64)) {
    if (detect_case(s) != CaseTag::special) continue;
    ++n;
    const std::size_t a = s.singly_even_count(), b = s.doubly_even_count();
    const auto d = run(s);
    std::int64_t one = 0, other = 0;
    for (const auto& o : d.report.orbits) {
      const auto [x, y] = count_dims(o);
      one += x;
      other += static_cast<std::int64_t>(o.dims.size()) - x;
      (void)y;
    }
    if (one != pow2(a + b) * pow2(b) || other != 0) r.fail(s.to_string());
  }
  r.detail = r.pass ? std::to_string(n) + " groups" : r.detail;
  return r;
}

Outcome character_lemmas() {
  Outcome r;
  int n = 0;
  for (const auto& s : sweep_specs(64)) {
    ++n;
    const auto d = run(s);
    for (std::size_t o = 0; o < d.actions.size(); ++o) {
      const auto& act = d.actions[o];
      const auto& rec = d.report.orbits[o];
      if (!act.identification.verified) {
        r.fail(s.to_string() + " unidentified orbit");
        continue;
      }
      // Class by class, the recorded character must equal the closed form
      // evaluated on the class representative.
      const auto t = identified_table(act);
      for (std::size_t c = 0; c < t.classes().size(); ++c) {
        const auto& rep = t.classes()[c].representative;
        const auto want = oracle::fixed_point_closed_form(rep.flip, rep.h.coords, t.abelian_part().moduli(),
                                                          static_cast<std::int64_t>(act.size()),
                                                          act.identification.reflection_is_identity);
        if (rec.permutation_character.values[c] != want) r.fail(s.to_string() + " class " + std::to_string(c));
      }
      // And element by element from raw fixed-point counts.
      for (std::size_t g = 0; g < act.inn.order(); ++g) {
        const auto& lab = act.identification.labels[g];
        const auto want = oracle::fixed_point_closed_form(lab.flip, lab.h.coords, t.abelian_part().moduli(),
                                                          static_cast<std::int64_t>(act.size()),
                                                          act.identification.reflection_is_identity);
        if (static_cast<std::int64_t>(act.inn.element(g).fixed_points()) != want)
          r.fail(s.to_string() + " element " + lab.to_string());
      }
    }
  }
  r.detail = r.pass ? std::to_string(n) + " groups" : r.detail;
  return r;
}

Outcome dih_oracle() {
  Outcome r;
  int n = 0;
  for (const auto& s : sweep_specs(32)) {
    if (s.is_elementary_two()) continue;
    ++n;
    const oracle::Dih g(s.moduli());
    std::vector<std::int64_t> pc;
    for (const auto& z : predicted_center(s).elements)
      pc.push_back((z.flip ? g.n : 0) + oracle::rank(z.h.coords, s.moduli()));
    std::sort(pc.begin(), pc.end());
    if (pc != oracle::dih_center(g)) r.fail(s.to_string() + " center");

    for (std::int64_t x = 0; x < g.n; ++x)
      if (oracle::dih_centralizer_order(g, g.n + x) != predicted_reflection_centralizer_order(s))
        r.fail(s.to_string() + " reflection centralizer");

    ClassProfile seen;
    std::map<std::size_t, std::int64_t> reflection_sizes;
    for (const auto& c : oracle::dih_classes(g)) {
      if (c.size() == 1) ++seen.singleton_count;
      else if (c.front() < g.n && c.size() == 2) ++seen.pair_count;
      else if (c.front() >= g.n) ++reflection_sizes[c.size()];
      else r.fail(s.to_string() + " rotation class larger than 2");
    }
    const ClassProfile p = predicted_class_profile(s);
    if (reflection_sizes.size() != 1) r.fail(s.to_string() + " reflection classes of mixed size");
    else {
      seen.large_size = static_cast<std::int64_t>(reflection_sizes.begin()->first);
      seen.large_count = reflection_sizes.begin()->second;
    }
    const std::int64_t k = static_cast<std::int64_t>(s.even_count());
    if (seen.singleton_count != (std::int64_t{1} << k) || seen.pair_count != (s.order() - (std::int64_t{1} << k)) / 2 ||
        seen.large_count != (std::int64_t{1} << k) || seen.large_size != g.size() / (std::int64_t{2} << k))
      r.fail(s.to_string() + " profile vs formula");
    if (p.singleton_count != seen.singleton_count || p.pair_count != seen.pair_count ||
        p.large_count != seen.large_count || p.large_size != seen.large_size)
      r.fail(s.to_string() + " predicted profile");
  }
  r.detail = r.pass ? std::to_string(n) + " groups" : r.detail;
  return r;
}

Outcome table_validity() {
  Outcome r;
  int n = 0;
  double worst_orth = 0.0, worst_brute = 0.0;
  for (const auto& s : sweep_specs(64)) {
    if (s.is_elementary_two()) continue;
    ++n;
    const CharacterTable t = build_dih_table(s);
    const auto v = check_table(t);
    if (v.degree_square_sum != 2 * s.order() || !v.square) r.fail(s.to_string() + " degrees");
    worst_orth = std::max({worst_orth, v.row_residual, v.column_residual});
    if (s.order() > 16) continue;
    const oracle::Dih g(s.moduli());
    const auto classes = oracle::dih_classes(g);
    const auto brute = oracle::burnside_table(g, classes);
    if (brute.size() != t.irreps().size()) {
      r.fail(s.to_string() + " brute-force irrep count");
      continue;
    }
    std::vector<std::size_t> lib(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const auto x = classes[c].front();
      lib[c] = t.class_index({GroupElement{oracle::unrank(x % g.n, s.moduli())}, x >= g.n});
    }
    std::vector<bool> used(t.irreps().size(), false);
    for (const auto& row : brute) {
      double best = 1e300;
      std::size_t bi = 0;
      for (std::size_t i = 0; i < t.irreps().size(); ++i) {
        double dev = 0.0;
        for (std::size_t c = 0; c < classes.size(); ++c) dev = std::max(dev, std::abs(row[c] - t.value(i, lib[c])));
        if (dev < best) best = dev, bi = i;
      }
      if (used[bi]) r.fail(s.to_string() + " brute-force rows collide");
      used[bi] = true;
      worst_brute = std::max(worst_brute, best);
    }
  }
  if (worst_orth >= kOrthogonalityTol) r.fail("orthogonality residual " + std::to_string(worst_orth));
  if (worst_brute >= kBruteTableTol) r.fail("brute-force deviation " + std::to_string(worst_brute));
  if (r.pass) {
    std::ostringstream os;
    os << n << " groups, orthogonality " << worst_orth << ", brute-force " << worst_brute;
    r.detail = os.str();
  }
  return r;
}

Outcome right_ideals() {
  Outcome r;
  int n = 0;
  double worst = 0.0;
  for (const auto& s : sweep_specs(40)) {
    ++n;
    const auto d = run(s);
    const auto re = verify_right_ideals(d, Field::real);
    const auto cx = verify_right_ideals(d, Field::complex);
    for (const auto* v : {&re, &cx}) {
      worst = std::max({worst, v->idempotent_residual, v->completeness_residual, v->closure_residual});
      if (!v->ranks_match) r.fail(s.to_string() + " " + to_string(v->field) + " ranks");
    }
    if (re.orbits.size() != cx.orbits.size()) r.fail(s.to_string() + " shapes");
    for (std::size_t o = 0; o < std::min(re.orbits.size(), cx.orbits.size()); ++o) {
      if (re.orbits[o].ranks != cx.orbits[o].ranks) r.fail(s.to_string() + " real/complex ranks differ");
      std::int64_t expected_total = 0;
      const auto t = identified_table(d.actions[o]);
      for (std::size_t i = 0; i < t.irreps().size(); ++i)
        expected_total += t.irreps()[i].degree() * d.report.orbits[o].multiplicities[i];
      if (re.orbits[o].ranks != re.orbits[o].expected_ranks) r.fail(s.to_string() + " rank != deg*mult");
      if (expected_total != static_cast<std::int64_t>(d.actions[o].size())) r.fail(s.to_string() + " rank sum");
    }
  }
  if (worst >= kResidualTol) r.fail("residual " + std::to_string(worst));
  if (r.pass) {
    std::ostringstream os;
    os << n << " quandles, max residual " << worst;
    r.detail = os.str();
  }
  return r;
}

Outcome structural_sweep() {
  Outcome r;
  const auto t0 = Clock::now();
  std::string out;
  const int code = cli({"verify", "--max-order", "64", "--format", "json"}, out);
  const double sec = seconds_since(t0);
  const json j = json::parse(out);
  if (code != 0 || !j["all_pass"].get<bool>()) {
    r.fail(j["failures"].empty() ? "nonzero exit" : j["failures"][0].dump());
  }
  const std::vector<std::string> required{"right_map_involution", "order_law", "factorization", "inn_certificate",
                                          "orbit_certificates"};
  for (const auto& name : required) {
    if (std::find(j["checks"].begin(), j["checks"].end(), name) == j["checks"].end()) r.fail("missing check " + name);
  }
  for (const auto& s : j["specs"]) {
    for (const auto& name : required)
      if (!s["checks"].contains(name) || !s["checks"][name].get<bool>())
        r.fail(s["spec"].get<std::string>() + " " + name);
  }
  // |Inn(T)| = 2 |2H| directly, outside elementary two-groups.
  for (const auto& s : sweep_specs(64)) {
    if (s.is_elementary_two()) continue;
    const auto d = run(s);
    if (static_cast<std::int64_t>(d.report.inn_order) != 2 * GroupSpec(doubled(s)).order())
      r.fail(s.to_string() + " |Inn(T)|");
  }
  if (sec >= kBudgetSweep) r.fail("runtime " + std::to_string(sec) + " s");
  if (r.pass) {
    std::ostringstream os;
    os << j["spec_count"].get<int>() << " specs in " << sec << " s";
    r.detail = os.str();
  }
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 worked example: four 18-element orbits of Z_4 x Z_6 x Z_3", worked_example},
      {"2 odd case: 1 + (|H|-1)/2 summands, |H| <= 63", odd_theorem},
      {"3 even case: per-orbit 1- and 2-dimensional counts, |H| <= 64", even_theorem},
      {"4 special case: only one-dimensional summands, |H| <= 64", special_theorem},
      {"5 fixed-point characters equal the closed forms, |H| <= 64", character_lemmas},
      {"6 center, centralizers, class profile vs brute force, |H| <= 32", dih_oracle},
      {"7 character table validity and brute-force agreement", table_validity},
      {"8 isotypic projectors and right-ideal closure, real and complex, |T| <= 40", right_ideals},
      {"9 structural sweep: verify --max-order 64", structural_sweep},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double sec = seconds_since(t0);
    std::printf("%s  criterion %s  [%.2f s]  %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), sec, o.detail.c_str());
    failures += !o.pass;
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
