#include "qtak/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <thread>

#include "qtak/dihedral.hpp"
#include "qtak/perm_group.hpp"

namespace qtak {

namespace {

void extend_specs(std::vector<std::int64_t>& prefix, std::int64_t min_factor, std::int64_t product,
                  std::int64_t max_order, std::vector<GroupSpec>& out) {
  for (std::int64_t n = min_factor; product * n <= max_order; ++n) {
    prefix.push_back(n);
    out.emplace_back(prefix);
    extend_specs(prefix, n, product * n, max_order, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<GroupSpec> sweep_specs(std::int64_t max_order) {
  std::vector<GroupSpec> out;
  if (max_order < 1) return out;
  out.emplace_back(std::vector<std::int64_t>{1});
  std::vector<std::int64_t> prefix;
  extend_specs(prefix, 2, 1, max_order, out);
  std::stable_sort(out.begin(), out.end(), [](const GroupSpec& a, const GroupSpec& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.moduli() < b.moduli();
  });
  return out;
}

DihPredictionCheck check_dih_predictions(const GroupSpec& spec) {
  DihPredictionCheck out;
  if (spec.is_elementary_two()) {
    out.skipped = true;
    return out;
  }
  const PermGroup g = closure(regular_action_generators(spec), static_cast<std::size_t>(4 * spec.order()));
  // Left-regular permutations send the identity (index 0) to the element itself.
  auto element_of = [&](std::size_t e) { return dih_at(g.element(e)(0), spec); };

  std::set<DihElement> brute_center;
  for (const auto e : center(g)) brute_center.insert(element_of(e));
  const auto predicted = predicted_center(spec);
  out.center = brute_center == std::set<DihElement>(predicted.elements.begin(), predicted.elements.end());

  ClassProfile observed;
  bool uniform = true;
  out.inverse_classes = true;
  for (const auto& cls : g.classes()) {
    const DihElement rep = element_of(cls.members.front());
    if (!rep.flip) {
      if (cls.members.size() == 1) ++observed.singleton_count;
      else if (cls.members.size() == 2) ++observed.pair_count;
      std::set<DihElement> members;
      for (const auto m : cls.members) members.insert(element_of(m));
      const std::set<DihElement> expected{rep, dih_inverse(rep, spec)};
      out.inverse_classes = out.inverse_classes && members == expected;
    } else {
      if (observed.large_count > 0 && observed.large_size != static_cast<std::int64_t>(cls.members.size())) {
        uniform = false;
      }
      ++observed.large_count;
      observed.large_size = static_cast<std::int64_t>(cls.members.size());
    }
  }
  out.observed = observed;
  out.class_profile = uniform && observed == predicted_class_profile(spec);

  out.centralizers = true;
  const std::int64_t expected_order = predicted_reflection_centralizer_order(spec);
  for (const auto& h : enumerate(spec)) {
    const auto c = centralizer(g, regular_action({h, true}, spec));
    out.centralizers = out.centralizers && static_cast<std::int64_t>(c.size()) == expected_order;
  }
  return out;
}

bool SpecResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool SweepResult::all_pass() const {
  return std::all_of(specs.begin(), specs.end(), [](const SpecResult& s) { return s.pass(); });
}

std::vector<std::string> SweepResult::check_names() const {
  std::vector<std::string> names;
  for (const auto& s : specs) {
    for (const auto& c : s.checks) {
      if (std::find(names.begin(), names.end(), c.name) == names.end()) names.push_back(c.name);
    }
  }
  return names;
}

SpecResult verify_spec(const GroupSpec& spec, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SpecResult result;
  result.spec = spec.to_string();
  result.order = spec.order();
  result.case_tag = detect_case(spec);
  try {
    DecomposeOptions dopts;
    dopts.tol = options.tol;
    dopts.verify_field = options.projectors ? std::optional<Field>(options.field) : std::nullopt;
    Decomposition dec = decompose(spec, dopts);
    result.checks = dec.report.checks;
    const DihPredictionCheck dih = check_dih_predictions(spec);
    result.checks.push_back({"class_profile", dih.pass(), 0.0,
                             dih.skipped ? "skipped: Dih(H) abelian"
                                         : (dih.pass() ? "" : "center/profile/centralizer mismatch")});
  } catch (const std::exception& e) {
    result.checks.push_back({"pipeline", false, 0.0, e.what()});
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

SweepResult run_sweep(const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto specs = sweep_specs(options.max_order);
  SweepResult result;
  result.specs.resize(specs.size());

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, specs.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      result.specs[i] = verify_spec(specs[i], options);
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace qtak
