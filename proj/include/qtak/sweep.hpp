#pragma once

// Batch verification over every presentation of a finite abelian group up to a
// given order.

#include <cstdint>
#include <string>
#include <vector>

#include "qtak/abelian.hpp"
#include "qtak/decomposer.hpp"

namespace qtak {

// Non-decreasing moduli >= 2 with product <= max_order, plus the order-1
// group {1}; sorted by order, then moduli.
std::vector<GroupSpec> sweep_specs(std::int64_t max_order);

// Brute force on Dih(H) (regular action, perm_group) against the closed-form
// center, class profile, reflection centralizers and Cl(h) = {h, -h}.
// Elementary 2-groups are reported as skipped.
struct DihPredictionCheck {
  bool skipped = false;
  bool center = false;
  bool class_profile = false;
  bool centralizers = false;
  bool inverse_classes = false;
  ClassProfile observed;

  bool pass() const { return skipped || (center && class_profile && centralizers && inverse_classes); }
};
DihPredictionCheck check_dih_predictions(const GroupSpec& spec);

struct SweepOptions {
  std::int64_t max_order = 24;
  Field field = Field::real;
  Tolerances tol;
  unsigned threads = 0;  // 0: hardware concurrency
  bool projectors = true;
};

struct SpecResult {
  std::string spec;
  std::int64_t order = 0;
  CaseTag case_tag = CaseTag::odd;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool pass() const;
};

struct SweepResult {
  std::vector<SpecResult> specs;
  double seconds = 0.0;

  bool all_pass() const;
  // Check names across all specs, in order of first appearance.
  std::vector<std::string> check_names() const;
};

SpecResult verify_spec(const GroupSpec& spec, const SweepOptions& options);
SweepResult run_sweep(const SweepOptions& options);

}  // namespace qtak
