#pragma once

// Decomposition of the quandle ring K[T] of a Takasaki quandle into simple
// right ideals, orbit by orbit, through the permutation character of each
// orbit's inner automorphism group.
//
// Naming: for H = prod Z_{n_i}, `even_count` is the number of even n_i (the
// orbit count is 2^even_count), `doubly_even_count` the number with 4 | n_i
// and `singly_even_count` the number with n_i = 2 mod 4. The abstract group
// acting on every orbit is Dih(2H) (or 2H itself when the reflection acts
// trivially); its own even count is doubly_even_count.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtak/abelian.hpp"
#include "qtak/char_table.hpp"
#include "qtak/perm_group.hpp"
#include "qtak/quandle.hpp"

namespace qtak {

enum class CaseTag {
  odd,                 // every modulus odd
  even_general,        // some even modulus, not covered below
  special,             // moduli in {1, 2, 4}, at least one 4
  trivial_degenerate,  // moduli in {1, 2}: the trivial quandle
};
std::string to_string(CaseTag tag);
CaseTag detect_case(const GroupSpec& spec);

enum class Field { real, complex };
std::string to_string(Field field);

struct Tolerances {
  double multiplicity = 1e-6;  // |<chi, chi_i> - round| gate
  double residual = 1e-8;      // projector and closure residuals
  double rank = 1e-6;          // singular value threshold
};

struct OrbitAction {
  std::size_t id = 0;
  GroupElement label;                        // parity pattern; also the orbit's minimum
  std::vector<std::uint32_t> points;         // sorted quandle indices
  std::vector<Permutation> restricted_maps;  // [j] = R_j restricted, on local indices
  PermGroup inn;
  PresentationCertificate identification;
  CaseTag case_tag = CaseTag::odd;

  std::size_t size() const noexcept { return points.size(); }
  std::string name() const;  // "X_(0,1,0)"
};

// One action per orbit, ordered by minimum element. The orbit through c (its
// parity-pattern minimum) is identified with Dih(2H) via
//   r_i -> R_{c+e_i} R_c,  s -> R_c   (restricted to the orbit),
// which is the e_0-based generator choice shifted to the orbit.
// Throws PredictionViolated if an identification fails.
std::vector<OrbitAction> orbit_actions(const Quandle& q);

// Inn(T) with its certificate against Dih(2H) under r_i -> R_{e_i} R_{e_0},
// s -> R_{e_0}.
struct InnerAutomorphisms {
  PermGroup group;
  PresentationCertificate certificate;
};
InnerAutomorphisms inner_automorphisms(const Quandle& q);

// The table of the abstract group an orbit was identified with.
CharacterTable identified_table(const OrbitAction& action);

// Class functions on the classes of a CharacterTable.
struct Character {
  std::vector<std::int64_t> values;

  std::vector<double> as_reals() const { return {values.begin(), values.end()}; }
  bool operator==(const Character&) const = default;
};

// Fixed points per class; throws VerificationFailure if two elements of one
// class fix different numbers of points.
Character permutation_character(const OrbitAction& action, const CharacterTable& table);

// Closed form: |orbit| at 1; 2^k on the class of s (k = even count of 2H) when
// s acts nontrivially; 0 elsewhere.
Character predicted_character(const OrbitAction& action, const CharacterTable& table);

struct Multiplicities {
  std::vector<std::int64_t> d;     // per irrep of the table
  double norm = 0.0;               // <chi, chi>
  std::int64_t square_sum = 0;     // sum d_i^2
  std::int64_t dimension = 0;      // sum d_i deg_i
  double rounding_error = 0.0;     // max |<chi, chi_i> - d_i|
};

// d_i = round(<chi, chi_i>). Throws VerificationFailure if a value is not
// within tol of an integer or if sum d_i deg_i != orbit_size.
Multiplicities multiplicities(const Character& ch, const CharacterTable& table,
                              std::size_t orbit_size, double tol = 1e-6);

// 1 on linear_plus and degree_two irreps, 0 on linear_minus.
std::vector<std::int64_t> predicted_multiplicities(const CharacterTable& table);
// Number of simple right ideals in K[T] predicted from the moduli alone.
std::int64_t predicted_summand_count(const GroupSpec& spec);

struct Check {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  std::string detail;
};

struct OrbitRecord {
  std::size_t id = 0;
  GroupElement label;
  std::vector<std::uint32_t> points;
  CaseTag case_tag = CaseTag::odd;
  std::size_t inn_order = 0;
  bool certificate_verified = false;
  bool reflection_identity = false;
  Character permutation_character;
  Character predicted_character;
  std::vector<std::int64_t> multiplicities;
  std::vector<int> dims;  // one entry per simple summand
  std::vector<std::int64_t> projector_ranks;
};

struct DecompositionReport {
  GroupSpec spec;
  CaseTag case_tag;
  std::size_t inn_order = 0;
  CharacterTable table;
  std::vector<OrbitRecord> orbits;
  std::int64_t total_summands = 0;
  std::int64_t total_dimension = 0;
  std::optional<Field> verified_field;
  std::vector<Check> checks;

  bool all_pass() const;
  const Check* find_check(const std::string& name) const;
};

struct OrbitVerification {
  std::vector<std::int64_t> ranks;
  std::vector<std::int64_t> expected_ranks;
  double idempotent_residual = 0.0;
  double completeness_residual = 0.0;
  double closure_residual = 0.0;
};

struct VerificationRecord {
  Field field = Field::real;
  std::vector<OrbitVerification> orbits;
  double idempotent_residual = 0.0;
  double completeness_residual = 0.0;
  double closure_residual = 0.0;
  bool ranks_match = true;

  bool pass(const Tolerances& tol) const;
};

struct Decomposition {
  Quandle quandle;
  std::vector<OrbitAction> actions;
  DecompositionReport report;
};

struct DecomposeOptions {
  std::optional<Field> verify_field = Field::real;  // nullopt skips projector checks
  Tolerances tol;
};

// Runs the full pipeline and records every check in report.checks. Throws
// only on structural breakdowns (PredictionViolated, VerificationFailure,
// CapacityError); check failures are reported, not thrown.
Decomposition decompose(const GroupSpec& spec, const DecomposeOptions& options = {});

// Builds isotypic projectors p_i = (deg_i/|G|) sum_g chi_i(g) M(g) per orbit and
// measures idempotency, completeness, rank = deg_i * d_i, and closure
// (I - p_i) M(R_x) p_i = 0 under every right translation R_x.
VerificationRecord verify_right_ideals(const Decomposition& dec, Field field,
                                       const Tolerances& tol = {});

}  // namespace qtak
