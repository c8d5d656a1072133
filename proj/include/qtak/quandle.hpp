#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qtak/abelian.hpp"
#include "qtak/permutation.hpp"

namespace qtak {

// Largest quandle order the constructors accept. Defaults to 512; the
// environment variable QTAK_MAX_GROUP_ORDER overrides it.
std::size_t max_quandle_order();

// A finite magma stored as a dense Cayley table: op(i, j) = x_i |> x_j.
// Construction only checks that entries are in range; use check_axioms to
// test the quandle axioms.
class Quandle {
 public:
  Quandle(std::size_t size, std::vector<std::uint32_t> table, std::vector<std::string> labels,
          std::optional<GroupSpec> spec = std::nullopt);

  std::size_t size() const noexcept { return size_; }
  std::uint32_t op(std::size_t i, std::size_t j) const { return table_[i * size_ + j]; }
  const std::vector<std::uint32_t>& table() const noexcept { return table_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // Present for Takasaki quandles; element indices follow the enumeration order
  // of the group.
  const std::optional<GroupSpec>& spec() const noexcept { return spec_; }
  std::size_t element_index(const GroupElement& x) const;

 private:
  std::size_t size_;
  std::vector<std::uint32_t> table_;
  std::vector<std::string> labels_;
  std::optional<GroupSpec> spec_;
};

// x |> y = 2y - x on the abelian group `spec`.
Quandle takasaki(const GroupSpec& spec);
// a |> b = 2b - a (mod n); identical to takasaki({n}).
Quandle dihedral(std::int64_t n);
// x_i |> x_j = x_i.
Quandle trivial(std::int64_t n);
// Component-wise operation on pairs, indexed row-major: (a, b) -> a * |B| + b.
Quandle direct_product(const Quandle& a, const Quandle& b);

struct AxiomReport {
  bool idempotent = true;          // x |> x = x
  bool right_invertible = true;    // every right translation is a bijection
  bool self_distributive = true;   // (x |> y) |> z = (x |> z) |> (y |> z)

  // First witness for each failed axiom.
  std::optional<std::size_t> idempotent_witness;                              // x
  std::optional<std::array<std::size_t, 3>> right_invertible_witness;         // (x1, x2, y), x1 |> y = x2 |> y
  std::optional<std::array<std::size_t, 3>> self_distributive_witness;        // (x, y, z)

  bool all_pass() const noexcept { return idempotent && right_invertible && self_distributive; }
  std::string describe() const;
};

AxiomReport check_axioms(const Quandle& q);

// R_j : i -> i |> j. Throws IndexError if j is out of range, ValidationError if
// the column is not a bijection.
Permutation right_map(const Quandle& q, std::size_t j);
std::vector<Permutation> right_maps(const Quandle& q);

// Structural facts about right translations of a Takasaki quandle.
struct TakasakiLemmaReport {
  bool involutions = true;    // R_j o R_j = id for every j
  bool order_law = true;      // ord(R_{e_i} R_{e_0}) = n_i (odd) or n_i / 2 (even)
  bool factorization = true;  // R_j = (prod_i (R_{e_i} R_{e_0})^{j_i}) R_{e_0}
  std::string failure;

  bool all_pass() const noexcept { return involutions && order_law && factorization; }
};

// Requires q.spec().
TakasakiLemmaReport check_takasaki_lemmas(const Quandle& q);

// Text format: first line n, then n rows of n space-separated 0-based indices.
void write_cayley_table(std::ostream& os, const Quandle& q);
Quandle read_cayley_table(std::istream& is);

}  // namespace qtak
