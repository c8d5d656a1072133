#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qtak/abelian.hpp"
#include "qtak/dihedral.hpp"

namespace qtak {

enum class IrrepKind { linear_plus, linear_minus, degree_two };
std::string to_string(IrrepKind kind);

// An irreducible character of Dih(H) (or of an elementary abelian 2-group).
// `label` is the exponent tuple of the character of H it comes from: for
// linear kinds a +-1-valued character extended by s -> +1 or s -> -1; for
// degree_two the lexicographically smaller member of the pair {i, -i}.
struct Irrep {
  IrrepKind kind;
  GroupElement label;

  int degree() const noexcept { return kind == IrrepKind::degree_two ? 2 : 1; }
  std::string name() const;
};

struct ClassInfo {
  DihElement representative;
  std::size_t size;
};

enum class TableFamily { dihedral, elementary };

class CharacterTable {
 public:
  CharacterTable(GroupSpec abelian, TableFamily family);

  const GroupSpec& abelian_part() const noexcept { return abelian_; }
  TableFamily family() const noexcept { return family_; }
  std::size_t group_order() const noexcept { return group_order_; }
  const std::vector<ClassInfo>& classes() const noexcept { return classes_; }
  const std::vector<Irrep>& irreps() const noexcept { return irreps_; }

  // values()[irrep][class]
  const std::vector<std::vector<double>>& values() const noexcept { return values_; }
  double value(std::size_t irrep, std::size_t cls) const { return values_.at(irrep).at(cls); }
  // True where the stored value is an exact integer rather than a rounded cosine.
  bool exact(std::size_t irrep, std::size_t cls) const { return exact_.at(irrep).at(cls); }

  // Class of an abstract group element; elementary tables accept flip = 0 only.
  std::size_t class_index(const DihElement& x) const;
  std::size_t identity_class() const { return class_index(dih_identity(abelian_)); }

  std::string format() const;

 private:
  friend CharacterTable build_dih_table(const GroupSpec& spec);
  friend CharacterTable build_elementary_table(const GroupSpec& spec);

  GroupSpec abelian_;
  TableFamily family_;
  std::size_t group_order_ = 0;
  std::vector<ClassInfo> classes_;
  std::vector<Irrep> irreps_;
  std::vector<std::vector<double>> values_;
  std::vector<std::vector<bool>> exact_;
  std::vector<std::size_t> class_of_;  // by dih_index (elementary: element_index)
};

struct CharacterPairs {
  std::vector<GroupElement> real;                              // 2i = 0; 2^k of them
  std::vector<std::pair<GroupElement, GroupElement>> conjugate; // {i, -i}, smaller first
};

// Splits the |H| linear characters of H (indexed by exponent tuples) into the
// +-1-valued ones and unordered complex-conjugate pairs.
CharacterPairs character_pairs(const GroupSpec& spec);

// exp(2 pi i <label, m>) as the pair (numerator, denominator) of the reduced
// fraction <label, m> = sum_j label_j m_j / n_j mod 1.
std::pair<std::int64_t, std::int64_t> pairing_fraction(const GroupElement& label,
                                                        const GroupElement& m,
                                                        const GroupSpec& spec);
// 2 cos(2 pi p / q), exact for q in {1, 2, 3, 4, 6}.
double two_cos_fraction(std::int64_t p, std::int64_t q, bool* is_exact = nullptr);

// Character table of Dih(spec). Throws ValidationError for elementary abelian
// 2-groups (use build_elementary_table).
CharacterTable build_dih_table(const GroupSpec& spec);
// Character table of an abelian group with every modulus in {1, 2}.
CharacterTable build_elementary_table(const GroupSpec& spec);

// (1/|G|) sum over classes of |C| a(C) b(C); all characters here are real.
double inner_product(std::span<const double> a, std::span<const double> b,
                     const CharacterTable& table);

struct TableValidity {
  std::int64_t degree_square_sum = 0;
  double row_residual = 0.0;     // max |<chi_i, chi_j> - delta_ij|
  double column_residual = 0.0;  // max |sum_chi chi(a) chi(b) - delta_ab |G|/|C_a||
  bool square = false;           // #irreps == #classes
};

TableValidity check_table(const CharacterTable& table);

}  // namespace qtak
