#include "qtak/char_table.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qtak/error.hpp"

namespace qtak {

namespace {

// Reflection-coset class representative: h reduced mod 2H, i.e. the parity
// vector on even moduli and 0 on odd ones.
GroupElement reflection_class_key(const GroupElement& h, const GroupSpec& spec) {
  GroupElement key = h;
  for (std::size_t j = 0; j < spec.rank(); ++j) {
    key.coords[j] = spec.modulus(j) % 2 == 0 ? h.coords[j] % 2 : 0;
  }
  return key;
}

}  // namespace

std::string to_string(IrrepKind kind) {
  switch (kind) {
    case IrrepKind::linear_plus: return "linear_plus";
    case IrrepKind::linear_minus: return "linear_minus";
    case IrrepKind::degree_two: return "degree_two";
  }
  return "?";
}

std::string Irrep::name() const {
  switch (kind) {
    case IrrepKind::linear_plus: return "phi+" + format_element(label);
    case IrrepKind::linear_minus: return "phi-" + format_element(label);
    case IrrepKind::degree_two: return "psi" + format_element(label);
  }
  return "?";
}

CharacterTable::CharacterTable(GroupSpec abelian, TableFamily family)
    : abelian_(std::move(abelian)), family_(family) {}

std::size_t CharacterTable::class_index(const DihElement& x) const {
  if (family_ == TableFamily::elementary && x.flip) {
    throw ValidationError("elementary abelian table has no reflection coset");
  }
  return class_of_.at(dih_index(x, abelian_));
}

std::string CharacterTable::format() const {
  std::ostringstream os;
  os << (family_ == TableFamily::dihedral ? "Dih(" + abelian_.pretty() + ")" : abelian_.pretty())
     << ", order " << group_order_ << ", " << classes_.size() << " classes\n";
  os << std::setw(16) << "class";
  for (const auto& c : classes_) os << std::setw(12) << c.representative.to_string();
  os << '\n' << std::setw(16) << "size";
  for (const auto& c : classes_) os << std::setw(12) << c.size;
  os << '\n';
  for (std::size_t i = 0; i < irreps_.size(); ++i) {
    os << std::setw(16) << irreps_[i].name();
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      std::ostringstream cell;
      if (exact_[i][c]) {
        cell << static_cast<long long>(values_[i][c]);
      } else {
        cell << std::fixed << std::setprecision(6) << values_[i][c];
      }
      os << std::setw(12) << cell.str();
    }
    os << '\n';
  }
  return os.str();
}

CharacterPairs character_pairs(const GroupSpec& spec) {
  CharacterPairs out;
  for (const auto& i : enumerate(spec)) {
    const GroupElement neg = group_neg(i, spec);
    if (neg == i) {
      out.real.push_back(i);
    } else if (i < neg) {
      out.conjugate.emplace_back(i, neg);
    }
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> pairing_fraction(const GroupElement& label,
                                                        const GroupElement& m,
                                                        const GroupSpec& spec) {
  std::int64_t denom = 1;
  for (const auto n : spec.moduli()) denom = std::lcm(denom, n);
  std::int64_t numer = 0;
  for (std::size_t j = 0; j < spec.rank(); ++j) {
    numer = (numer + label.coords[j] * m.coords[j] % spec.modulus(j) * (denom / spec.modulus(j))) % denom;
  }
  const std::int64_t g = std::gcd(numer, denom);
  return {numer / g, denom / g};
}

double two_cos_fraction(std::int64_t p, std::int64_t q, bool* is_exact) {
  p %= q;
  if (p < 0) p += q;
  double value = 0.0;
  bool exact = true;
  // 2cos(2 pi p/q) is rational exactly when q divides 4 or 6.
  switch (q) {
    case 1: value = 2.0; break;
    case 2: value = -2.0; break;
    case 3: value = -1.0; break;
    case 4: value = 0.0; break;
    case 6: value = 1.0; break;
    default:
      exact = false;
      value = 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(q));
  }
  if (is_exact) *is_exact = exact;
  return value;
}

CharacterTable build_dih_table(const GroupSpec& spec) {
  if (spec.is_elementary_two()) {
    throw ValidationError("Dih(" + spec.pretty() +
                          ") is abelian; use build_elementary_table for elementary 2-groups");
  }
  CharacterTable t(spec, TableFamily::dihedral);
  const auto h_order = static_cast<std::size_t>(spec.order());
  t.group_order_ = 2 * h_order;
  const auto elements = enumerate(spec);

  // Classes: {h, -h} by smaller representative (identity first), then the
  // reflection cosets h + 2H.
  t.class_of_.assign(2 * h_order, 0);
  for (const auto& h : elements) {
    const GroupElement neg = group_neg(h, spec);
    if (neg < h) continue;
    const std::size_t c = t.classes_.size();
    t.classes_.push_back({{h, false}, neg == h ? 1u : 2u});
    t.class_of_[element_index(h, spec)] = c;
    t.class_of_[element_index(neg, spec)] = c;
  }
  const std::size_t reflection_size = h_order >> spec.even_count();
  std::vector<std::size_t> reflection_class(h_order, static_cast<std::size_t>(-1));
  for (const auto& h : elements) {
    const GroupElement key = reflection_class_key(h, spec);
    const std::size_t key_index = element_index(key, spec);
    if (reflection_class[key_index] == static_cast<std::size_t>(-1)) {
      reflection_class[key_index] = t.classes_.size();
      t.classes_.push_back({{key, true}, reflection_size});
    }
    t.class_of_[h_order + element_index(h, spec)] = reflection_class[key_index];
  }

  const CharacterPairs pairs = character_pairs(spec);
  for (const auto& r : pairs.real) t.irreps_.push_back({IrrepKind::linear_plus, r});
  for (const auto& r : pairs.real) t.irreps_.push_back({IrrepKind::linear_minus, r});
  for (const auto& pr : pairs.conjugate) t.irreps_.push_back({IrrepKind::degree_two, pr.first});

  for (const auto& irrep : t.irreps_) {
    std::vector<double> row;
    std::vector<bool> exact_row;
    for (const auto& cls : t.classes_) {
      const auto& rep = cls.representative;
      const auto [p, q] = pairing_fraction(irrep.label, rep.h, spec);
      if (irrep.kind == IrrepKind::degree_two) {
        if (rep.flip) {
          row.push_back(0.0);
          exact_row.push_back(true);
        } else {
          bool exact = false;
          row.push_back(two_cos_fraction(p, q, &exact));
          exact_row.push_back(exact);
        }
      } else {
        // q is 1 or 2 for a +-1-valued character
        double v = q == 1 ? 1.0 : -1.0;
        if (rep.flip && irrep.kind == IrrepKind::linear_minus) v = -v;
        row.push_back(v);
        exact_row.push_back(true);
      }
    }
    t.values_.push_back(std::move(row));
    t.exact_.push_back(std::move(exact_row));
  }
  return t;
}

CharacterTable build_elementary_table(const GroupSpec& spec) {
  if (!spec.is_elementary_two()) {
    throw ValidationError(spec.pretty() + " is not an elementary abelian 2-group");
  }
  CharacterTable t(spec, TableFamily::elementary);
  t.group_order_ = static_cast<std::size_t>(spec.order());
  const auto elements = enumerate(spec);
  t.class_of_.assign(2 * t.group_order_, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    t.classes_.push_back({{elements[i], false}, 1});
    t.class_of_[i] = i;
  }
  for (const auto& label : elements) {
    t.irreps_.push_back({IrrepKind::linear_plus, label});
    std::vector<double> row;
    for (const auto& m : elements) {
      const auto [p, q] = pairing_fraction(label, m, spec);
      row.push_back(q == 1 ? 1.0 : -1.0);
    }
    t.values_.push_back(std::move(row));
    t.exact_.emplace_back(elements.size(), true);
  }
  return t;
}

double inner_product(std::span<const double> a, std::span<const double> b,
                     const CharacterTable& table) {
  const auto& classes = table.classes();
  if (a.size() != classes.size() || b.size() != classes.size()) {
    throw StructuralError("class function length does not match the table's " +
                          std::to_string(classes.size()) + " classes");
  }
  double sum = 0.0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    sum += static_cast<double>(classes[c].size) * a[c] * b[c];
  }
  return sum / static_cast<double>(table.group_order());
}

TableValidity check_table(const CharacterTable& table) {
  TableValidity v;
  const auto& irreps = table.irreps();
  const auto& classes = table.classes();
  v.square = irreps.size() == classes.size();
  for (const auto& irrep : irreps) v.degree_square_sum += irrep.degree() * irrep.degree();
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    for (std::size_t j = i; j < irreps.size(); ++j) {
      const double ip = inner_product(table.values()[i], table.values()[j], table);
      v.row_residual = std::max(v.row_residual, std::fabs(ip - (i == j ? 1.0 : 0.0)));
    }
  }
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = a; b < classes.size(); ++b) {
      double sum = 0.0;
      for (std::size_t i = 0; i < irreps.size(); ++i) sum += table.value(i, a) * table.value(i, b);
      const double expected =
          a == b ? static_cast<double>(table.group_order()) / static_cast<double>(classes[a].size) : 0.0;
      v.column_residual = std::max(v.column_residual, std::fabs(sum - expected));
    }
  }
  return v;
}

}  // namespace qtak
