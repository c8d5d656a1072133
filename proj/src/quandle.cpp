#include "qtak/quandle.hpp"

#include <array>
#include <charconv>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "qtak/error.hpp"

namespace qtak {

namespace {

void check_order_cap(std::size_t n) {
  const std::size_t cap = max_quandle_order();
  if (n > cap) {
    throw CapacityError("quandle order " + std::to_string(n) + " exceeds the construction cap " +
                            std::to_string(cap) + " (set QTAK_MAX_GROUP_ORDER to raise it)",
                        n);
  }
}

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

std::size_t max_quandle_order() {
  if (const char* env = std::getenv("QTAK_MAX_GROUP_ORDER")) {
    std::size_t value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) return value;
  }
  return 512;
}

Quandle::Quandle(std::size_t size, std::vector<std::uint32_t> table,
                 std::vector<std::string> labels, std::optional<GroupSpec> spec)
    : size_(size), table_(std::move(table)), labels_(std::move(labels)), spec_(std::move(spec)) {
  if (table_.size() != size_ * size_) {
    throw StructuralError("Cayley table has " + std::to_string(table_.size()) +
                          " entries, expected " + std::to_string(size_ * size_));
  }
  if (labels_.size() != size_) throw StructuralError("label count does not match quandle order");
  for (const auto v : table_) {
    if (v >= size_) throw ValidationError("Cayley table entry " + std::to_string(v) + " out of range");
  }
  if (spec_ && static_cast<std::size_t>(spec_->order()) != size_) {
    throw StructuralError("group spec order does not match quandle order");
  }
}

std::size_t Quandle::element_index(const GroupElement& x) const {
  if (!spec_) throw ValidationError("quandle has no underlying group");
  return qtak::element_index(x, *spec_);
}

Quandle takasaki(const GroupSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.order());
  check_order_cap(n);
  const auto elements = enumerate(spec);
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const GroupElement prod = group_sub(group_scale(elements[j], 2, spec), elements[i], spec);
      table[i * n + j] = static_cast<std::uint32_t>(qtak::element_index(prod, spec));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elements) labels.push_back(format_element(e));
  return Quandle(n, std::move(table), std::move(labels), spec);
}

Quandle dihedral(std::int64_t n) {
  if (n <= 0) throw ValidationError("dihedral quandle order must be ≥ 1");
  return takasaki(GroupSpec({n}));
}

Quandle trivial(std::int64_t n) {
  if (n <= 0) throw ValidationError("trivial quandle order must be ≥ 1");
  const auto size = static_cast<std::size_t>(n);
  check_order_cap(size);
  std::vector<std::uint32_t> table(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) table[i * size + j] = static_cast<std::uint32_t>(i);
  }
  return Quandle(size, std::move(table), index_labels(size));
}

Quandle direct_product(const Quandle& a, const Quandle& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t n = na * nb;
  check_order_cap(n);
  std::vector<std::uint32_t> table(n * n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t x1 = 0; x1 < na; ++x1) {
    for (std::size_t y1 = 0; y1 < nb; ++y1) {
      labels.push_back("(" + a.labels()[x1] + "," + b.labels()[y1] + ")");
      const std::size_t row = x1 * nb + y1;
      for (std::size_t x2 = 0; x2 < na; ++x2) {
        for (std::size_t y2 = 0; y2 < nb; ++y2) {
          table[row * n + x2 * nb + y2] =
              static_cast<std::uint32_t>(a.op(x1, x2) * nb + b.op(y1, y2));
        }
      }
    }
  }
  return Quandle(n, std::move(table), std::move(labels));
}

std::string AxiomReport::describe() const {
  std::ostringstream os;
  os << "idempotence: " << (idempotent ? "pass" : "FAIL");
  if (idempotent_witness) os << " (x=" << *idempotent_witness << ")";
  os << "; right invertibility: " << (right_invertible ? "pass" : "FAIL");
  if (right_invertible_witness) {
    const auto& w = *right_invertible_witness;
    os << " (" << w[0] << "|>" << w[2] << " = " << w[1] << "|>" << w[2] << ")";
  }
  os << "; self-distributivity: " << (self_distributive ? "pass" : "FAIL");
  if (self_distributive_witness) {
    const auto& w = *self_distributive_witness;
    os << " (x=" << w[0] << ", y=" << w[1] << ", z=" << w[2] << ")";
  }
  return os.str();
}

AxiomReport check_axioms(const Quandle& q) {
  AxiomReport report;
  const std::size_t n = q.size();
  for (std::size_t i = 0; i < n && report.idempotent; ++i) {
    if (q.op(i, i) != i) {
      report.idempotent = false;
      report.idempotent_witness = i;
    }
  }
  std::vector<std::size_t> preimage(n);
  for (std::size_t j = 0; j < n && report.right_invertible; ++j) {
    std::fill(preimage.begin(), preimage.end(), n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t image = q.op(i, j);
      if (preimage[image] != n) {
        report.right_invertible = false;
        report.right_invertible_witness = std::array<std::size_t, 3>{preimage[image], i, j};
        break;
      }
      preimage[image] = i;
    }
  }
  for (std::size_t i = 0; i < n && report.self_distributive; ++i) {
    for (std::size_t j = 0; j < n && report.self_distributive; ++j) {
      const std::size_t ij = q.op(i, j);
      for (std::size_t m = 0; m < n; ++m) {
        if (q.op(ij, m) != q.op(q.op(i, m), q.op(j, m))) {
          report.self_distributive = false;
          report.self_distributive_witness = std::array<std::size_t, 3>{i, j, m};
          break;
        }
      }
    }
  }
  return report;
}

Permutation right_map(const Quandle& q, std::size_t j) {
  if (j >= q.size()) {
    throw IndexError("right_map index " + std::to_string(j) + " out of range for order " +
                     std::to_string(q.size()));
  }
  std::vector<std::uint32_t> images(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) images[i] = q.op(i, j);
  return Permutation(std::move(images));
}

std::vector<Permutation> right_maps(const Quandle& q) {
  std::vector<Permutation> maps;
  maps.reserve(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) maps.push_back(right_map(q, j));
  return maps;
}

TakasakiLemmaReport check_takasaki_lemmas(const Quandle& q) {
  if (!q.spec()) throw ValidationError("lemma checks need a Takasaki quandle");
  const GroupSpec& spec = *q.spec();
  TakasakiLemmaReport report;
  const auto maps = right_maps(q);

  for (std::size_t j = 0; j < maps.size(); ++j) {
    if (!compose(maps[j], maps[j]).is_identity()) {
      report.involutions = false;
      report.failure = "R_" + q.labels()[j] + " is not an involution";
      break;
    }
  }

  const Permutation& r0 = maps[q.element_index(identity_element(spec))];
  std::vector<Permutation> translations;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    const Permutation& ri = maps[q.element_index(basis_element(spec, i))];
    translations.push_back(compose(ri, r0));
    const std::int64_t n = spec.modulus(i);
    const auto expected = static_cast<std::uint64_t>(n % 2 == 0 ? n / 2 : n);
    if (translations.back().order() != expected && report.order_law) {
      report.order_law = false;
      report.failure = "ord(R_{e_" + std::to_string(i + 1) + "} R_{e_0}) = " +
                       std::to_string(translations.back().order()) + ", expected " +
                       std::to_string(expected);
    }
  }

  for (const auto& j : enumerate(spec)) {
    Permutation product = Permutation::identity(q.size());
    for (std::size_t i = 0; i < spec.rank(); ++i) {
      product = compose(product, power(translations[i], static_cast<std::uint64_t>(j.coords[i])));
    }
    product = compose(product, r0);
    if (product != maps[q.element_index(j)]) {
      report.factorization = false;
      if (report.failure.empty()) report.failure = "factorization fails for R_" + format_element(j);
      break;
    }
  }
  return report;
}

void write_cayley_table(std::ostream& os, const Quandle& q) {
  os << q.size() << '\n';
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (j) os << ' ';
      os << q.op(i, j);
    }
    os << '\n';
  }
}

Quandle read_cayley_table(std::istream& is) {
  long long n = 0;
  if (!(is >> n) || n < 1) throw ParseError("Cayley table must start with a positive order");
  const auto size = static_cast<std::size_t>(n);
  check_order_cap(size);
  std::vector<std::uint32_t> table(size * size);
  for (std::size_t k = 0; k < table.size(); ++k) {
    long long v = 0;
    if (!(is >> v)) {
      throw ParseError("Cayley table truncated at row " + std::to_string(k / size) + ", column " +
                       std::to_string(k % size));
    }
    if (v < 0 || v >= n) {
      throw ParseError("Cayley table entry " + std::to_string(v) + " at row " +
                       std::to_string(k / size) + " out of range");
    }
    table[k] = static_cast<std::uint32_t>(v);
  }
  std::string extra;
  if (is >> extra) throw ParseError("unexpected trailing token '" + extra + "' in Cayley table");
  return Quandle(size, std::move(table), index_labels(size));
}

}  // namespace qtak
