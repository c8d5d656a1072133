#include "qtak/abelian.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "qtak/error.hpp"

namespace qtak {

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t n) {
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

void require_conforming(const GroupElement& a, const GroupSpec& spec) {
  if (a.coords.size() != spec.rank()) {
    throw StructuralError("element has " + std::to_string(a.coords.size()) +
                          " coordinates, group " + spec.to_string() + " has rank " +
                          std::to_string(spec.rank()));
  }
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw ValidationError("group spec needs at least one modulus");
  for (const auto n : moduli_) {
    if (n < 1) throw ValidationError("modulus must be ≥ 1 (got " + std::to_string(n) + ")");
    order_ *= n;
    if (n % 2 == 0) {
      ++even_count_;
      if (n % 4 == 0) ++doubly_even_count_;
    }
  }
}

bool GroupSpec::is_elementary_two() const noexcept {
  for (const auto n : moduli_) {
    if (n > 2) return false;
  }
  return true;
}

std::string GroupSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) out += 'x';
    out += std::to_string(moduli_[i]);
  }
  return out;
}

std::string GroupSpec::pretty() const {
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) out += " x ";
    out += "Z_" + std::to_string(moduli_[i]);
  }
  return out;
}

GroupSpec parse_group_spec(std::string_view text) {
  if (text.empty()) throw ParseError("empty group spec");
  std::vector<std::int64_t> moduli;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find('x', start);
    const std::string_view token =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    std::int64_t value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last) {
      throw ParseError("bad modulus token '" + std::string(token) + "' in group spec '" +
                       std::string(text) + "'");
    }
    if (value < 1) {
      throw ParseError("modulus must be ≥ 1: token '" + std::string(token) + "'");
    }
    moduli.push_back(value);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return GroupSpec(std::move(moduli));
}

GroupElement make_element(const GroupSpec& spec, std::vector<std::int64_t> coords) {
  GroupElement e{std::move(coords)};
  require_conforming(e, spec);
  for (std::size_t i = 0; i < e.coords.size(); ++i) e.coords[i] = reduce(e.coords[i], spec.modulus(i));
  return e;
}

GroupElement identity_element(const GroupSpec& spec) {
  return GroupElement{std::vector<std::int64_t>(spec.rank(), 0)};
}

GroupElement basis_element(const GroupSpec& spec, std::size_t i) {
  if (i >= spec.rank()) throw IndexError("basis index " + std::to_string(i) + " out of range");
  GroupElement e = identity_element(spec);
  e.coords[i] = reduce(1, spec.modulus(i));
  return e;
}

GroupElement group_add(const GroupElement& a, const GroupElement& b, const GroupSpec& spec) {
  require_conforming(a, spec);
  require_conforming(b, spec);
  GroupElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    out.coords[i] = reduce(a.coords[i] + b.coords[i], spec.modulus(i));
  }
  return out;
}

GroupElement group_neg(const GroupElement& a, const GroupSpec& spec) {
  require_conforming(a, spec);
  GroupElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = reduce(-a.coords[i], spec.modulus(i));
  return out;
}

GroupElement group_sub(const GroupElement& a, const GroupElement& b, const GroupSpec& spec) {
  return group_add(a, group_neg(b, spec), spec);
}

GroupElement group_scale(const GroupElement& a, std::int64_t m, const GroupSpec& spec) {
  require_conforming(a, spec);
  GroupElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    out.coords[i] = reduce(reduce(m, spec.modulus(i)) * a.coords[i], spec.modulus(i));
  }
  return out;
}

std::int64_t element_order(const GroupElement& a, const GroupSpec& spec) {
  require_conforming(a, spec);
  std::int64_t result = 1;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    const std::int64_t n = spec.modulus(i);
    const std::int64_t coord_order = n / std::gcd(n, reduce(a.coords[i], n));
    result = std::lcm(result, coord_order);
  }
  return result;
}

std::size_t element_index(const GroupElement& a, const GroupSpec& spec) {
  require_conforming(a, spec);
  std::size_t index = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    index = index * static_cast<std::size_t>(spec.modulus(i)) +
            static_cast<std::size_t>(reduce(a.coords[i], spec.modulus(i)));
  }
  return index;
}

GroupElement element_at(std::size_t index, const GroupSpec& spec) {
  if (index >= static_cast<std::size_t>(spec.order())) {
    throw IndexError("element index " + std::to_string(index) + " out of range for order " +
                     std::to_string(spec.order()));
  }
  GroupElement e = identity_element(spec);
  for (std::size_t i = spec.rank(); i-- > 0;) {
    const auto n = static_cast<std::size_t>(spec.modulus(i));
    e.coords[i] = static_cast<std::int64_t>(index % n);
    index /= n;
  }
  return e;
}

std::vector<GroupElement> enumerate(const GroupSpec& spec) {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(spec.order()));
  GroupElement cur = identity_element(spec);
  for (std::int64_t step = 0; step < spec.order(); ++step) {
    out.push_back(cur);
    for (std::size_t i = spec.rank(); i-- > 0;) {
      if (++cur.coords[i] < spec.modulus(i)) break;
      cur.coords[i] = 0;
    }
  }
  return out;
}

std::string format_element(const GroupElement& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (i) os << ',';
    os << a.coords[i];
  }
  os << ')';
  return os.str();
}

GroupElement Embedding::operator()(const GroupElement& x) const {
  return map.at(element_index(x, source));
}

Embedding double_subgroup(const GroupSpec& spec) {
  std::vector<std::int64_t> halved;
  halved.reserve(spec.rank());
  for (const auto n : spec.moduli()) halved.push_back(n / std::gcd(n, std::int64_t{2}));
  GroupSpec source(std::move(halved));

  Embedding emb{source, spec, {}};
  emb.map.reserve(static_cast<std::size_t>(source.order()));
  for (const auto& r : enumerate(source)) {
    GroupElement image = identity_element(spec);
    for (std::size_t i = 0; i < spec.rank(); ++i) {
      image.coords[i] = reduce(2 * r.coords[i], spec.modulus(i));
    }
    emb.map.push_back(std::move(image));
  }
  return emb;
}

}  // namespace qtak
