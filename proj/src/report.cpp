#include "qtak/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qtak/perm_group.hpp"
#include "qtak/quandle.hpp"

namespace qtak {

using nlohmann::json;

namespace {

json coords(const GroupElement& e) { return json(e.coords); }

json dih_json(const DihElement& x) { return json{{"h", coords(x.h)}, {"flip", x.flip ? 1 : 0}}; }

GroupElement parity_label(const GroupSpec& spec, std::uint32_t min_point) {
  return element_at(min_point, spec);
}

std::string list_points(const GroupSpec& spec, const std::vector<std::uint32_t>& points) {
  std::string out = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ',';
    out += format_element(element_at(points[i], spec));
  }
  return out + "}";
}

}  // namespace

double round_significant(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x == 0.0 ? 0.0 : x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json to_json(const CharacterTable& table) {
  json classes = json::array();
  for (const auto& c : table.classes()) {
    classes.push_back({{"representative", dih_json(c.representative)},
                       {"label", c.representative.to_string()},
                       {"size", c.size}});
  }
  json irreps = json::array();
  for (std::size_t i = 0; i < table.irreps().size(); ++i) {
    const auto& irrep = table.irreps()[i];
    json values = json::array();
    for (std::size_t c = 0; c < table.classes().size(); ++c) {
      if (table.exact(i, c)) {
        values.push_back(static_cast<std::int64_t>(table.value(i, c)));
      } else {
        values.push_back(round_significant(table.value(i, c)));
      }
    }
    irreps.push_back({{"kind", to_string(irrep.kind)},
                      {"label", coords(irrep.label)},
                      {"name", irrep.name()},
                      {"degree", irrep.degree()},
                      {"values", values}});
  }
  return json{{"group",
               table.family() == TableFamily::dihedral ? "Dih(" + table.abelian_part().pretty() + ")"
                                                       : table.abelian_part().pretty()},
              {"group_order", table.group_order()},
              {"classes", classes},
              {"irreps", irreps}};
}

json to_json(const DecompositionReport& report) {
  const GroupSpec& spec = report.spec;
  json orbits = json::array();
  json per_orbit = json::array();
  for (const auto& o : report.orbits) {
    json points = json::array();
    for (const auto p : o.points) points.push_back(coords(element_at(p, spec)));
    orbits.push_back({{"id", o.id},
                      {"label", coords(o.label)},
                      {"name", "X_" + format_element(o.label)},
                      {"size", o.points.size()},
                      {"points", points},
                      {"inn_order", o.inn_order},
                      {"certificate", {{"verified", o.certificate_verified},
                                       {"reflection_identity", o.reflection_identity},
                                       {"abelian_part", report.table.abelian_part().moduli()}}}});
    per_orbit.push_back({{"orbit", o.id},
                         {"case", to_string(o.case_tag)},
                         {"permutation_character", o.permutation_character.values},
                         {"predicted_character", o.predicted_character.values},
                         {"multiplicities", o.multiplicities},
                         {"dims", o.dims},
                         {"summands", o.dims.size()},
                         {"projector_ranks", o.projector_ranks}});
  }
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry{{"name", c.name}, {"pass", c.pass}, {"residual", round_significant(c.residual)}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  json verification{{"checks", checks}, {"all_pass", report.all_pass()}};
  verification["field"] = report.verified_field ? json(to_string(*report.verified_field)) : json(nullptr);
  return json{{"spec", spec.to_string()},
              {"moduli", spec.moduli()},
              {"order", spec.order()},
              {"case", to_string(report.case_tag)},
              {"inn_order", report.inn_order},
              {"orbits", orbits},
              {"table", to_json(report.table)},
              {"decomposition",
               {{"per_orbit", per_orbit},
                {"totals", {{"summands", report.total_summands}, {"dimension", report.total_dimension}}}}},
              {"verification", verification}};
}

std::string format_text(const DecompositionReport& report) {
  std::ostringstream os;
  const GroupSpec& spec = report.spec;
  os << "T = Takasaki quandle of " << spec.pretty() << " (order " << spec.order() << "), case "
     << to_string(report.case_tag) << '\n';
  os << "|Inn(T)| = " << report.inn_order << ", orbits: " << report.orbits.size() << '\n';
  const auto& table = report.table;
  const std::string group = table.family() == TableFamily::dihedral
                                ? "Dih(" + table.abelian_part().pretty() + ")"
                                : table.abelian_part().pretty();
  for (const auto& o : report.orbits) {
    os << "  X_" << format_element(o.label) << ": " << o.points.size() << " points, Inn ~ " << group
       << " of order " << o.inn_order << '\n';
    os << "    chi = (";
    for (std::size_t c = 0; c < o.permutation_character.values.size(); ++c) {
      os << (c ? ", " : "") << o.permutation_character.values[c];
    }
    os << ")\n    K[X_" << format_element(o.label) << "] =";
    std::size_t u = 0;
    std::size_t v = 0;
    bool first = true;
    for (std::size_t i = 0; i < table.irreps().size(); ++i) {
      if (o.multiplicities[i] == 0) continue;
      const bool two = table.irreps()[i].degree() == 2;
      os << (first ? " " : " + ") << (two ? "V_{" : "U_{") << o.id << ',' << (two ? ++v : ++u) << '}';
      first = false;
    }
    os << '\n';
  }
  os << "simple right ideals: " << report.total_summands << ", total dimension " << report.total_dimension
     << '\n';
  os << "checks";
  if (report.verified_field) os << " (" << to_string(*report.verified_field) << " field)";
  os << ":\n";
  for (const auto& c : report.checks) {
    os << "  " << (c.pass ? "pass " : "FAIL ") << c.name;
    if (c.residual != 0.0) os << " residual=" << c.residual;
    if (!c.detail.empty()) os << "  [" << c.detail << ']';
    os << '\n';
  }
  return os.str();
}

OrbitListing list_orbits(const GroupSpec& spec) {
  const Quandle q = takasaki(spec);
  return {spec, orbits(right_maps(q), q.size())};
}

json to_json(const OrbitListing& listing) {
  json orbits = json::array();
  for (const auto& orbit : listing.orbits) {
    const GroupElement label = parity_label(listing.spec, orbit.front());
    json points = json::array();
    for (const auto p : orbit) points.push_back(coords(element_at(p, listing.spec)));
    orbits.push_back({{"label", coords(label)},
                      {"name", "X_" + format_element(label)},
                      {"size", orbit.size()},
                      {"points", points}});
  }
  return json{{"spec", listing.spec.to_string()},
              {"order", listing.spec.order()},
              {"orbit_count", listing.orbits.size()},
              {"orbits", orbits}};
}

std::string format_text(const OrbitListing& listing) {
  std::ostringstream os;
  os << "orbits: " << listing.orbits.size() << " (order " << listing.spec.order() << ")\n";
  for (const auto& orbit : listing.orbits) {
    os << "X_" << format_element(parity_label(listing.spec, orbit.front())) << " (" << orbit.size()
       << ") = " << list_points(listing.spec, orbit) << '\n';
  }
  return os.str();
}

}  // namespace qtak
