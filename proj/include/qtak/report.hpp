#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "qtak/abelian.hpp"
#include "qtak/char_table.hpp"
#include "qtak/decomposer.hpp"

namespace qtak {

// Rounds to `digits` significant digits; -0 becomes 0. Every float written to
// a JSON report goes through this so that parse/re-serialize is byte-stable.
double round_significant(double x, int digits = 12);

// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const nlohmann::json& j);

nlohmann::json to_json(const CharacterTable& table);
nlohmann::json to_json(const DecompositionReport& report);
std::string format_text(const DecompositionReport& report);

// Orbits of a Takasaki quandle with their parity labels.
struct OrbitListing {
  GroupSpec spec;
  std::vector<std::vector<std::uint32_t>> orbits;
};
OrbitListing list_orbits(const GroupSpec& spec);
nlohmann::json to_json(const OrbitListing& listing);
std::string format_text(const OrbitListing& listing);

}  // namespace qtak
