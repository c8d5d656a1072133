#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qtak/decomposer.hpp"

namespace qtak::cli {

// Exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kUsageError = 2;

enum class Format { text, json };

struct RunConfig {
  std::string command;
  std::string group_spec;
  std::string cayley_path;
  Field field = Field::real;
  Format format = Format::text;
  std::int64_t max_order = 24;
  std::optional<double> tolerance;
  unsigned threads = 0;
  std::string out_path;
};

// Parses argv (args[0] is the program name) and runs the selected subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtak::cli
