#include "qtak/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "qtak/char_table.hpp"
#include "qtak/error.hpp"
#include "qtak/quandle.hpp"
#include "qtak/report.hpp"
#include "qtak/sweep.hpp"

namespace qtak::cli {

namespace {

using nlohmann::json;

struct Output {
  int code = kSuccess;
  std::string body;
};

Tolerances tolerances(const RunConfig& config) {
  Tolerances tol;
  if (config.tolerance) tol.residual = *config.tolerance;
  return tol;
}

Output cmd_axioms(const RunConfig& config) {
  std::optional<Quandle> q;
  std::string source;
  if (!config.cayley_path.empty()) {
    std::ifstream in(config.cayley_path);
    if (!in) throw ParseError("cannot open Cayley table '" + config.cayley_path + "'");
    q.emplace(read_cayley_table(in));
    source = config.cayley_path;
  } else {
    const GroupSpec spec = parse_group_spec(config.group_spec);
    q.emplace(takasaki(spec));
    source = spec.to_string();
  }
  const AxiomReport report = check_axioms(*q);
  const bool trivial_quandle = q->spec() && q->spec()->is_elementary_two();
  Output out;
  out.code = report.all_pass() ? kSuccess : kVerificationFailure;
  if (config.format == Format::json) {
    auto witness = [](const auto& w) { return w ? json(*w) : json(nullptr); };
    json j{{"source", source},
           {"order", q->size()},
           {"pass", report.all_pass()},
           {"idempotent", {{"pass", report.idempotent}, {"witness", witness(report.idempotent_witness)}}},
           {"right_invertible",
            {{"pass", report.right_invertible}, {"witness", witness(report.right_invertible_witness)}}},
           {"self_distributive",
            {{"pass", report.self_distributive}, {"witness", witness(report.self_distributive_witness)}}}};
    if (trivial_quandle) j["note"] = "trivial quandle";
    out.body = dump_canonical(j);
  } else {
    std::ostringstream os;
    os << "axioms: " << (report.all_pass() ? "pass" : "FAIL") << " (order " << q->size() << ")\n";
    if (!report.all_pass()) os << report.describe() << '\n';
    if (trivial_quandle) os << "note: trivial quandle\n";
    out.body = os.str();
  }
  return out;
}

Output cmd_orbits(const RunConfig& config) {
  const OrbitListing listing = list_orbits(parse_group_spec(config.group_spec));
  return {kSuccess, config.format == Format::json ? dump_canonical(to_json(listing)) : format_text(listing)};
}

Output cmd_decompose(const RunConfig& config) {
  DecomposeOptions options;
  options.verify_field = config.field;
  options.tol = tolerances(config);
  const Decomposition dec = decompose(parse_group_spec(config.group_spec), options);
  Output out;
  out.code = dec.report.all_pass() ? kSuccess : kVerificationFailure;
  out.body = config.format == Format::json ? dump_canonical(to_json(dec.report)) : format_text(dec.report);
  if (config.format == Format::text && out.code != kSuccess) {
    for (const auto& c : dec.report.checks) {
      if (!c.pass) out.body += "verification failed: " + c.name + "\n";
    }
  }
  return out;
}

Output cmd_table(const RunConfig& config) {
  const GroupSpec spec = parse_group_spec(config.group_spec);
  const CharacterTable table = spec.is_elementary_two() ? build_elementary_table(spec) : build_dih_table(spec);
  return {kSuccess, config.format == Format::json ? dump_canonical(to_json(table)) : table.format()};
}

Output cmd_cayley(const RunConfig& config) {
  std::ostringstream os;
  write_cayley_table(os, takasaki(parse_group_spec(config.group_spec)));
  return {kSuccess, os.str()};
}

Output cmd_verify(const RunConfig& config) {
  SweepOptions options;
  options.max_order = config.max_order;
  options.field = config.field;
  options.tol = tolerances(config);
  options.threads = config.threads;
  const SweepResult result = run_sweep(options);
  const auto names = result.check_names();

  Output out;
  out.code = result.all_pass() ? kSuccess : kVerificationFailure;
  if (config.format == Format::json) {
    json specs = json::array();
    json failures = json::array();
    for (const auto& s : result.specs) {
      json checks = json::object();
      for (const auto& c : s.checks) {
        checks[c.name] = c.pass;
        if (!c.pass) failures.push_back({{"spec", s.spec}, {"check", c.name}, {"detail", c.detail}});
      }
      specs.push_back({{"spec", s.spec},
                       {"order", s.order},
                       {"case", to_string(s.case_tag)},
                       {"pass", s.pass()},
                       {"checks", checks},
                       {"seconds", round_significant(s.seconds, 4)}});
    }
    out.body = dump_canonical(json{{"max_order", config.max_order},
                                   {"field", to_string(config.field)},
                                   {"spec_count", result.specs.size()},
                                   {"all_pass", result.all_pass()},
                                   {"checks", names},
                                   {"specs", specs},
                                   {"failures", failures},
                                   {"seconds", round_significant(result.seconds, 4)}});
    return out;
  }

  std::ostringstream os;
  os << "checks:\n";
  for (std::size_t i = 0; i < names.size(); ++i) os << "  " << std::setw(2) << i << "  " << names[i] << '\n';
  os << std::left << std::setw(14) << "spec" << std::setw(20) << "case";
  for (std::size_t i = 0; i < names.size(); ++i) os << std::setw(3) << i;
  os << "  seconds\n";
  std::vector<std::string> failure_lines;
  for (const auto& s : result.specs) {
    os << std::setw(14) << s.spec << std::setw(20) << to_string(s.case_tag);
    for (const auto& name : names) {
      const auto it = std::find_if(s.checks.begin(), s.checks.end(), [&](const Check& c) { return c.name == name; });
      os << std::setw(3) << (it == s.checks.end() ? "-" : (it->pass ? "P" : "F"));
    }
    os << "  " << std::fixed << std::setprecision(3) << s.seconds << std::defaultfloat << '\n';
    for (const auto& c : s.checks) {
      if (!c.pass) failure_lines.push_back("FAIL " + s.spec + " " + c.name + " " + c.detail);
    }
  }
  os << std::right;
  for (const auto& line : failure_lines) os << line << '\n';
  os << result.specs.size() << " group specs up to order " << config.max_order << ": "
     << (result.all_pass() ? "all checks pass" : std::to_string(failure_lines.size()) + " failures") << " in "
     << std::fixed << std::setprecision(2) << result.seconds << " s\n";
  out.body = os.str();
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Takasaki quandles, their inner automorphism groups and quandle-ring decompositions", "qtak"};
  app.require_subcommand(1);

  const std::map<std::string, Field> fields{{"real", Field::real}, {"complex", Field::complex}};
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};

  auto add_common = [&](CLI::App* sub, bool needs_group) {
    auto* group = sub->add_option("--group", config.group_spec, "group spec, e.g. 4x6x3");
    if (needs_group) group->required();
    sub->add_option("--format", config.format, "text or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", config.out_path, "write the report to a file");
  };
  auto add_numeric = [&](CLI::App* sub) {
    sub->add_option("--field", config.field, "real or complex")
        ->transform(CLI::CheckedTransformer(fields, CLI::ignore_case));
    sub->add_option("--tol", config.tolerance, "residual tolerance")->check(CLI::PositiveNumber);
  };

  auto* axioms = app.add_subcommand("axioms", "check the quandle axioms");
  add_common(axioms, false);
  axioms->add_option("--cayley", config.cayley_path, "Cayley table file instead of --group");

  auto* orbit_cmd = app.add_subcommand("orbits", "list Inn(T)-orbits");
  add_common(orbit_cmd, true);

  auto* decompose_cmd = app.add_subcommand("decompose", "decompose K[T] into simple right ideals");
  add_common(decompose_cmd, true);
  add_numeric(decompose_cmd);

  auto* verify = app.add_subcommand("verify", "sweep every group spec up to --max-order");
  add_common(verify, false);
  add_numeric(verify);
  verify->add_option("--max-order", config.max_order, "largest group order")->required()->check(
      CLI::PositiveNumber);
  verify->add_option("--threads", config.threads, "worker threads (0: all cores)");

  auto* table = app.add_subcommand("table", "character table of Dih(H)");
  add_common(table, true);

  auto* cayley = app.add_subcommand("cayley", "export the Cayley table");
  cayley->add_option("--group", config.group_spec, "group spec")->required();
  cayley->add_option("--out", config.out_path, "write the table to a file");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return e.get_exit_code() == 0 ? kSuccess : kUsageError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  config.command = chosen->get_name();
  if (config.command == "axioms" && config.group_spec.empty() == config.cayley_path.empty()) {
    err << "axioms: give exactly one of --group or --cayley\n";
    return kUsageError;
  }

  Output result;
  try {
    if (config.command == "axioms") result = cmd_axioms(config);
    else if (config.command == "orbits") result = cmd_orbits(config);
    else if (config.command == "decompose") result = cmd_decompose(config);
    else if (config.command == "verify") result = cmd_verify(config);
    else if (config.command == "table") result = cmd_table(config);
    else result = cmd_cayley(config);
  } catch (const ParseError& e) {
    err << config.command << ": " << e.what() << '\n';
    return kUsageError;
  } catch (const ValidationError& e) {
    err << config.command << ": " << e.what() << '\n';
    return kUsageError;
  } catch (const CapacityError& e) {
    err << config.command << ": " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << config.command << ": verification failed: " << e.what() << '\n';
    return kVerificationFailure;
  }

  if (!config.out_path.empty()) {
    std::ofstream file(config.out_path);
    if (!file) {
      err << "cannot write '" << config.out_path << "'\n";
      return kUsageError;
    }
    file << result.body;
  } else {
    out << result.body;
  }
  return result.code;
}

}  // namespace qtak::cli
