#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qtak/cli.hpp"
#include "qtak/report.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qtak");
  std::ostringstream out, err;
  const int code = qtak::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("round_significant") {
  CHECK(qtak::round_significant(0.1 + 0.2) == 0.3);
  CHECK(qtak::round_significant(-0.0) == 0.0);
  CHECK(!std::signbit(qtak::round_significant(-1e-30 * 0.0)));
  CHECK(qtak::round_significant(123456.7890123456, 6) == 123457.0);
}

TEST_CASE("axioms subcommand") {
  auto r = cli({"axioms", "--group", "4x6x3"});
  CHECK(r.code == 0);
  CHECK(r.out == "axioms: pass (order 72)\n");
  r = cli({"axioms", "--group", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pass") != std::string::npos);
  CHECK(r.out.find("trivial quandle") != std::string::npos);
  r = cli({"axioms", "--group", "4x0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("modulus must be ≥ 1") != std::string::npos);
  CHECK(cli({"axioms"}).code == 2);
}

TEST_CASE("axioms on an imported Cayley table") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto good = (dir / "qtak_good.txt").string();
  const auto bad = (dir / "qtak_bad.txt").string();
  REQUIRE(cli({"cayley", "--group", "5", "--out", good}).code == 0);
  CHECK(cli({"axioms", "--cayley", good}).code == 0);
  {
    std::ofstream f(bad);
    f << "3\n0 0 0\n1 1 1\n2 2 0\n";
  }
  const auto r = cli({"axioms", "--cayley", bad, "--format", "json"});
  CHECK(r.code == 1);
  const json j = json::parse(r.out);
  CHECK(j["pass"] == false);
  CHECK(j["right_invertible"]["pass"] == false);
  CHECK(j["right_invertible"]["witness"].is_array());
  CHECK(cli({"axioms", "--cayley", (dir / "qtak_missing.txt").string()}).code == 2);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST_CASE("orbits subcommand") {
  auto r = cli({"orbits", "--group", "4x6x3", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["orbit_count"] == 4);
  const std::vector<std::string> names{"X_(0,0,0)", "X_(0,1,0)", "X_(1,0,0)", "X_(1,1,0)"};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(j["orbits"][i]["name"] == names[i]);
    CHECK(j["orbits"][i]["size"] == 18);
  }
  CHECK(json::parse(cli({"orbits", "--group", "5", "--format", "json"}).out)["orbit_count"] == 1);
  j = json::parse(cli({"orbits", "--group", "4x6", "--format", "json"}).out);
  CHECK(j["orbit_count"] == 4);
  for (const auto& o : j["orbits"]) CHECK(o["size"] == 6);
  CHECK(cli({"orbits", "--group", "4x6x3"}).out.find("X_(1,1,0) (18)") != std::string::npos);
}

TEST_CASE("decompose subcommand") {
  auto r = cli({"decompose", "--group", "5", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["decomposition"]["totals"]["summands"] == 3);
  CHECK(j["decomposition"]["per_orbit"][0]["dims"] == json::array({1, 2, 2}));
  CHECK(j["verification"]["all_pass"] == true);
  for (const auto& c : j["verification"]["checks"]) CHECK(c["pass"] == true);
  for (const char* key : {"spec", "order", "orbits", "case", "table", "decomposition", "verification"})
    CHECK(j.contains(key));
  CHECK(j["table"].contains("classes"));
  CHECK(j["table"].contains("irreps"));

  r = cli({"decompose", "--group", "2x4", "--format", "json"});
  REQUIRE(r.code == 0);
  const json s = json::parse(r.out);
  CHECK(s["orbits"].size() == 4);
  for (const auto& o : s["decomposition"]["per_orbit"]) CHECK(o["dims"] == json::array({1, 1}));

  r = cli({"decompose", "--group", "4x6x3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("simple right ideals: 40, total dimension 72") != std::string::npos);

  r = cli({"decompose", "--group", "6", "--field", "complex", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["verification"]["field"] == "complex");

  CHECK(cli({"decompose", "--group", "6", "--field", "quaternion"}).code == 2);
  CHECK(cli({"decompose", "--group", "6", "--tol", "-1"}).code == 2);
  CHECK(cli({"decompose"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
}

TEST_CASE("an impossible tolerance is reported as a named verification failure") {
  const auto r = cli({"decompose", "--group", "5", "--tol", "1e-300"});
  CHECK(r.code == 1);
  CHECK(r.out.find("verification failed: projector_") != std::string::npos);
}

TEST_CASE("JSON output is byte-stable under parse and re-serialization") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"decompose", "--group", "5", "--format", "json"},
        {"decompose", "--group", "4x6x3", "--format", "json"},
        {"decompose", "--group", "2x2", "--format", "json", "--field", "complex"},
        {"orbits", "--group", "4x6", "--format", "json"},
        {"table", "--group", "2x5", "--format", "json"},
        {"axioms", "--group", "9", "--format", "json"}}) {
    const auto r = cli(args);
    REQUIRE(r.code == 0);
    CHECK(qtak::dump_canonical(json::parse(r.out)) == r.out);
  }
}

TEST_CASE("verify subcommand") {
  auto r = cli({"verify", "--max-order", "1", "--format", "json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["spec_count"] == 1);
  CHECK(j["all_pass"] == true);
  CHECK(j["failures"].empty());

  r = cli({"verify", "--max-order", "24", "--threads", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all checks pass") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  r = cli({"verify", "--max-order", "12", "--tol", "1e-300", "--format", "json"});
  CHECK(r.code == 1);
  j = json::parse(r.out);
  CHECK(!j["failures"].empty());
  CHECK(j["failures"][0].contains("spec"));
  CHECK(j["failures"][0].contains("check"));

  CHECK(cli({"verify"}).code == 2);
  CHECK(cli({"verify", "--max-order", "0"}).code == 2);
}

TEST_CASE("table and cayley subcommands") {
  auto r = cli({"table", "--group", "5", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["irreps"].size() == 4);
  CHECK(j["group_order"] == 10);
  CHECK(cli({"table", "--group", "2x2"}).code == 0);

  r = cli({"cayley", "--group", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n0 2 1\n2 1 0\n1 0 2\n");
}

TEST_CASE("construction cap is a usage error") {
  CHECK(cli({"decompose", "--group", "1024"}).code == 2);
}
