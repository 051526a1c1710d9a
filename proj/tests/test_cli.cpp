#include "gga/algebra.hpp"

#include "gga/catalog.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  const std::string out_file = "cli_test_stdout.json";
  const std::string cmd = std::string(GGA_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::remove(out_file.c_str());
  return {WEXITSTATUS(raw), buffer.str()};
}

}  // namespace

TEST_CASE("verify subcommand passes for every catalog algebra") {
  for (const std::string spec : {"--algebra d4 --mask full", "--algebra b3 --mask gx",
                                 "--algebra g2 --mask gx"}) {
    const RunResult r = run_cli("verify " + spec);
    CHECK(r.exit_code == 0);
    const auto report = nlohmann::json::parse(r.stdout_text);
    CHECK(report.at("status") == "pass");
    for (const auto& check : report.at("checks")) CHECK(check.at("ok").get<bool>());
  }
}

TEST_CASE("build emits the JSON algebra format and it round-trips") {
  const RunResult r = run_cli("build --algebra d4 --mask full");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j.at("d") == 4);
  CHECK(j.at("mask").size() == 8);
  CHECK(j.at("twist").size() == 42);  // 7 bases x 6 offsets

  // loading the build output reproduces the in-memory construction
  const gga::GGAlgebra loaded = gga::algebra_from_json(r.stdout_text);
  const gga::GGAlgebra direct = gga::catalog::make("d4", gga::catalog::Mask::full);
  CHECK(loaded.twist() == direct.twist());
  CHECK(loaded.mask() == direct.mask());
  CHECK(gga::verify_lie(loaded).ok());
  CHECK(gga::killing(loaded) == gga::killing(direct));

  const RunResult g2 = run_cli("build --algebra g2 --mask gx");
  REQUIRE(g2.exit_code == 0);
  const auto jg = nlohmann::json::parse(g2.stdout_text);
  CHECK(jg.at("d") == 2);
  CHECK(jg.at("mask").size() == 7);
}

TEST_CASE("build --out writes a loadable file") {
  const std::string path = "cli_test_algebra.json";
  const RunResult r = run_cli("build --algebra b3 --mask gx --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::remove(path.c_str());
  const gga::GGAlgebra loaded = gga::algebra_from_json(buffer.str());
  CHECK(loaded.dim() == 21);
}

TEST_CASE("contract subcommand") {
  const RunResult r = run_cli("contract --algebra g2 --map T1 --mask gx");
  CHECK(r.exit_code == 0);
  const auto report = nlohmann::json::parse(r.stdout_text);
  CHECK(report.at("status") == "pass");
  CHECK(report.at("stats").at("fingerprint").at("dim") == 14);
  CHECK(report.at("stats").at("fingerprint").at("abelian") == true);

  const RunResult ok = run_cli("contract --algebra d4 --map beta:2,3 --mask full");
  CHECK(ok.exit_code == 0);
  const auto report2 = nlohmann::json::parse(ok.stdout_text);
  CHECK(report2.at("stats").at("fingerprint").at("dim") == 32);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("contract --algebra d4 --map eta:0 --mask full").exit_code == 2);
  CHECK(run_cli("contract --algebra d4 --map T99 --mask full").exit_code == 2);
  CHECK(run_cli("build --algebra nope --mask full").exit_code == 2);
  CHECK(run_cli("verify --algebra d4 --mask nope").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("nice-sets enumerate --classify") {
  const RunResult r = run_cli("nice-sets enumerate --classify");
  CHECK(r.exit_code == 0);
  const auto report = nlohmann::json::parse(r.stdout_text);
  CHECK(report.at("status") == "pass");
  CHECK(report.at("stats").at("nice_sets") == 779);
  CHECK(report.at("stats").at("orbits") == 24);
  // deterministic output: singleton orbits present, all matched to the catalog
  int singletons = 0;
  for (const auto& row : report.at("stats").at("orbit_table")) {
    CHECK(row.at("catalog") != "unmatched");
    if (row.at("size") == 1) ++singletons;
  }
  CHECK(singletons == 2);
}

TEST_CASE("rep subcommand with checks") {
  for (const std::string which : {"rho2", "g2"}) {
    const RunResult r = run_cli("rep --which " + which + " --check");
    CHECK(r.exit_code == 0);
    const auto report = nlohmann::json::parse(r.stdout_text);
    CHECK(report.at("status") == "pass");
  }
}

TEST_CASE("survey emits one fingerprint row per map") {
  const RunResult r = run_cli("survey --algebra b3 --mask gx");
  CHECK(r.exit_code == 0);
  const auto report = nlohmann::json::parse(r.stdout_text);
  CHECK(report.at("status") == "pass");
  const auto& rows = report.at("stats").at("rows");
  CHECK(rows.size() == 27);
  for (const auto& row : rows) {
    CHECK(row.at("lie") == true);
    CHECK(row.at("fingerprint").at("dim") == 21);
  }
}

TEST_CASE("reports are deterministic given flags") {
  auto strip_timing = [](const std::string& text) {
    auto j = nlohmann::json::parse(text);
    j.erase("timing_ms");
    return j.dump();
  };
  const RunResult a = run_cli("survey --algebra g2 --mask gx");
  const RunResult b = run_cli("survey --algebra g2 --mask gx");
  CHECK(strip_timing(a.stdout_text) == strip_timing(b.stdout_text));
}
