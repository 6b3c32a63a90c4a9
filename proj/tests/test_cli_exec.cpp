// End-to-end tests of the installed CLI binary: exit-code contract, text
// summaries, JSON report emission, config errors, and cache behaviour.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>
#include <unistd.h>

using nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

std::string unique_path(const std::string& stem) {
  static int counter = 0;
  return (std::filesystem::temp_directory_path() /
          (stem + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++)))
      .string();
}

// Runs a full shell command, capturing combined stdout/stderr and the exit
// status.  The CLI is expected to terminate normally on every input we feed
// it, so a signal death is reported as exit code -1 and fails the assertions.
CliResult run_command(const std::string& command) {
  const std::string capture = unique_path("weilcomb-cli-out");
  const int status = std::system((command + " > " + capture + " 2>&1").c_str());

  CliResult result;
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  std::ifstream in(capture);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  std::filesystem::remove(capture);
  return result;
}

CliResult run_cli(const std::string& args) {
  return run_command(std::string(WEILCOMB_CLI_PATH) + " " + args);
}

std::string data_file(const std::string& name) {
  return std::string(WEILCOMB_SOURCE_DIR) + "/tests/data/" + name;
}

class TempCacheDir {
 public:
  TempCacheDir() : path_(unique_path("weilcomb-cli-cache")) {
    std::filesystem::create_directories(path_);
  }
  ~TempCacheDir() { std::filesystem::remove_all(path_); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("--version prints the tool version and exits 0") {
    const CliResult r = run_cli("--version");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "1.0.0"));
  }

  TEST_CASE("--help exits 0 and lists the subcommands") {
    const CliResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "run"));
    CHECK(contains(r.output, "enumerate"));
    CHECK(contains(r.output, "verify"));
    CHECK(contains(r.output, "analyze"));
    CHECK(contains(r.output, "relations"));
  }

  TEST_CASE("enumerate renders the standard census") {
    const CliResult r = run_cli("enumerate --k 3 --c 7");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "16 sections; 8 up to conjugation; classes 1+1+1+1+4"));
    CHECK(contains(r.output, "status: ok (exit 0)"));
  }

  TEST_CASE("enumerate rejects the identity as conjugation element") {
    const CliResult r = run_cli("enumerate --k 3 --c 0");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "config error"));
  }

  TEST_CASE("missing required option is a usage error (exit 2)") {
    const CliResult r = run_cli("enumerate --k 3");
    CHECK(r.exit_code == 2);
  }

  TEST_CASE("unknown subcommand is a usage error (exit 2)") {
    const CliResult r = run_cli("frobnicate");
    CHECK(r.exit_code == 2);
  }

  TEST_CASE("no subcommand is a usage error (exit 2)") {
    const CliResult r = run_cli("");
    CHECK(r.exit_code == 2);
  }

  TEST_CASE("analyze standard_triple finds no gaps") {
    const CliResult r = run_cli("analyze --preset standard_triple --degree 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "20 monomials, 0 gaps"));
    CHECK(contains(r.output, "status: ok (exit 0)"));
  }

  TEST_CASE("analyze standard_quadruple reports unexpected gaps with exit 1") {
    const CliResult r = run_cli("analyze --preset standard_quadruple --degree 4");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "70 monomials, 8 gaps (UNEXPECTED)"));
    CHECK(contains(r.output, "gap alpha1*alpha2*alpha3*alpha4^c: tate=1 witnessed=0"));
    CHECK(contains(r.output, "status: unexpected_gaps (exit 1)"));
  }

  TEST_CASE("analyze --expect-gaps turns found gaps into a clean exit") {
    const CliResult r = run_cli("analyze --preset standard_quadruple --degree 4 --expect-gaps");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "8 gaps (expected)"));
    CHECK(contains(r.output, "status: ok (exit 0)"));
  }

  TEST_CASE("analyze rejects a non-elliptic product factor") {
    const CliResult r = run_cli("analyze --preset beta --degree 2");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "config error"));
    CHECK(contains(r.output, "not elliptic"));
  }

  TEST_CASE("verify lemma1 summarises the scan") {
    const CliResult r = run_cli("verify lemma1 --kmax 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "115 configurations across 4 contexts, 0 counterexamples"));
  }

  TEST_CASE("verify thm2 reports structural zeros") {
    const CliResult r = run_cli("verify thm2 --bound 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "126 configurations, 0 counterexamples, structural zeros ok"));
  }

  TEST_CASE("relations beta reports the exotic relations") {
    const CliResult r = run_cli("relations --preset beta --max-degree 6");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "5 degree-2 relations; 2 exotic"));
    CHECK(contains(r.output,
                   "exotic alpha1*alpha2*alpha3*alpha4^c*(beta^c)^2 = q^3: "
                   "outside degree-2 lattice"));
    CHECK(contains(r.output, "monoid: no"));
  }

  TEST_CASE("relations standard_triple finds no exotic relations") {
    const CliResult r = run_cli("relations --preset standard_triple --max-degree 6");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "3 degree-2 relations; 0 exotic"));
  }

  TEST_CASE("run executes a scenario config file") {
    const CliResult r = run_cli("run " + data_file("triple.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "16 sections; 8 up to conjugation; classes 1+1+1+1+4"));
    CHECK(contains(r.output, "20 monomials, 0 gaps"));
    CHECK(contains(r.output, "126 configurations, 0 counterexamples, structural zeros ok"));
    CHECK(contains(r.output, "status: ok (exit 0)"));
  }

  TEST_CASE("run executes the gap-demonstration config") {
    const CliResult r = run_cli("run " + data_file("quadruple_gaps.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "70 monomials, 8 gaps (expected)"));
    CHECK(contains(r.output, "5 degree-2 relations; 2 exotic"));
    CHECK(contains(r.output, "status: ok (exit 0)"));
  }

  TEST_CASE("run rejects a missing config file") {
    const CliResult r = run_cli("run " + data_file("does_not_exist.json"));
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "cannot open"));
  }

  TEST_CASE("run rejects a config with an unknown field") {
    const CliResult r = run_cli("run " + data_file("invalid_unknown_field.json"));
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "config error"));
    CHECK(contains(r.output, "clases"));
  }

  TEST_CASE("run rejects a file that is not JSON") {
    const CliResult r = run_cli("run " + data_file("not_json.txt"));
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "is not valid JSON"));
  }

  TEST_CASE("--json writes the full report, also for finding runs") {
    const std::string report_path = unique_path("weilcomb-cli-report");

    SUBCASE("clean run") {
      const CliResult r =
          run_cli("verify thm2 --bound 3 --json " + report_path);
      CHECK(r.exit_code == 0);
      std::ifstream in(report_path);
      REQUIRE(in.good());
      const json report = json::parse(in);
      CHECK(report.at("exit_code") == 0);
      CHECK(report.at("status") == "ok");
      CHECK(report.at("tool").at("name") == "weilcomb");
      CHECK(report.at("tasks").at(0).at("result").at("configurations_checked") == 126);
    }

    SUBCASE("run with findings") {
      const CliResult r =
          run_cli("analyze --preset standard_quadruple --degree 4 --json " + report_path);
      CHECK(r.exit_code == 1);
      std::ifstream in(report_path);
      REQUIRE(in.good());
      const json report = json::parse(in);
      CHECK(report.at("exit_code") == 1);
      CHECK(report.at("status") == "unexpected_gaps");
      CHECK(report.at("tasks").at(0).at("result").at("gaps").size() == 8);
    }

    std::filesystem::remove(report_path);
  }

  TEST_CASE("--cache-dir caches verifier results across invocations") {
    TempCacheDir cache;
    const CliResult first = run_cli("verify lemma1 --kmax 2 --cache-dir " + cache.path());
    CHECK(first.exit_code == 0);
    CHECK(!contains(first.output, "(cache hit"));

    const CliResult second = run_cli("verify lemma1 --kmax 2 --cache-dir " + cache.path());
    CHECK(second.exit_code == 0);
    CHECK(contains(second.output, "(cache hit "));
    CHECK(contains(second.output, "115 configurations across 4 contexts, 0 counterexamples"));
  }

  TEST_CASE("WEILCOMB_CACHE_DIR is honoured when --cache-dir is absent") {
    TempCacheDir cache;
    const std::string env_prefix = "env WEILCOMB_CACHE_DIR=" + cache.path() + " ";
    const CliResult first =
        run_command(env_prefix + std::string(WEILCOMB_CLI_PATH) + " verify thm2 --bound 3");
    CHECK(first.exit_code == 0);

    const CliResult second =
        run_command(env_prefix + std::string(WEILCOMB_CLI_PATH) + " verify thm2 --bound 3");
    CHECK(second.exit_code == 0);
    CHECK(contains(second.output, "(cache hit "));
  }
}
