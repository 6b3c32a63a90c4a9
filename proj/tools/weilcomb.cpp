// weilcomb: exact divisor combinatorics of Weil numbers on products of
// elliptic curves -- section censuses, Tate vs witnessed coniveau analyses,
// exhaustive verifiers, and relation-lattice queries, driven by JSON scenario
// configs or direct subcommands.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "weilcomb/scenario.hpp"
#include "weilcomb/version.hpp"

namespace {

using nlohmann::json;

struct GlobalFlags {
  std::optional<std::string> json_path;
  std::optional<std::string> cache_dir;
  unsigned jobs = 1;
};

// Exit codes: 0 all tasks clean, 1 verifier counterexample or unexpected
// gaps, 2 invalid configuration or usage.
constexpr int kExitConfigError = 2;

int execute(const json& config_doc, const GlobalFlags& flags) {
  weilcomb::RunOptions options;
  options.jobs = flags.jobs;
  if (flags.cache_dir) {
    options.cache_dir = flags.cache_dir;
  } else if (const char* env = std::getenv("WEILCOMB_CACHE_DIR")) {
    if (*env != '\0') options.cache_dir = std::string(env);
  }

  const weilcomb::ScenarioConfig config = weilcomb::parse_config(config_doc);
  const weilcomb::RunOutcome outcome = weilcomb::run_scenario(config, options);
  std::cout << weilcomb::render_text_summary(outcome.report);
  if (flags.json_path) {
    std::ofstream out(*flags.json_path);
    if (!out) {
      std::cerr << "error: cannot write report to " << *flags.json_path << "\n";
      return kExitConfigError;
    }
    out << outcome.report.dump(2) << "\n";
  }
  return outcome.exit_code;
}

void add_global_flags(CLI::App* cmd, GlobalFlags& flags) {
  cmd->add_option("--json", flags.json_path, "write the full JSON report to this path");
  cmd->add_option("--cache-dir", flags.cache_dir,
                  "cache directory for exhaustive verifier results "
                  "(default: $WEILCOMB_CACHE_DIR)");
  cmd->add_option("--jobs", flags.jobs, "number of parallel workers")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(weilcomb::kToolName) +
               " - exact Weil-number divisor combinatorics on products of elliptic curves"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(weilcomb::kToolVersion));
  GlobalFlags flags;

  // run <config.json>
  std::string config_path;
  CLI::App* run_cmd = app.add_subcommand("run", "execute a JSON scenario config");
  run_cmd->add_option("config", config_path, "path to the scenario config")->required();
  add_global_flags(run_cmd, flags);

  // enumerate --k --c
  unsigned enum_k = 3;
  long long enum_c = -1;
  CLI::App* enum_cmd =
      app.add_subcommand("enumerate", "enumerate and classify the sections of a context");
  enum_cmd->add_option("--k", enum_k, "group rank")->required();
  enum_cmd->add_option("--c", enum_c, "conjugation element index")->required();
  add_global_flags(enum_cmd, flags);

  // verify lemma1 --kmax | verify thm2 --bound
  CLI::App* verify_cmd = app.add_subcommand("verify", "run an exhaustive verifier");
  verify_cmd->require_subcommand(1);
  unsigned kmax = 3;
  CLI::App* lemma1_cmd = verify_cmd->add_subcommand(
      "lemma1", "pair extraction for elliptic triples across all contexts");
  lemma1_cmd->add_option("--kmax", kmax, "largest group rank to scan")->required();
  add_global_flags(lemma1_cmd, flags);
  long long bound = 6;
  CLI::App* thm2_cmd = verify_cmd->add_subcommand(
      "thm2", "non-divisibility of triple powers in the standard context");
  thm2_cmd->add_option("--bound", bound, "largest exponent per class")->required();
  add_global_flags(thm2_cmd, flags);

  // analyze --preset --degree [--expect-gaps]
  std::string analyze_preset;
  unsigned analyze_degree = 0;
  bool expect_gaps = false;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "coniveau analysis of H^n of a preset product");
  analyze_cmd->add_option("--preset", analyze_preset,
                          "class preset: standard_triple | standard_quadruple | beta")
      ->required();
  analyze_cmd->add_option("--degree", analyze_degree, "cohomological degree n")->required();
  analyze_cmd->add_flag("--expect-gaps", expect_gaps,
                        "treat coniveau gaps as expected (exit 0 when found)");
  add_global_flags(analyze_cmd, flags);

  // relations --preset --max-degree
  std::string relations_preset;
  unsigned relations_degree = 6;
  CLI::App* relations_cmd = app.add_subcommand(
      "relations", "degree-2 relations and exotic relations of a preset generator set");
  relations_cmd->add_option("--preset", relations_preset,
                            "class preset: standard_triple | standard_quadruple | beta")
      ->required();
  relations_cmd->add_option("--max-degree", relations_degree, "exotic enumeration bound")
      ->required();
  add_global_flags(relations_cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help/--version exit 0; every usage error maps onto the config-error
    // exit code so callers see a stable contract (0 ok, 1 findings, 2 usage).
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    json config;
    if (run_cmd->parsed()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "config error: cannot open " << config_path << "\n";
        return kExitConfigError;
      }
      config = json::parse(in, nullptr, /*allow_exceptions=*/false);
      if (config.is_discarded()) {
        std::cerr << "config error: " << config_path << " is not valid JSON\n";
        return kExitConfigError;
      }
    } else if (enum_cmd->parsed()) {
      config = json{{"schema", 1},
                    {"context", json{{"k", enum_k}, {"c", enum_c}}},
                    {"tasks", json::array({json{{"task", "enumerate"}}})}};
    } else if (verify_cmd->parsed()) {
      json task = lemma1_cmd->parsed() ? json{{"task", "verify_lemma1"}, {"kmax", kmax}}
                                       : json{{"task", "verify_thm2"}, {"bound", bound}};
      config = json{{"schema", 1}, {"tasks", json::array({std::move(task)})}};
    } else if (analyze_cmd->parsed()) {
      config = json{{"schema", 1},
                    {"classes", json::array({json{{"preset", analyze_preset}}})},
                    {"tasks", json::array({json{{"task", "analyze"},
                                                {"degree", analyze_degree},
                                                {"expect_gaps", expect_gaps}}})}};
    } else if (relations_cmd->parsed()) {
      config = json{{"schema", 1},
                    {"classes", json::array({json{{"preset", relations_preset}}})},
                    {"tasks", json::array({json{{"task", "relations"},
                                                {"max_degree", relations_degree}}})}};
    }
    return execute(config, flags);
  } catch (const weilcomb::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
}
