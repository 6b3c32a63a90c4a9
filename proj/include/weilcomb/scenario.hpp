#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "weilcomb/coniveau.hpp"
#include "weilcomb/groupring.hpp"
#include "weilcomb/weilmodel.hpp"

namespace weilcomb {

// Configuration error with a JSON-pointer-style path to the offending field.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Ceilings applied to scenario parameters; every field can be overridden from
// the config's "limits" object (within the hard module limits).
struct Limits {
  unsigned max_rank = kDefaultRankCap;
  unsigned max_degree = 16;
  unsigned max_exotic_degree = 8;
  Coeff max_verify_bound = 64;
  unsigned max_jobs = 64;
};

// A validated scenario: the strict-parsed form of a config document.
struct ScenarioConfig {
  struct Task {
    std::string name;             // enumerate | analyze | verify_lemma1 | verify_thm2 | relations
    nlohmann::json params;        // task parameters, normalized
  };

  nlohmann::json echo;            // normalized config document (re-runnable)
  FieldContext ctx;
  std::vector<WeilClass> classes;
  std::vector<std::pair<std::string, unsigned>> product;  // (label, multiplicity)
  std::vector<Task> tasks;
  Limits limits;
};

// Strict parse: unknown fields are rejected, the "schema" version is required,
// every parameter is validated against the (possibly overridden) limits.
// Throws ConfigError.
ScenarioConfig parse_config(const nlohmann::json& doc);

struct RunOptions {
  std::optional<std::string> cache_dir;
  unsigned jobs = 1;
};

struct RunOutcome {
  nlohmann::json report;
  int exit_code = 0;  // 0 ok; 1 verifier counterexample or unexpected gaps
};

// Executes the tasks in order and assembles the run report.  Exhaustive
// verifier results are cached content-addressed under options.cache_dir when
// set.  The report is deterministic for a fixed config apart from the
// wall_time_ms fields and cache-hit flags.
RunOutcome run_scenario(const ScenarioConfig& config, const RunOptions& options);

// Text rendering of a run report for standard output.
std::string render_text_summary(const nlohmann::json& report);

// Section census with classification and orbit structure (the payload of the
// enumerate task), including the summary line such as
// "8 up to conjugation; classes 1+1+1+1+4".
nlohmann::json census_report(const FieldContext& ctx);

// FNV-1a 64-bit hash used for content-addressed cache keys.
std::string fnv1a64_hex(const std::string& data);

}  // namespace weilcomb
