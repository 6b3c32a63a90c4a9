#include "weilcomb/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "weilcomb/json_io.hpp"
#include "weilcomb/relations.hpp"
#include "weilcomb/version.hpp"

namespace weilcomb {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ConfigError(path, message);
}

void require_object(const json& value, const std::string& path) {
  if (!value.is_object()) fail(path, "expected a JSON object");
}

void reject_unknown_fields(const json& obj, const std::string& path,
                           std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* a) { return key == a; }) == allowed.end()) {
      fail(path.empty() ? key : path + "." + key, "unknown field");
    }
  }
}

long long get_int(const json& obj, const std::string& path, const char* key, long long fallback,
                  bool required = false) {
  if (!obj.contains(key)) {
    if (required) fail(path + "." + key, "required field is missing");
    return fallback;
  }
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<long long>();
}

bool get_bool(const json& obj, const std::string& path, const char* key, bool fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_boolean()) fail(path + "." + key, "expected a boolean");
  return v.get<bool>();
}

std::string get_string(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) fail(path + "." + key, "required field is missing");
  const json& v = obj.at(key);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

long long checked_range(long long value, long long lo, long long hi, const std::string& path) {
  if (value < lo || value > hi) {
    fail(path, "value " + std::to_string(value) + " outside the allowed range [" +
                   std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return value;
}

Limits parse_limits(const json& doc) {
  Limits limits;
  if (!doc.contains("limits")) return limits;
  const json& obj = doc.at("limits");
  require_object(obj, "limits");
  reject_unknown_fields(obj, "limits",
                        {"max_rank", "max_degree", "max_exotic_degree", "max_verify_bound",
                         "max_jobs"});
  limits.max_rank = static_cast<unsigned>(checked_range(
      get_int(obj, "limits", "max_rank", limits.max_rank), 1, kHardRankLimit, "limits.max_rank"));
  limits.max_degree = static_cast<unsigned>(checked_range(
      get_int(obj, "limits", "max_degree", limits.max_degree), 0, 64, "limits.max_degree"));
  limits.max_exotic_degree = static_cast<unsigned>(
      checked_range(get_int(obj, "limits", "max_exotic_degree", limits.max_exotic_degree), 2,
                    kExoticDegreeCeiling, "limits.max_exotic_degree"));
  limits.max_verify_bound =
      checked_range(get_int(obj, "limits", "max_verify_bound", limits.max_verify_bound), 1,
                    1000000, "limits.max_verify_bound");
  limits.max_jobs = static_cast<unsigned>(checked_range(
      get_int(obj, "limits", "max_jobs", limits.max_jobs), 1, 256, "limits.max_jobs"));
  return limits;
}

FieldContext parse_context(const json& doc, const Limits& limits) {
  unsigned k = 3;
  unsigned c = 7;
  if (doc.contains("context")) {
    const json& obj = doc.at("context");
    require_object(obj, "context");
    reject_unknown_fields(obj, "context", {"k", "c"});
    k = static_cast<unsigned>(
        checked_range(get_int(obj, "context", "k", 0, true), 0, limits.max_rank, "context.k"));
    c = static_cast<unsigned>(checked_range(get_int(obj, "context", "c", 0, true), 0,
                                            (1LL << k) - 1, "context.c"));
  }
  try {
    return FieldContext(k, GroupElement{c});
  } catch (const std::invalid_argument& e) {
    fail("context", e.what());
  }
}

std::vector<WeilClass> parse_classes(const json& doc, const FieldContext& ctx) {
  std::vector<WeilClass> classes;
  if (!doc.contains("classes")) return classes;
  const json& arr = doc.at("classes");
  if (!arr.is_array()) fail("classes", "expected an array");

  const auto add = [&](WeilClass cls, const std::string& path) {
    for (const auto& existing : classes) {
      if (existing.label == cls.label) fail(path, "duplicate class label '" + cls.label + "'");
    }
    classes.push_back(std::move(cls));
  };

  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = "classes[" + std::to_string(i) + "]";
    const json& entry = arr.at(i);
    require_object(entry, path);
    if (entry.contains("preset")) {
      reject_unknown_fields(entry, path, {"preset"});
      const std::string preset = get_string(entry, path, "preset");
      try {
        if (preset == "standard_triple") {
          for (auto& cls : standard_triple(ctx)) add(std::move(cls), path);
        } else if (preset == "standard_quadruple") {
          for (auto& cls : standard_quadruple(ctx)) add(std::move(cls), path);
        } else if (preset == "beta") {
          for (auto& cls : standard_quadruple(ctx)) add(std::move(cls), path);
          add(construct_beta(ctx), path);
        } else {
          fail(path + ".preset", "unknown preset '" + preset + "'");
        }
      } catch (const std::invalid_argument& e) {
        fail(path + ".preset", e.what());
      }
      continue;
    }

    reject_unknown_fields(entry, path, {"label", "kind", "divisor", "section_index"});
    const std::string label = get_string(entry, path, "label");
    if (label.empty()) fail(path + ".label", "label must be nonempty");
    const std::string kind =
        entry.contains("kind") ? get_string(entry, path, "kind") : std::string("ordinary");

    try {
      if (kind == "supersingular") {
        if (entry.contains("divisor") || entry.contains("section_index")) {
          fail(path, "supersingular classes take neither 'divisor' nor 'section_index'");
        }
        add(make_supersingular(ctx, label), path);
      } else if (kind == "ordinary") {
        const bool has_divisor = entry.contains("divisor");
        const bool has_index = entry.contains("section_index");
        if (has_divisor == has_index) {
          fail(path, "ordinary classes take exactly one of 'divisor' or 'section_index'");
        }
        if (has_divisor) {
          add(make_ordinary(ctx, label, io::groupring_from_json(ctx.rank, entry.at("divisor"))),
              path);
        } else {
          const long long idx = get_int(entry, path, "section_index", 0, true);
          if (idx < 0) fail(path + ".section_index", "expected a nonnegative integer");
          add(make_ordinary_by_index(ctx, label, static_cast<std::size_t>(idx)), path);
        }
      } else {
        fail(path + ".kind", "unknown kind '" + kind + "'");
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }
  return classes;
}

const WeilClass* find_class(const std::vector<WeilClass>& classes, const std::string& label) {
  for (const auto& cls : classes) {
    if (cls.label == label) return &cls;
  }
  return nullptr;
}

std::vector<std::pair<std::string, unsigned>> parse_product(const json& doc,
                                                            const std::vector<WeilClass>& classes) {
  std::vector<std::pair<std::string, unsigned>> product;
  if (!doc.contains("product")) {
    for (const auto& cls : classes) product.emplace_back(cls.label, 1);
    return product;
  }
  const json& arr = doc.at("product");
  if (!arr.is_array()) fail("product", "expected an array");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = "product[" + std::to_string(i) + "]";
    const json& entry = arr.at(i);
    require_object(entry, path);
    reject_unknown_fields(entry, path, {"label", "multiplicity"});
    const std::string label = get_string(entry, path, "label");
    if (find_class(classes, label) == nullptr) {
      fail(path + ".label", "unknown class label '" + label + "'");
    }
    const unsigned mult = static_cast<unsigned>(
        checked_range(get_int(entry, path, "multiplicity", 1), 1, 64, path + ".multiplicity"));
    product.emplace_back(label, mult);
  }
  return product;
}

ProductSpec build_product_spec(const ScenarioConfig& config) {
  std::vector<ProductFactor> factors;
  for (const auto& [label, mult] : config.product) {
    const WeilClass* cls = find_class(config.classes, label);
    if (cls == nullptr) fail("product", "unknown class label '" + label + "'");
    factors.push_back(ProductFactor{*cls, mult});
  }
  return ProductSpec(config.ctx, std::move(factors));
}

void parse_tasks(const json& doc, ScenarioConfig& config) {
  if (!doc.contains("tasks")) return;
  const json& arr = doc.at("tasks");
  if (!arr.is_array()) fail("tasks", "expected an array");

  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = "tasks[" + std::to_string(i) + "]";
    const json& entry = arr.at(i);
    require_object(entry, path);
    const std::string name = get_string(entry, path, "task");
    ScenarioConfig::Task task;
    task.name = name;
    task.params = json::object();

    if (name == "enumerate") {
      reject_unknown_fields(entry, path, {"task"});
    } else if (name == "analyze") {
      reject_unknown_fields(entry, path, {"task", "degree", "expect_gaps"});
      const long long degree = checked_range(get_int(entry, path, "degree", 0, true), 0,
                                             config.limits.max_degree, path + ".degree");
      task.params["degree"] = degree;
      task.params["expect_gaps"] = get_bool(entry, path, "expect_gaps", false);
      try {
        const ProductSpec spec = build_product_spec(config);
        if (degree > 2LL * spec.total_dimension()) {
          fail(path + ".degree", "degree exceeds 2 x total dimension " +
                                     std::to_string(2 * spec.total_dimension()));
        }
      } catch (const ConfigError&) {
        throw;
      } catch (const std::invalid_argument& e) {
        fail("product", e.what());
      }
    } else if (name == "verify_lemma1") {
      reject_unknown_fields(entry, path, {"task", "kmax"});
      task.params["kmax"] = checked_range(get_int(entry, path, "kmax", 0, true), 1,
                                          config.limits.max_rank, path + ".kmax");
    } else if (name == "verify_thm2") {
      reject_unknown_fields(entry, path, {"task", "bound"});
      task.params["bound"] = checked_range(get_int(entry, path, "bound", 0, true), 1,
                                           config.limits.max_verify_bound, path + ".bound");
      if (!(config.ctx == standard_context())) {
        fail(path, "verify_thm2 requires the standard context k=3, c=7");
      }
    } else if (name == "relations") {
      reject_unknown_fields(entry, path, {"task", "max_degree", "generators"});
      task.params["max_degree"] = checked_range(get_int(entry, path, "max_degree", 0, true), 2,
                                                config.limits.max_exotic_degree,
                                                path + ".max_degree");
      json generators = json::array();
      if (entry.contains("generators")) {
        const json& gens = entry.at("generators");
        if (!gens.is_array()) fail(path + ".generators", "expected an array of class labels");
        for (const auto& g : gens) {
          if (!g.is_string()) fail(path + ".generators", "expected an array of class labels");
          const std::string label = g.get<std::string>();
          if (find_class(config.classes, label) == nullptr) {
            fail(path + ".generators", "unknown class label '" + label + "'");
          }
          generators.push_back(label);
        }
      } else {
        for (const auto& cls : config.classes) generators.push_back(cls.label);
      }
      if (generators.empty()) fail(path + ".generators", "generator set must be nonempty");
      task.params["generators"] = std::move(generators);
    } else {
      fail(path + ".task", "unknown task '" + name + "'");
    }
    config.tasks.push_back(std::move(task));
  }
}

}  // namespace

ScenarioConfig parse_config(const json& doc) {
  require_object(doc, "");
  reject_unknown_fields(doc, "", {"schema", "context", "classes", "product", "tasks", "limits"});
  const long long schema = get_int(doc, "", "schema", 0, true);
  if (schema != 1) fail("schema", "unsupported config schema version " + std::to_string(schema));

  const Limits limits = parse_limits(doc);
  ScenarioConfig config{json(), parse_context(doc, limits), {}, {}, {}, limits};
  config.echo = doc;
  config.classes = parse_classes(doc, config.ctx);
  config.product = parse_product(doc, config.classes);
  parse_tasks(doc, config);
  return config;
}

std::string fnv1a64_hex(const std::string& data) {
  std::uint64_t hash = 14695981039346656037ull;
  for (const unsigned char ch : data) {
    hash ^= ch;
    hash *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << hash;
  return os.str();
}

namespace {

std::optional<json> cache_load(const std::string& dir, const std::string& key,
                               const std::string& task, const json& params) {
  namespace fs = std::filesystem;
  const fs::path path = fs::path(dir) / ("weilcomb-" + key + ".json");
  std::error_code ec;
  if (!fs::exists(path, ec) || ec) return std::nullopt;
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json entry = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
  if (entry.value("key", "") != key || entry.value("task", "") != task ||
      !entry.contains("params") || entry.at("params") != params || !entry.contains("result")) {
    return std::nullopt;
  }
  return entry.at("result");
}

void cache_store(const std::string& dir, const std::string& key, const std::string& task,
                 const json& params, const json& result) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) return;  // caching is best-effort
  const fs::path path = fs::path(dir) / ("weilcomb-" + key + ".json");
  std::ofstream out(path);
  if (!out) return;
  out << json{{"key", key}, {"task", task}, {"params", params}, {"result", result}}.dump(2)
      << "\n";
}

std::string cache_key(const std::string& task, const json& params) {
  return fnv1a64_hex(task + "\n" + params.dump() + "\n" + kCacheEpoch);
}

GeneratorSet build_generator_set(const ScenarioConfig& config, const json& labels) {
  std::vector<WeilClass> classes;
  for (const auto& label : labels) {
    const WeilClass* cls = find_class(config.classes, label.get<std::string>());
    if (cls == nullptr) fail("generators", "unknown class label");
    classes.push_back(*cls);
  }
  return GeneratorSet(config.ctx, std::move(classes));
}

json relations_task_result(const ScenarioConfig& config, const json& params) {
  const GeneratorSet gens = build_generator_set(config, params.at("generators"));
  const auto degree2 = degree2_relations(gens);
  const RelationLattice lattice = degree2_lattice(gens);
  const auto exotic = find_exotic(gens, params.at("max_degree").get<unsigned>());

  json slots = json::array();
  for (const auto& slot : gens.slots()) slots.push_back(slot.name);

  json degree2_json = json::array();
  for (const auto& rel : degree2) {
    json entry = io::to_json(gens, rel);
    entry["name"] = io::relation_to_string(gens, rel);
    degree2_json.push_back(std::move(entry));
  }

  json exotic_json = json::array();
  for (const auto& rel : exotic) {
    json entry = io::to_json(gens, rel);
    entry["name"] = io::relation_to_string(gens, rel);
    entry["membership"] = io::to_json(gens, lattice_membership(rel, lattice));
    const auto monoid = monoid_certificate(gens, rel, degree2);
    entry["monoid_member"] = monoid.has_value();
    entry["monoid_certificate"] = monoid ? json(*monoid) : json();
    exotic_json.push_back(std::move(entry));
  }

  return json{{"slots", std::move(slots)},
              {"degree2", std::move(degree2_json)},
              {"exotic", std::move(exotic_json)}};
}

}  // namespace

json census_report(const FieldContext& ctx) {
  const auto sections = enumerate_sections(ctx);
  json rows = json::array();
  for (std::size_t i = 0; i < sections.size(); ++i) {
    const Classification cl = classify_section(ctx, sections[i]);
    json row = io::to_json(cl);
    row["index"] = i;
    row["divisor"] = io::to_json(sections[i]);
    rows.push_back(std::move(row));
  }

  const OrbitReport mod_c = orbits(ctx, /*mod_c=*/true, /*mod_galois=*/false);
  const OrbitReport both = orbits(ctx, /*mod_c=*/true, /*mod_galois=*/true);
  auto sizes = class_sizes_mod_c(ctx, both);

  const auto classes_json = [](const OrbitReport& report) {
    json out = json::array();
    for (const auto& members : report.classes) out.push_back(members);
    return out;
  };

  std::vector<std::size_t> sorted_sizes = sizes;
  std::sort(sorted_sizes.begin(), sorted_sizes.end());
  std::string breakdown;
  for (std::size_t s : sorted_sizes) {
    if (!breakdown.empty()) breakdown += "+";
    breakdown += std::to_string(s);
  }
  if (breakdown.empty()) breakdown = "none";
  const std::string summary =
      std::to_string(mod_c.classes.size()) + " up to conjugation; classes " + breakdown;

  return json{{"context", io::to_json(ctx)},
              {"count", sections.size()},
              {"sections", std::move(rows)},
              {"orbits",
               json{{"mod_c", json{{"count", mod_c.classes.size()},
                                   {"classes", classes_json(mod_c)}}},
                    {"mod_c_galois", json{{"count", both.classes.size()},
                                          {"classes", classes_json(both)},
                                          {"sizes_mod_c", sizes}}}}},
              {"summary", summary}};
}

RunOutcome run_scenario(const ScenarioConfig& config, const RunOptions& options) {
  if (options.jobs < 1 || options.jobs > config.limits.max_jobs) {
    fail("jobs", "jobs must lie in [1, " + std::to_string(config.limits.max_jobs) + "]");
  }

  json report{{"tool", json{{"name", kToolName}, {"version", kToolVersion}}},
              {"schema", 1},
              {"config", config.echo}};
  json tasks = json::array();
  std::string status = "ok";

  for (const auto& task : config.tasks) {
    json entry{{"task", task.name}, {"params", task.params}};
    std::string task_status = "ok";
    const bool cacheable = task.name == "verify_lemma1" || task.name == "verify_thm2";
    const std::string key = cacheable ? cache_key(task.name, task.params) : std::string();

    const auto start = std::chrono::steady_clock::now();
    json result;
    bool cache_hit = false;
    if (cacheable && options.cache_dir) {
      if (auto cached = cache_load(*options.cache_dir, key, task.name, task.params)) {
        result = std::move(*cached);
        cache_hit = true;
      }
    }

    if (!cache_hit) {
      if (task.name == "enumerate") {
        result = census_report(config.ctx);
      } else if (task.name == "analyze") {
        const ProductSpec spec = build_product_spec(config);
        const ConiveauReport analysis =
            analyze(spec, task.params.at("degree").get<unsigned>(), options.jobs);
        result = io::to_json(spec, analysis);
      } else if (task.name == "verify_lemma1") {
        const Lemma1Report verification = verify_lemma1(
            task.params.at("kmax").get<unsigned>(), options.jobs, config.limits.max_rank);
        result = io::to_json(verification);
      } else if (task.name == "verify_thm2") {
        const Thm2Report verification =
            verify_thm2(config.ctx, task.params.at("bound").get<Coeff>());
        result = io::to_json(verification);
      } else if (task.name == "relations") {
        result = relations_task_result(config, task.params);
      } else {
        fail("tasks", "unknown task '" + task.name + "'");
      }
      if (cacheable && options.cache_dir) {
        cache_store(*options.cache_dir, key, task.name, task.params, result);
      }
    }

    if (task.name == "analyze") {
      const bool expect_gaps = task.params.at("expect_gaps").get<bool>();
      const bool has_gaps = !result.at("gaps").empty();
      if (has_gaps && !expect_gaps) {
        task_status = "unexpected_gaps";
      } else if (!has_gaps && expect_gaps) {
        task_status = "expected_gaps_missing";
      }
    } else if (task.name == "verify_lemma1") {
      if (!result.at("counterexamples").empty()) task_status = "counterexamples";
    } else if (task.name == "verify_thm2") {
      if (!result.at("counterexamples").empty()) {
        task_status = "counterexamples";
      } else if (!result.at("zero_at_c").get<bool>() ||
                 !result.at("zero_at_s1s2").get<bool>()) {
        task_status = "structural_check_failed";
      }
    }

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    entry["result"] = std::move(result);
    entry["status"] = task_status;
    entry["wall_time_ms"] = static_cast<std::int64_t>(elapsed.count());
    if (cacheable && options.cache_dir) {
      entry["cache"] = json{{"hit", cache_hit}, {"key", key}};
    }
    tasks.push_back(std::move(entry));
    if (task_status != "ok" && status == "ok") status = task_status;
  }

  report["tasks"] = std::move(tasks);
  report["status"] = status;
  report["exit_code"] = status == "ok" ? 0 : 1;
  return RunOutcome{std::move(report), status == "ok" ? 0 : 1};
}

namespace {

std::string divisor_text(const json& divisor) {
  std::string out = "[";
  for (std::size_t i = 0; i < divisor.size(); ++i) {
    if (i > 0) out += ",";
    out += divisor.at(i).dump();
  }
  return out + "]";
}

void render_enumerate(std::ostringstream& os, const json& result) {
  os << result.at("count").get<std::size_t>() << " sections; "
     << result.at("summary").get<std::string>() << "\n";
  const json& sections = result.at("sections");
  constexpr std::size_t kMaxRows = 64;
  for (std::size_t i = 0; i < sections.size() && i < kMaxRows; ++i) {
    const json& row = sections.at(i);
    os << "  [" << row.at("index").get<std::size_t>() << "] divisor="
       << divisor_text(row.at("divisor")) << " stab_order=" << row.at("stabilizer").size()
       << " field_degree=" << row.at("field_degree").get<unsigned>()
       << (row.at("elliptic").get<bool>() ? " elliptic" : " non-elliptic")
       << " dim=" << row.at("dimension").get<unsigned>() << "\n";
  }
  if (sections.size() > kMaxRows) {
    os << "  ... (" << sections.size() - kMaxRows << " more)\n";
  }
}

void render_analyze(std::ostringstream& os, const json& entry) {
  const json& result = entry.at("result");
  const bool expected = entry.at("params").at("expect_gaps").get<bool>();
  os << result.at("monomials").size() << " monomials, " << result.at("gaps").size() << " gaps";
  if (!result.at("gaps").empty()) os << (expected ? " (expected)" : " (UNEXPECTED)");
  os << "\n";
  for (const json& gap : result.at("gaps")) {
    os << "  gap " << gap.at("name").get<std::string>() << ": tate="
       << gap.at("tate").get<unsigned>() << " witnessed=" << gap.at("witnessed").get<unsigned>()
       << "\n";
  }
}

void render_relations(std::ostringstream& os, const json& result) {
  os << result.at("degree2").size() << " degree-2 relations; " << result.at("exotic").size()
     << " exotic\n";
  for (const json& rel : result.at("degree2")) {
    os << "  degree-2 " << rel.at("name").get<std::string>() << "\n";
  }
  for (const json& rel : result.at("exotic")) {
    os << "  exotic " << rel.at("name").get<std::string>() << ": ";
    const json& membership = rel.at("membership");
    if (membership.at("member").get<bool>()) {
      os << "inside degree-2 lattice";
    } else {
      os << "outside degree-2 lattice";
      if (!membership.at("obstruction").is_null()) {
        os << " (" << membership.at("obstruction").get<std::string>() << ")";
      }
    }
    os << "; monoid: " << (rel.at("monoid_member").get<bool>() ? "yes" : "no") << "\n";
  }
}

}  // namespace

std::string render_text_summary(const json& report) {
  std::ostringstream os;
  os << report.at("tool").at("name").get<std::string>() << " "
     << report.at("tool").at("version").get<std::string>() << "\n";
  for (const json& entry : report.at("tasks")) {
    const std::string name = entry.at("task").get<std::string>();
    os << "task " << name;
    const json& params = entry.at("params");
    if (!params.empty()) {
      os << " (";
      bool first = true;
      for (const auto& [key, value] : params.items()) {
        if (!first) os << ", ";
        first = false;
        os << key << "=" << value.dump();
      }
      os << ")";
    }
    os << ": ";
    const json& result = entry.at("result");
    if (name == "enumerate") {
      render_enumerate(os, result);
    } else if (name == "analyze") {
      render_analyze(os, entry);
    } else if (name == "verify_lemma1") {
      os << result.at("configurations_checked").get<std::uint64_t>() << " configurations across "
         << result.at("contexts_scanned").get<std::uint64_t>() << " contexts, "
         << result.at("counterexamples").size() << " counterexamples\n";
    } else if (name == "verify_thm2") {
      os << result.at("configurations_checked").get<std::uint64_t>() << " configurations, "
         << result.at("counterexamples").size() << " counterexamples, structural zeros "
         << (result.at("zero_at_c").get<bool>() && result.at("zero_at_s1s2").get<bool>() ? "ok"
                                                                                         : "VIOLATED")
         << "\n";
    } else if (name == "relations") {
      render_relations(os, result);
    } else {
      os << "done\n";
    }
    if (entry.contains("cache") && entry.at("cache").at("hit").get<bool>()) {
      os << "  (cache hit " << entry.at("cache").at("key").get<std::string>() << ")\n";
    }
  }
  os << "status: " << report.at("status").get<std::string>() << " (exit "
     << report.at("exit_code").get<int>() << ")\n";
  return os.str();
}

}  // namespace weilcomb
