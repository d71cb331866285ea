#include "rdfqa/config.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "rdfqa/dsl.hpp"
#include "rdfqa/metrics.hpp"

namespace rdfqa {

namespace {

using nlohmann::json;

std::optional<std::string> read_string_list(const json& j, const char* key,
                                            std::vector<std::string>& out) {
  if (!j.contains(key)) return std::nullopt;
  const json& v = j.at(key);
  if (!v.is_array()) return std::string(key) + " must be an array of strings";
  std::vector<std::string> values;
  for (const json& item : v) {
    if (!item.is_string()) return std::string(key) + " must contain only strings";
    values.push_back(item.get<std::string>());
  }
  out = std::move(values);
  return std::nullopt;
}

}  // namespace

std::optional<std::string> apply_config_json(const std::string& text,
                                             AssessmentConfig& config) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) return "config is not valid JSON";
  if (!j.is_object()) return "config must be a JSON object";

  static const std::set<std::string> known_keys = {
      "metrics",          "metric_files",
      "internal_prefixes", "license_predicates",
      "license_indication_predicates", "license_phrase_patterns",
      "label_predicates", "type_predicates",
      "uri_length_threshold", "workers",
      "partitions",       "mode",
      "dataset_iri",      "dqv_base",
      "frozen_timestamp",
  };
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known_keys.contains(it.key()))
      return "unknown config key '" + it.key() + "'";

  if (auto e = read_string_list(j, "metrics", config.metrics)) return e;
  if (auto e = read_string_list(j, "metric_files", config.metric_files)) return e;
  if (auto e = read_string_list(j, "internal_prefixes",
                                config.context.internal_prefixes))
    return e;

  auto read_set = [&](const char* key,
                      std::set<std::string, std::less<>>& out)
      -> std::optional<std::string> {
    std::vector<std::string> values;
    if (auto e = read_string_list(j, key, values)) return e;
    if (j.contains(key)) out = {values.begin(), values.end()};
    return std::nullopt;
  };
  if (auto e = read_set("license_predicates", config.context.license_predicates))
    return e;
  if (auto e = read_set("license_indication_predicates",
                        config.context.license_indication_predicates))
    return e;
  if (auto e = read_set("label_predicates", config.context.label_predicates))
    return e;
  if (auto e = read_set("type_predicates", config.context.type_predicates))
    return e;
  if (auto e = read_string_list(j, "license_phrase_patterns",
                                config.context.license_phrase_patterns))
    return e;

  if (j.contains("uri_length_threshold")) {
    if (!j.at("uri_length_threshold").is_number_unsigned())
      return "uri_length_threshold must be a non-negative integer";
    config.context.uri_length_threshold =
        j.at("uri_length_threshold").get<std::size_t>();
  }
  if (j.contains("workers")) {
    if (!j.at("workers").is_number_unsigned() ||
        j.at("workers").get<std::size_t>() == 0)
      return "workers must be a positive integer";
    config.workers = j.at("workers").get<std::size_t>();
  }
  if (j.contains("partitions")) {
    if (!j.at("partitions").is_number_unsigned())
      return "partitions must be a non-negative integer";
    config.partitions = j.at("partitions").get<std::size_t>();
  }
  if (j.contains("mode")) {
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "per-metric")
      config.mode = EngineMode::PerMetric;
    else if (mode == "shared-scan")
      config.mode = EngineMode::SharedScan;
    else
      return "mode must be per-metric or shared-scan";
  }
  if (j.contains("dataset_iri"))
    config.dataset_iri = j.at("dataset_iri").get<std::string>();
  if (j.contains("dqv_base")) config.dqv_base = j.at("dqv_base").get<std::string>();
  if (j.contains("frozen_timestamp"))
    config.frozen_timestamp = j.at("frozen_timestamp").get<std::string>();

  try {
    config.context.compile_patterns();
  } catch (const std::regex_error&) {
    return "license_phrase_patterns contains an invalid regular expression";
  }
  return std::nullopt;
}

std::optional<std::string> apply_config_file(const std::string& path,
                                             AssessmentConfig& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) return "cannot open config file " + path;
  std::ostringstream buf;
  buf << in.rdbuf();
  return apply_config_json(buf.str(), config);
}

std::string config_snapshot_json(const AssessmentConfig& config) {
  json j;
  j["metrics"] = config.metrics;
  j["metric_files"] = config.metric_files;
  j["internal_prefixes"] = config.context.internal_prefixes;
  j["license_predicates"] = config.context.license_predicates;
  j["license_indication_predicates"] =
      config.context.license_indication_predicates;
  j["license_phrase_patterns"] = config.context.license_phrase_patterns;
  j["label_predicates"] = config.context.label_predicates;
  j["type_predicates"] = config.context.type_predicates;
  j["uri_length_threshold"] = config.context.uri_length_threshold;
  j["workers"] = config.workers;
  j["partitions"] = config.partitions;
  j["mode"] = std::string(to_string(config.mode));
  j["dataset_iri"] = config.dataset_iri;
  j["dqv_base"] = config.dqv_base;
  j["frozen_timestamp"] = config.frozen_timestamp;
  return j.dump(2);
}

ResolvedPlans resolve_plans(const AssessmentConfig& config) {
  ResolvedPlans out;
  for (const std::string& id : config.metrics) {
    const MetricDefinition* def = find_metric(id);
    if (!def) {
      out.errors.push_back("unknown metric id '" + id + "'");
      continue;
    }
    NamedPlan plan;
    plan.id = def->id;
    plan.expr = def->expr;
    plan.definition = def;
    out.plans.push_back(std::move(plan));
  }
  for (const std::string& path : config.metric_files) {
    std::ifstream in(path, std::ios::binary);
    if (!in.is_open()) {
      out.errors.push_back("cannot open metric file " + path);
      continue;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    dsl::FileOutcome parsed = dsl::parse_metric_file_text(buf.str());
    for (const dsl::Diagnostic& d : parsed.diagnostics)
      out.errors.push_back(path + ": " + dsl::format_diagnostic(d));
    if (!parsed.ok()) continue;
    for (dsl::NamedMetric& nm : parsed.metrics) {
      NamedPlan plan;
      plan.id = std::move(nm.name);
      plan.expr = std::move(nm.expr);
      out.plans.push_back(std::move(plan));
    }
  }
  if (out.plans.empty() && out.errors.empty())
    out.errors.push_back("no metrics requested");
  return out;
}

std::string run_manifest_json(const RunManifest& manifest) {
  json j;
  j["config"] = json::parse(manifest.config_json);
  j["dataset"] = {
      {"path", manifest.dataset_path},
      {"triples", manifest.triple_count},
      {"parse_seconds", manifest.parse_seconds},
  };
  j["workers"] = manifest.workers;
  j["mode"] = std::string(to_string(manifest.mode));
  json metrics = json::array();
  for (const MetricResult& r : manifest.results) {
    json m;
    m["id"] = r.id;
    if (r.failed()) {
      m["error"] = r.error;
    } else {
      m["value"] = r.value;
      m["wall_seconds"] = r.wall_time.count();
      json counts = json::object();
      for (const auto& [label, count] : r.action_counts) counts[label] = count;
      m["action_counts"] = counts;
      json flags = json::array();
      for (MetricFlag f : r.flags) flags.push_back(std::string(to_string(f)));
      m["flags"] = flags;
      m["rule_evaluations"] = r.rule_evaluations;
    }
    metrics.push_back(std::move(m));
  }
  j["results"] = std::move(metrics);
  return j.dump(2);
}

}  // namespace rdfqa
