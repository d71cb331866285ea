#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdfqa/context.hpp"
#include "rdfqa/engine.hpp"

namespace rdfqa {

// Everything an assessment run needs: which metrics, under which context,
// with which engine settings. Built from defaults, optionally overlaid with
// a JSON config file, then with command-line flags.
struct AssessmentConfig {
  std::vector<std::string> metrics;       // built-in ids
  std::vector<std::string> metric_files;  // DSL definition files
  EvaluationContext context = EvaluationContext::defaults();
  std::size_t workers = 1;
  std::size_t partitions = 0;  // 0: one per worker
  EngineMode mode = EngineMode::PerMetric;
  std::string dataset_iri = "http://example.org/dataset";
  std::string dqv_base = "http://example.org/quality/";
  std::string frozen_timestamp;  // empty: current time
};

// Overlays values found in the JSON text onto config. Returns an error
// message on malformed JSON or unknown keys.
std::optional<std::string> apply_config_json(const std::string& text,
                                             AssessmentConfig& config);

std::optional<std::string> apply_config_file(const std::string& path,
                                             AssessmentConfig& config);

// Serialized snapshot of the effective configuration (for run manifests).
std::string config_snapshot_json(const AssessmentConfig& config);

// Resolves metric ids and DSL files into plans. Unknown ids, unparsable
// files, and plan-illegal DSL definitions are configuration errors.
struct ResolvedPlans {
  std::vector<NamedPlan> plans;
  std::vector<std::string> errors;

  bool ok() const { return errors.empty(); }
};

ResolvedPlans resolve_plans(const AssessmentConfig& config);

// Written alongside every assessment output file.
struct RunManifest {
  std::string config_json;
  std::string dataset_path;
  std::uint64_t triple_count = 0;
  double parse_seconds = 0.0;
  std::size_t workers = 0;
  EngineMode mode = EngineMode::PerMetric;
  std::vector<MetricResult> results;
};

std::string run_manifest_json(const RunManifest& manifest);

}  // namespace rdfqa
