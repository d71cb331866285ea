#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "rdfqa/context.hpp"
#include "rdfqa/eval.hpp"
#include "rdfqa/metrics.hpp"
#include "rdfqa/ntriples.hpp"

namespace rdfqa {

// Contiguous slices of the source dataset; concatenated in order they equal
// the source exactly.
struct PartitionedDataset {
  const Dataset* source = nullptr;
  std::vector<std::span<const Triple>> partitions;

  std::size_t partition_count() const { return partitions.size(); }
};

// Balanced split: the first (n mod p) partitions hold one extra triple, so
// 10 triples over 3 partitions gives sizes (4, 3, 3). p is capped at n; an
// empty dataset yields a single empty partition.
PartitionedDataset partition(const Dataset& d, std::size_t p);

// Counts the transformation's output over all partitions. Bag counts merge
// by addition; distinct projections merge partition-local key sets by union
// before the set algebra runs. The result equals the single-partition count
// for every partition and worker configuration.
std::uint64_t evaluate_count_parallel(const TransformationExpr& t,
                                      const PartitionedDataset& pd,
                                      const EvaluationContext& ctx,
                                      std::size_t workers = 0,
                                      std::uint64_t* rule_evals = nullptr);

// A metric requested for assessment. definition stays null for DSL-defined
// metrics.
struct NamedPlan {
  std::string id;
  MetricPtr expr;
  const MetricDefinition* definition = nullptr;
};

enum class EngineMode { PerMetric, SharedScan };

std::string_view to_string(EngineMode mode);

struct AssessOptions {
  std::size_t workers = 1;
  std::size_t partitions = 0;  // 0: one partition per worker
  EngineMode mode = EngineMode::PerMetric;
};

struct MetricResult {
  std::string id;
  double value = 0.0;
  std::optional<ValueKind> value_kind;
  std::vector<std::pair<std::string, std::uint64_t>> action_counts;
  std::set<MetricFlag> flags;
  std::chrono::duration<double> wall_time{0.0};
  std::string dataset_origin;
  std::uint64_t rule_evaluations = 0;
  std::uint64_t unknown_datatype_literals = 0;
  std::string error;  // non-empty: this metric's plan failed, value is unset

  bool failed() const { return !error.empty(); }
};

struct AssessmentOutcome {
  std::vector<MetricResult> results;
  // Non-empty means nothing was evaluated: configuration problems are
  // reported before any scan starts. Per-metric plan errors, by contrast,
  // fail only their own metric.
  std::vector<std::string> config_errors;

  bool ok() const { return config_errors.empty(); }
};

AssessmentOutcome assess(const std::vector<NamedPlan>& plans, const Dataset& d,
                         const EvaluationContext& ctx,
                         const AssessOptions& options);

}  // namespace rdfqa
