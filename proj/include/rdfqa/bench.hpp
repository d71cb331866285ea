#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rdfqa/engine.hpp"
#include "rdfqa/generator.hpp"

namespace rdfqa {

// Workload profile used by the benchmark commands: a fixed class mix so
// per-triple cost is size-independent.
GeneratorProfile bench_profile(std::uint64_t n_triples, std::uint64_t seed);

struct BenchError {
  std::string message;
};

// Size-up: fixed worker count, growing data. Timing covers the metric
// evaluation stage only; generation happens outside the timed region and is
// reported separately.
struct SizeupRow {
  std::uint64_t n_triples = 0;
  std::vector<double> run_seconds;
  double mean_seconds = 0.0;
  double std_seconds = 0.0;
  double gen_seconds = 0.0;
};

struct SizeupReport {
  std::vector<SizeupRow> rows;
  std::size_t workers = 0;
  std::vector<std::string> metric_ids;
  int runs_per_size = 0;

  // Header: n_triples,workers,runs,mean_seconds,std_seconds
  std::string csv() const;
};

SizeupReport bench_sizeup(const std::vector<std::uint64_t>& sizes,
                          const std::vector<std::string>& metric_ids,
                          std::size_t workers, std::uint64_t seed,
                          int runs = 3);

// Speedup S = T1/Tn and efficiency E = S/n over a fixed dataset (the
// workers list must include 1, which anchors S(1) = 1).
struct SpeedupRow {
  std::size_t workers = 0;
  std::vector<double> run_seconds;
  double mean_seconds = 0.0;
  double std_seconds = 0.0;
  double speedup = 0.0;
  double efficiency = 0.0;
};

struct SpeedupReport {
  std::vector<SpeedupRow> rows;
  std::vector<std::string> metric_ids;
  std::uint64_t n_triples = 0;
  int runs_per_point = 0;
  std::string warning;  // set when the dataset is too small to amortize

  // Header: workers,runs,mean_seconds,std_seconds,speedup,efficiency
  std::string csv() const;
};

SpeedupReport bench_speedup(const std::vector<std::size_t>& worker_counts,
                            const Dataset& dataset,
                            const std::vector<std::string>& metric_ids,
                            int runs = 3);

// Ordinary least squares y = slope*x + intercept with the coefficient of
// determination; used to check size-up linearity.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LinearFit least_squares(const std::vector<std::pair<double, double>>& points);

// One evaluation pass, returning its wall time in seconds. Shared by both
// benchmarks. Throws std::invalid_argument for unknown metric ids.
double timed_assessment(const Dataset& dataset,
                        const std::vector<std::string>& metric_ids,
                        std::size_t workers, const EvaluationContext& ctx);

}  // namespace rdfqa
