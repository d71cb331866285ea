#include "rdfqa/bench.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rdfqa/dqv.hpp"

namespace rdfqa {

GeneratorProfile bench_profile(std::uint64_t n_triples, std::uint64_t seed) {
  GeneratorProfile p;
  p.seed = seed;
  p.n_triples = n_triples;
  p.fraction_external_links = 0.10;
  p.fraction_literals = 0.20;
  p.fraction_malformed_typed_literals = 0.02;
  p.long_uri_fraction = 0.01;
  p.include_license = n_triples > 0;
  return p;
}

namespace {

std::vector<NamedPlan> plans_for(const std::vector<std::string>& metric_ids) {
  std::vector<NamedPlan> plans;
  for (const std::string& id : metric_ids) {
    const MetricDefinition* def = find_metric(id);
    if (!def) throw std::invalid_argument("unknown metric id '" + id + "'");
    plans.push_back({def->id, def->expr, def});
  }
  return plans;
}

void mean_std(const std::vector<double>& xs, double& mean, double& stddev) {
  mean = 0.0;
  stddev = 0.0;
  if (xs.empty()) return;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  var /= static_cast<double>(xs.size());
  stddev = std::sqrt(var);
}

}  // namespace

double timed_assessment(const Dataset& dataset,
                        const std::vector<std::string>& metric_ids,
                        std::size_t workers, const EvaluationContext& ctx) {
  std::vector<NamedPlan> plans = plans_for(metric_ids);
  AssessOptions options;
  options.workers = workers;
  auto t0 = std::chrono::steady_clock::now();
  AssessmentOutcome outcome = assess(plans, dataset, ctx, options);
  auto t1 = std::chrono::steady_clock::now();
  if (!outcome.ok())
    throw std::invalid_argument("assessment configuration error: " +
                                outcome.config_errors.front());
  return std::chrono::duration<double>(t1 - t0).count();
}

SizeupReport bench_sizeup(const std::vector<std::uint64_t>& sizes,
                          const std::vector<std::string>& metric_ids,
                          std::size_t workers, std::uint64_t seed, int runs) {
  SizeupReport report;
  report.workers = workers;
  report.metric_ids = metric_ids;
  report.runs_per_size = runs;
  EvaluationContext ctx = generator_context();
  for (std::uint64_t size : sizes) {
    SizeupRow row;
    row.n_triples = size;
    auto g0 = std::chrono::steady_clock::now();
    GeneratorOutput gen = generate_dataset(bench_profile(size, seed));
    auto g1 = std::chrono::steady_clock::now();
    row.gen_seconds = std::chrono::duration<double>(g1 - g0).count();
    for (int r = 0; r < runs; ++r)
      row.run_seconds.push_back(
          timed_assessment(gen.dataset, metric_ids, workers, ctx));
    mean_std(row.run_seconds, row.mean_seconds, row.std_seconds);
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string SizeupReport::csv() const {
  // Numbers are rendered with round-trip precision so consumers recover the
  // measured values exactly.
  std::ostringstream out;
  out << "n_triples,workers,runs,mean_seconds,std_seconds\n";
  for (const SizeupRow& row : rows) {
    out << row.n_triples << ',' << workers << ',' << runs_per_size << ','
        << format_double(row.mean_seconds) << ','
        << format_double(row.std_seconds) << '\n';
  }
  return out.str();
}

SpeedupReport bench_speedup(const std::vector<std::size_t>& worker_counts,
                            const Dataset& dataset,
                            const std::vector<std::string>& metric_ids,
                            int runs) {
  SpeedupReport report;
  report.metric_ids = metric_ids;
  report.n_triples = dataset.size();
  report.runs_per_point = runs;
  if (dataset.size() < 1000000)
    report.warning =
        "dataset has fewer than 1e6 triples; scheduling overhead may dominate";

  bool has_single = false;
  for (std::size_t w : worker_counts)
    if (w == 1) has_single = true;
  if (!has_single)
    throw std::invalid_argument(
        "speedup requires a single-worker run (include 1 in the worker list)");

  EvaluationContext ctx = generator_context();
  for (std::size_t w : worker_counts) {
    SpeedupRow row;
    row.workers = w;
    for (int r = 0; r < runs; ++r)
      row.run_seconds.push_back(timed_assessment(dataset, metric_ids, w, ctx));
    mean_std(row.run_seconds, row.mean_seconds, row.std_seconds);
    report.rows.push_back(std::move(row));
  }
  double t1 = 0.0;
  for (const SpeedupRow& row : report.rows)
    if (row.workers == 1) t1 = row.mean_seconds;
  for (SpeedupRow& row : report.rows) {
    row.speedup = row.mean_seconds > 0.0 ? t1 / row.mean_seconds : 0.0;
    row.efficiency = row.speedup / static_cast<double>(row.workers);
  }
  return report;
}

std::string SpeedupReport::csv() const {
  // Round-trip precision keeps E*n == S checkable from the file itself.
  std::ostringstream out;
  out << "workers,runs,mean_seconds,std_seconds,speedup,efficiency\n";
  for (const SpeedupRow& row : rows) {
    out << row.workers << ',' << runs_per_point << ','
        << format_double(row.mean_seconds) << ','
        << format_double(row.std_seconds) << ','
        << format_double(row.speedup) << ',' << format_double(row.efficiency)
        << '\n';
  }
  return out.str();
}

LinearFit least_squares(const std::vector<std::pair<double, double>>& points) {
  LinearFit fit;
  std::size_t n = points.size();
  if (n < 2) return fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : points) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double dn = static_cast<double>(n);
  double denom = dn * sxx - sx * sx;
  if (denom == 0.0) return fit;
  fit.slope = (dn * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / dn;
  double mean_y = sy / dn;
  double ss_tot = 0, ss_res = 0;
  for (auto [x, y] : points) {
    double predicted = fit.slope * x + fit.intercept;
    ss_tot += (y - mean_y) * (y - mean_y);
    ss_res += (y - predicted) * (y - predicted);
  }
  fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return fit;
}

}  // namespace rdfqa
