// rdfqa: quality assessment for RDF datasets over N-Triples input.
//
// Subcommands: assess, check, gen, bench-sizeup, bench-speedup.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "rdfqa/bench.hpp"
#include "rdfqa/config.hpp"
#include "rdfqa/dqv.hpp"
#include "rdfqa/engine.hpp"
#include "rdfqa/generator.hpp"
#include "rdfqa/ntriples.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitInput = 2;
constexpr int kExitTimeout = 3;

// Whole-process deadline: kills the run wherever it is. No job-scheduler
// semantics, just a hard stop.
void arm_timeout(double seconds) {
  if (seconds <= 0) return;
  std::thread([seconds] {
    std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
    std::cerr << "error: timeout after " << seconds << "s\n";
    std::_Exit(kExitTimeout);
  }).detach();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::size_t default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

bool write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

std::string flags_field(const rdfqa::MetricResult& r) {
  std::string flags;
  for (rdfqa::MetricFlag f : r.flags) {
    if (!flags.empty()) flags += ';';
    flags += std::string(rdfqa::to_string(f));
  }
  return flags;
}

std::string results_csv(const std::vector<rdfqa::MetricResult>& results) {
  std::ostringstream out;
  out << "metric,value,kind,flags,action_counts,rule_evaluations,wall_ms,error\n";
  for (const rdfqa::MetricResult& r : results) {
    out << r.id << ',';
    if (!r.failed()) out << rdfqa::format_double(r.value);
    out << ',';
    if (r.value_kind) out << rdfqa::to_string(*r.value_kind);
    out << ',' << flags_field(r) << ',';
    std::string counts;
    for (const auto& [label, count] : r.action_counts) {
      if (!counts.empty()) counts += ';';
      counts += label + "=" + std::to_string(count);
    }
    out << counts << ',' << r.rule_evaluations << ','
        << rdfqa::format_double(r.wall_time.count() * 1000.0) << ',';
    // Plan errors may contain commas; quote the field per RFC 4180.
    if (r.failed()) {
      std::string quoted = r.error;
      std::string escaped;
      for (char c : quoted) {
        if (c == '"') escaped += '"';
        escaped += c;
      }
      out << '"' << escaped << '"';
    }
    out << '\n';
  }
  return out.str();
}

struct AssessArgs {
  std::string input;
  std::string metrics;
  std::string config_path;
  std::size_t workers = 0;
  std::size_t partitions = 0;
  bool strict = false;
  bool shared_scan = false;
  std::string dqv_path;
  std::string out_path;
  std::string dataset_iri;
  std::string timestamp;
};

int run_assess(const AssessArgs& args) {
  rdfqa::AssessmentConfig config;
  config.workers = default_workers();
  if (!args.config_path.empty()) {
    if (auto err = rdfqa::apply_config_file(args.config_path, config)) {
      std::cerr << "error: " << *err << '\n';
      return kExitConfig;
    }
  }
  if (!args.metrics.empty()) {
    if (std::filesystem::exists(args.metrics)) {
      config.metrics.clear();
      config.metric_files = {args.metrics};
    } else {
      config.metrics = split_list(args.metrics);
      config.metric_files.clear();
    }
  }
  if (args.workers > 0) config.workers = args.workers;
  if (args.partitions > 0) config.partitions = args.partitions;
  if (args.shared_scan) config.mode = rdfqa::EngineMode::SharedScan;
  if (!args.dataset_iri.empty()) config.dataset_iri = args.dataset_iri;
  if (!args.timestamp.empty()) config.frozen_timestamp = args.timestamp;

  rdfqa::ResolvedPlans plans = rdfqa::resolve_plans(config);
  if (!plans.ok()) {
    for (const std::string& e : plans.errors) std::cerr << "error: " << e << '\n';
    return kExitConfig;
  }

  auto p0 = std::chrono::steady_clock::now();
  rdfqa::DatasetResult parsed = rdfqa::parse_dataset_file(
      args.input,
      args.strict ? rdfqa::ErrorPolicy::Strict : rdfqa::ErrorPolicy::SkipAndCount);
  auto p1 = std::chrono::steady_clock::now();
  if (!parsed.ok()) {
    const rdfqa::ParseError& e = *parsed.error;
    std::cerr << "error: " << rdfqa::to_string(e.kind) << " at line " << e.line_no
              << ": " << e.message << '\n';
    return kExitInput;
  }
  const rdfqa::Dataset& dataset = parsed.dataset;
  if (dataset.parse_report.lines_skipped > 0)
    std::cerr << "warning: skipped " << dataset.parse_report.lines_skipped
              << " malformed line(s) of " << dataset.parse_report.lines_total
              << '\n';

  rdfqa::AssessOptions options;
  options.workers = config.workers;
  options.partitions = config.partitions;
  options.mode = config.mode;
  rdfqa::AssessmentOutcome outcome =
      rdfqa::assess(plans.plans, dataset, config.context, options);
  if (!outcome.ok()) {
    for (const std::string& e : outcome.config_errors)
      std::cerr << "error: " << e << '\n';
    return kExitConfig;
  }

  rdfqa::RunManifest manifest;
  manifest.config_json = rdfqa::config_snapshot_json(config);
  manifest.dataset_path = args.input;
  manifest.triple_count = dataset.size();
  manifest.parse_seconds = std::chrono::duration<double>(p1 - p0).count();
  manifest.workers = config.workers;
  manifest.mode = config.mode;
  manifest.results = outcome.results;

  if (args.out_path.empty()) {
    std::cout << results_csv(outcome.results);
  } else if (args.out_path.ends_with(".json")) {
    if (!write_text_file(args.out_path, rdfqa::run_manifest_json(manifest))) {
      std::cerr << "error: cannot write " << args.out_path << '\n';
      return kExitConfig;
    }
  } else {
    if (!write_text_file(args.out_path, results_csv(outcome.results))) {
      std::cerr << "error: cannot write " << args.out_path << '\n';
      return kExitConfig;
    }
    if (!write_text_file(args.out_path + ".run.json",
                         rdfqa::run_manifest_json(manifest))) {
      std::cerr << "error: cannot write " << args.out_path << ".run.json\n";
      return kExitConfig;
    }
  }

  if (!args.dqv_path.empty()) {
    try {
      rdfqa::Dataset report =
          rdfqa::dqvify(outcome.results, config.dataset_iri, config.dqv_base,
                        config.frozen_timestamp);
      std::ostringstream buf;
      rdfqa::write_ntriples(report, buf);
      if (!write_text_file(args.dqv_path, buf.str())) {
        std::cerr << "error: cannot write " << args.dqv_path << '\n';
        return kExitConfig;
      }
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitConfig;
    }
  }

  for (const rdfqa::MetricResult& r : outcome.results)
    if (r.failed())
      std::cerr << "warning: metric " << r.id << " failed: " << r.error << '\n';
  return kExitOk;
}

int run_check(const std::string& input, bool strict) {
  rdfqa::DatasetResult parsed = rdfqa::parse_dataset_file(
      input,
      strict ? rdfqa::ErrorPolicy::Strict : rdfqa::ErrorPolicy::SkipAndCount);
  const rdfqa::ParseReport& report = parsed.dataset.parse_report;
  std::cout << "lines:   " << report.lines_total << '\n'
            << "triples: " << report.triples_ok << '\n'
            << "skipped: " << report.lines_skipped << '\n'
            << "blank:   " << report.lines_blank << '\n';
  std::size_t shown = 0;
  for (const rdfqa::ParseError& e : report.errors) {
    if (++shown > 10) {
      std::cout << "... (" << report.errors.size() - 10 << " more)\n";
      break;
    }
    std::cout << "line " << e.line_no << " [" << rdfqa::to_string(e.kind)
              << "] " << e.message << '\n';
  }
  if (!parsed.ok()) {
    const rdfqa::ParseError& e = *parsed.error;
    std::cerr << "error: " << rdfqa::to_string(e.kind) << " at line "
              << e.line_no << ": " << e.message << '\n';
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Data-parallel quality assessment for RDF datasets"};
  app.require_subcommand(1);

  double timeout_seconds = 0.0;
  app.add_option("--timeout", timeout_seconds,
                 "Abort the whole run after this many seconds (exit 3)");

  // assess
  AssessArgs assess_args;
  CLI::App* assess = app.add_subcommand("assess", "Evaluate metrics over an N-Triples file");
  assess->add_option("--input", assess_args.input, "N-Triples input file")->required();
  assess->add_option("--metrics", assess_args.metrics,
                     "Comma-separated metric ids, or a metric definition file");
  assess->add_option("--config", assess_args.config_path, "JSON configuration file");
  assess->add_option("--workers", assess_args.workers, "Worker thread count");
  assess->add_option("--partitions", assess_args.partitions, "Partition count");
  assess->add_flag("--strict", assess_args.strict, "Abort on the first malformed line");
  assess->add_flag("--shared-scan", assess_args.shared_scan,
                   "Evaluate all metrics in one pass per partition");
  assess->add_option("--dqv", assess_args.dqv_path, "Write a DQV report (N-Triples)");
  assess->add_option("--out", assess_args.out_path,
                     "Output file (.csv or .json); default prints CSV");
  assess->add_option("--dataset-iri", assess_args.dataset_iri,
                     "Dataset IRI used in the DQV report");
  assess->add_option("--timestamp", assess_args.timestamp,
                     "Pin the DQV timestamp (xsd:dateTime)");

  // check
  std::string check_input;
  bool check_strict = false;
  CLI::App* check = app.add_subcommand("check", "Parse an N-Triples file and report");
  check->add_option("--input", check_input, "N-Triples input file")->required();
  check->add_flag("--strict", check_strict, "Fail on the first malformed line");

  // gen
  rdfqa::GeneratorProfile profile;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic N-Triples dataset");
  gen->add_option("--out", gen_out, "Output file")->required();
  gen->add_option("--triples", profile.n_triples, "Number of triples")->required();
  gen->add_option("--seed", profile.seed, "PRNG seed");
  gen->add_option("--external-links", profile.fraction_external_links,
                  "Fraction of cross-namespace link triples");
  gen->add_option("--literals", profile.fraction_literals,
                  "Fraction of literal-object triples");
  gen->add_option("--malformed", profile.fraction_malformed_typed_literals,
                  "Fraction of malformed typed literals (of total)");
  gen->add_option("--long-uris", profile.long_uri_fraction,
                  "Fraction of triples with an over-long IRI");
  gen->add_flag("--license,!--no-license", profile.include_license,
                "Include a license statement");

  // bench-sizeup
  std::string sizes_arg, bench_metrics = "L1,I2,RC1", bench_out;
  std::size_t bench_workers = 4;
  std::uint64_t bench_seed = 42;
  int bench_runs = 3;
  CLI::App* sizeup = app.add_subcommand("bench-sizeup", "Time assessment across growing sizes");
  sizeup->add_option("--sizes", sizes_arg, "Comma-separated ascending triple counts")->required();
  sizeup->add_option("--metrics", bench_metrics, "Metric ids to evaluate");
  sizeup->add_option("--workers", bench_workers, "Fixed worker count");
  sizeup->add_option("--seed", bench_seed, "Generator seed");
  sizeup->add_option("--runs", bench_runs, "Runs per size");
  sizeup->add_option("--out", bench_out, "CSV output file; default prints CSV");

  // bench-speedup
  std::string workers_arg = "1,2,4", speedup_metrics = "L1,I2,RC1", speedup_out,
              speedup_input;
  std::uint64_t speedup_triples = 0;
  std::uint64_t speedup_seed = 42;
  int speedup_runs = 3;
  CLI::App* speedup = app.add_subcommand("bench-speedup", "Time assessment across worker counts");
  speedup->add_option("--workers", workers_arg, "Comma-separated worker counts (must include 1)");
  speedup->add_option("--metrics", speedup_metrics, "Metric ids to evaluate");
  speedup->add_option("--triples", speedup_triples, "Generate this many triples");
  speedup->add_option("--input", speedup_input, "Assess this N-Triples file instead of generating");
  speedup->add_option("--seed", speedup_seed, "Generator seed");
  speedup->add_option("--runs", speedup_runs, "Runs per worker count");
  speedup->add_option("--out", speedup_out, "CSV output file; default prints CSV");

  CLI11_PARSE(app, argc, argv);
  arm_timeout(timeout_seconds);

  if (assess->parsed()) return run_assess(assess_args);
  if (check->parsed()) return run_check(check_input, check_strict);

  if (gen->parsed()) {
    if (auto err = rdfqa::validate_profile(profile)) {
      std::cerr << "error: " << *err << '\n';
      return kExitConfig;
    }
    if (auto err = rdfqa::write_generated_file(profile, gen_out)) {
      std::cerr << "error: " << *err << '\n';
      return kExitConfig;
    }
    std::cerr << "wrote " << gen_out << " and " << gen_out << ".manifest.json\n";
    return kExitOk;
  }

  if (sizeup->parsed()) {
    std::vector<std::uint64_t> sizes;
    for (const std::string& s : split_list(sizes_arg))
      sizes.push_back(std::stoull(s));
    if (sizes.empty()) {
      std::cerr << "error: --sizes must list at least one size\n";
      return kExitConfig;
    }
    for (std::size_t i = 1; i < sizes.size(); ++i)
      if (sizes[i] <= sizes[i - 1]) {
        std::cerr << "error: --sizes must be strictly ascending\n";
        return kExitConfig;
      }
    try {
      rdfqa::SizeupReport report = rdfqa::bench_sizeup(
          sizes, split_list(bench_metrics), bench_workers, bench_seed, bench_runs);
      if (bench_out.empty())
        std::cout << report.csv();
      else if (!write_text_file(bench_out, report.csv())) {
        std::cerr << "error: cannot write " << bench_out << '\n';
        return kExitConfig;
      }
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitConfig;
    }
    return kExitOk;
  }

  if (speedup->parsed()) {
    std::vector<std::size_t> workers;
    for (const std::string& s : split_list(workers_arg))
      workers.push_back(std::stoull(s));
    rdfqa::Dataset dataset;
    if (!speedup_input.empty()) {
      rdfqa::DatasetResult parsed =
          rdfqa::parse_dataset_file(speedup_input, rdfqa::ErrorPolicy::SkipAndCount);
      if (!parsed.ok()) {
        std::cerr << "error: cannot read " << speedup_input << '\n';
        return kExitInput;
      }
      dataset = std::move(parsed.dataset);
    } else if (speedup_triples > 0) {
      dataset =
          rdfqa::generate_dataset(rdfqa::bench_profile(speedup_triples, speedup_seed))
              .dataset;
    } else {
      std::cerr << "error: provide --triples or --input\n";
      return kExitConfig;
    }
    try {
      rdfqa::SpeedupReport report = rdfqa::bench_speedup(
          workers, dataset, split_list(speedup_metrics), speedup_runs);
      if (!report.warning.empty())
        std::cerr << "warning: " << report.warning << '\n';
      if (speedup_out.empty())
        std::cout << report.csv();
      else if (!write_text_file(speedup_out, report.csv())) {
        std::cerr << "error: cannot write " << speedup_out << '\n';
        return kExitConfig;
      }
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitConfig;
    }
    return kExitOk;
  }

  return kExitOk;
}
