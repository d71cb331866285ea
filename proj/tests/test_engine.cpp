#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>

#include "rdfqa/engine.hpp"
#include "reference_metrics.hpp"
#include "test_util.hpp"

using namespace rdfqa;
using rdfqa_tests::d1_context;
using rdfqa_tests::d1_dataset;

namespace {

std::vector<NamedPlan> builtin_plans(std::initializer_list<const char*> ids) {
  std::vector<NamedPlan> plans;
  for (const char* id : ids) {
    const MetricDefinition* def = find_metric(id);
    REQUIRE(def != nullptr);
    plans.push_back({def->id, def->expr, def});
  }
  return plans;
}

Dataset n_triples(std::size_t n) {
  Dataset d;
  for (std::size_t i = 0; i < n; ++i)
    d.triples.push_back(Triple{Term::iri("http://ex.org/s" + std::to_string(i)),
                               Term::iri("http://ex.org/p"),
                               Term::iri("http://ex.org/o")});
  return d;
}

}  // namespace

TEST_CASE("partitioning shapes") {
  SUBCASE("10 over 3 gives (4,3,3)") {
    Dataset d = n_triples(10);
    PartitionedDataset pd = partition(d, 3);
    REQUIRE(pd.partition_count() == 3);
    CHECK(pd.partitions[0].size() == 4);
    CHECK(pd.partitions[1].size() == 3);
    CHECK(pd.partitions[2].size() == 3);
  }
  SUBCASE("5 over 1") {
    Dataset d = n_triples(5);
    PartitionedDataset pd = partition(d, 1);
    REQUIRE(pd.partition_count() == 1);
    CHECK(pd.partitions[0].size() == 5);
  }
  SUBCASE("empty dataset") {
    Dataset d;
    PartitionedDataset pd = partition(d, 4);
    std::size_t total = 0;
    for (const auto& part : pd.partitions) total += part.size();
    CHECK(total == 0);
  }
  SUBCASE("p larger than n is capped") {
    Dataset d = n_triples(3);
    PartitionedDataset pd = partition(d, 100);
    CHECK(pd.partition_count() == 3);
  }
  SUBCASE("concatenation equals the source") {
    Dataset d = rdfqa_tests::random_dataset(5, 200);
    PartitionedDataset pd = partition(d, 7);
    std::size_t i = 0;
    for (const auto& part : pd.partitions)
      for (const Triple& t : part) CHECK(t == d.triples[i++]);
    CHECK(i == d.size());
  }
}

TEST_CASE("parallel counts are partition invariant") {
  Dataset d = d1_dataset();
  EvaluationContext ctx = d1_context();
  auto literal_objects = TransformationExpr::rule_node(
      RuleExpr::make(RuleKind::IsLiteral, FilterExpr::position(Position::Object)));
  for (std::size_t p : {1u, 2u, 5u}) {
    CAPTURE(p);
    PartitionedDataset pd = partition(d, p);
    CHECK(evaluate_count_parallel(*literal_objects, pd, ctx, 2) == 2);
  }
  auto distinct_subjects = TransformationExpr::select_node(
      FilterExpr::distinct(FilterExpr::position(Position::Subject)));
  for (std::size_t p : {1u, 2u, 5u}) {
    PartitionedDataset pd = partition(d, p);
    CHECK(evaluate_count_parallel(*distinct_subjects, pd, ctx, 2) == 2);
  }
  Dataset empty;
  PartitionedDataset pd = partition(empty, 4);
  CHECK(evaluate_count_parallel(*literal_objects, pd, ctx, 2) == 0);
}

TEST_CASE("assess on the fixture") {
  Dataset d = d1_dataset();
  EvaluationContext ctx = d1_context();
  AssessOptions options;
  options.workers = 2;

  SUBCASE("requested metric values") {
    AssessmentOutcome out =
        assess(builtin_plans({"L1", "I2", "CN2"}), d, ctx, options);
    REQUIRE(out.ok());
    REQUIRE(out.results.size() == 3);
    CHECK(out.results[0].value == 1.0);
    CHECK(out.results[1].value == 0.4);
    CHECK(out.results[2].value == 0.4);
    CHECK(out.results[0].dataset_origin == "fixture:d1");
    CHECK(out.results[1].action_counts.size() == 2);
  }
  SUBCASE("no metrics is a configuration error") {
    AssessmentOutcome out = assess({}, d, ctx, options);
    CHECK_FALSE(out.ok());
  }
  SUBCASE("missing prefixes is a configuration error reported up front") {
    EvaluationContext bare = EvaluationContext::defaults();
    AssessmentOutcome out = assess(builtin_plans({"I2"}), d, bare, options);
    CHECK_FALSE(out.ok());
  }
  SUBCASE("partition count does not change values") {
    AssessOptions eight = options;
    eight.partitions = 8;
    AssessmentOutcome a = assess(builtin_plans({"SV3"}), d, ctx, options);
    AssessmentOutcome b = assess(builtin_plans({"SV3"}), d, ctx, eight);
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    CHECK(a.results[0].value == 1.0);
    CHECK(a.results[0].value == b.results[0].value);
  }
}

TEST_CASE("per-metric plan failures are isolated") {
  Dataset d = d1_dataset();
  EvaluationContext ctx = d1_context();
  auto broken = MetricExpr::action_leaf(ActionExpr::count(
      TransformationExpr::rule_node(RuleExpr::make(
          RuleKind::IsBroken, FilterExpr::position(Position::Object), true))));
  std::vector<NamedPlan> plans = builtin_plans({"L1"});
  plans.push_back({"deref", broken, nullptr});
  plans.push_back(builtin_plans({"CN2"})[0]);

  AssessmentOutcome out = assess(plans, d, ctx, AssessOptions{});
  REQUIRE(out.ok());
  REQUIRE(out.results.size() == 3);
  CHECK_FALSE(out.results[0].failed());
  CHECK(out.results[0].value == 1.0);
  CHECK(out.results[1].failed());
  CHECK(out.results[1].error.find("isBroken") != std::string::npos);
  CHECK_FALSE(out.results[2].failed());
  CHECK(out.results[2].value == 0.4);
}

TEST_CASE("shared scan equals per-metric results") {
  EvaluationContext ctx = rdfqa_tests::random_dataset_context();
  auto all7 = builtin_plans({"L1", "L2", "I2", "U1", "RC1", "SV3", "CN2"});
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    Dataset d = rdfqa_tests::random_dataset(seed, 500);
    CAPTURE(seed);
    AssessOptions per;
    per.workers = 2;
    AssessOptions shared = per;
    shared.mode = EngineMode::SharedScan;
    AssessmentOutcome a = assess(all7, d, ctx, per);
    AssessmentOutcome b = assess(all7, d, ctx, shared);
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    REQUIRE(a.results.size() == b.results.size());
    for (std::size_t i = 0; i < a.results.size(); ++i) {
      CHECK(std::memcmp(&a.results[i].value, &b.results[i].value,
                        sizeof(double)) == 0);
      CHECK(a.results[i].action_counts == b.results[i].action_counts);
      CHECK(a.results[i].rule_evaluations == b.results[i].rule_evaluations);
    }
  }
  SUBCASE("single metric degenerate case") {
    Dataset d = d1_dataset();
    AssessOptions shared;
    shared.mode = EngineMode::SharedScan;
    AssessmentOutcome out =
        assess(builtin_plans({"U1"}), d, d1_context(), shared);
    REQUIRE(out.ok());
    CHECK(out.results[0].value == 0.2);
  }
}

TEST_CASE("rule evaluation counters are linear in dataset size") {
  EvaluationContext ctx = rdfqa_tests::random_dataset_context();
  auto all7 = builtin_plans({"L1", "L2", "I2", "U1", "RC1", "SV3", "CN2"});
  for (std::uint64_t seed : {21u, 22u}) {
    Dataset d = rdfqa_tests::random_dataset(seed, 300);
    AssessmentOutcome out = assess(all7, d, ctx, AssessOptions{2});
    REQUIRE(out.ok());
    for (const MetricResult& r : out.results) {
      CAPTURE(r.id);
      const MetricDefinition* def = find_metric(r.id);
      CHECK(r.rule_evaluations == d.size() * count_rule_nodes(*def->expr));
    }
  }
}

TEST_CASE("unknown datatypes are tallied for datatype metrics") {
  EvaluationContext ctx = d1_context();
  Dataset d = parse_dataset_string(
                  "<http://ex.org/a> <http://ex.org/p> "
                  "\"x\"^^<http://ex.org/customType> .\n"
                  "<http://ex.org/a> <http://ex.org/p> "
                  "\"12\"^^<http://www.w3.org/2001/XMLSchema#int> .\n",
                  ErrorPolicy::Strict, "inline")
                  .dataset;
  AssessmentOutcome out =
      assess(builtin_plans({"SV3", "L1"}), d, ctx, AssessOptions{});
  REQUIRE(out.ok());
  CHECK(out.results[0].flags.contains(MetricFlag::UnknownDatatypesSkipped));
  CHECK(out.results[0].unknown_datatype_literals == 1);
  CHECK_FALSE(out.results[1].flags.contains(MetricFlag::UnknownDatatypesSkipped));
}

TEST_CASE("ratio above one is flagged") {
  Dataset d = parse_dataset_string(
                  "<http://ex.org/a> "
                  "<http://www.w3.org/2000/01/rdf-schema#label> \"x\" .\n",
                  ErrorPolicy::Strict, "inline")
                  .dataset;
  EvaluationContext ctx = d1_context();
  ctx.internal_prefixes = {"http://ex.org/",
                           "http://www.w3.org/2000/01/rdf-schema#"};
  AssessmentOutcome out = assess(builtin_plans({"U1"}), d, ctx, AssessOptions{});
  REQUIRE(out.ok());
  CHECK(out.results[0].value == 2.0);
  CHECK(out.results[0].flags.contains(MetricFlag::RatioAboveOne));
}

TEST_CASE("engine agrees with the straight-scan oracle") {
  EvaluationContext ctx = rdfqa_tests::random_dataset_context();
  auto all7 = builtin_plans({"L1", "L2", "I2", "U1", "RC1", "SV3", "CN2"});
  for (std::uint64_t seed = 300; seed < 320; ++seed) {
    Dataset d = rdfqa_tests::random_dataset(seed, 600);
    CAPTURE(seed);
    AssessOptions options;
    options.workers = 2;
    options.partitions = 4;
    AssessmentOutcome out = assess(all7, d, ctx, options);
    REQUIRE(out.ok());
    rdfqa_tests::ReferenceValues ref = rdfqa_tests::reference_assess(d, ctx);
    CHECK(out.results[0].value == ref.l1);
    CHECK(out.results[1].value == ref.l2);
    CHECK(out.results[2].value == ref.i2);
    CHECK(out.results[3].value == ref.u1);
    CHECK(out.results[4].value == ref.rc1);
    CHECK(out.results[5].value == ref.sv3);
    CHECK(out.results[6].value == ref.cn2);
  }
}
