#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rdfqa/eval.hpp"
#include "rdfqa/metrics.hpp"
#include "rdfqa/ntriples.hpp"
#include "test_util.hpp"

using namespace rdfqa;
using rdfqa_tests::d1_context;
using rdfqa_tests::d1_dataset;

namespace {

double value_of(const char* id, const Dataset& d, const EvaluationContext& ctx) {
  const MetricDefinition* def = find_metric(id);
  REQUIRE(def != nullptr);
  return eval_metric(*def->expr, d, ctx).value;
}

Dataset from_lines(const std::string& text) {
  return parse_dataset_string(text, ErrorPolicy::Strict, "inline").dataset;
}

}  // namespace

TEST_CASE("fixture values for all seven metrics") {
  Dataset d = d1_dataset();
  EvaluationContext ctx = d1_context();
  CHECK(value_of("L1", d, ctx) == 1.0);
  CHECK(value_of("L2", d, ctx) == 0.0);
  CHECK(value_of("I2", d, ctx) == 0.4);
  CHECK(value_of("U1", d, ctx) == 0.2);
  CHECK(value_of("RC1", d, ctx) == 0.0);
  CHECK(value_of("SV3", d, ctx) == 1.0);
  CHECK(value_of("CN2", d, ctx) == 0.4);
}

TEST_CASE("L1 machine readable license") {
  EvaluationContext ctx = d1_context();
  Dataset d = d1_dataset();
  CHECK(value_of("L1", Dataset{}, ctx) == 0.0);
  Dataset without_license = d;
  without_license.triples.erase(without_license.triples.begin());
  CHECK(value_of("L1", without_license, ctx) == 0.0);
}

TEST_CASE("L2 human readable license") {
  EvaluationContext ctx = d1_context();
  Dataset hit = from_lines(
      "<http://ex.org/a> <http://purl.org/dc/terms/rights> "
      "\"All rights reserved\" .\n");
  CHECK(value_of("L2", hit, ctx) == 1.0);
  CHECK(value_of("L2", d1_dataset(), ctx) == 0.0);
  CHECK(value_of("L2", Dataset{}, ctx) == 0.0);

  // phrase matching is case-insensitive and substring based
  Dataset mixed_case = from_lines(
      "<http://ex.org/a> <http://purl.org/dc/terms/rights> "
      "\"Published under an open LICENSE.\" .\n");
  CHECK(value_of("L2", mixed_case, ctx) == 1.0);

  // a literal under a non-indication predicate does not count
  Dataset wrong_pred = from_lines(
      "<http://ex.org/a> <http://ex.org/p> \"All rights reserved\" .\n");
  CHECK(value_of("L2", wrong_pred, ctx) == 0.0);
}

TEST_CASE("I2 linkage degree") {
  EvaluationContext ctx = d1_context();
  SUBCASE("internal-only links score zero") {
    Dataset d = from_lines(
        "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .\n"
        "<http://ex.org/b> <http://ex.org/p> <http://ex.org/c> .\n");
    CHECK(value_of("I2", d, ctx) == 0.0);
  }
  SUBCASE("empty dataset gets the zero-denominator flag") {
    const MetricDefinition* i2 = find_metric("I2");
    MetricValue v = eval_metric(*i2->expr, Dataset{}, ctx);
    CHECK(v.value == 0.0);
    CHECK(v.flags.contains(MetricFlag::ZeroDenominator));
  }
  SUBCASE("both directions count") {
    Dataset d = from_lines(
        "<http://ex.org/a> <http://ex.org/p> <http://other.org/x> .\n"
        "<http://other.org/x> <http://ex.org/p> <http://ex.org/a> .\n"
        "<http://ex.org/a> <http://ex.org/p> \"lit\" .\n"
        "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .\n");
    CHECK(value_of("I2", d, ctx) == 0.5);
  }
}

TEST_CASE("U1 human readable labels") {
  EvaluationContext ctx = d1_context();
  SUBCASE("no label predicates means zero") {
    Dataset d = from_lines(
        "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .\n");
    CHECK(value_of("U1", d, ctx) == 0.0);
  }
  SUBCASE("overlapping counts can push the ratio above one") {
    // One triple where subject and predicate rules both fire: the label
    // predicate itself is declared internal.
    Dataset d = from_lines(
        "<http://ex.org/a> "
        "<http://www.w3.org/2000/01/rdf-schema#label> \"x\" .\n");
    EvaluationContext wide = ctx;
    wide.internal_prefixes = {"http://ex.org/",
                              "http://www.w3.org/2000/01/rdf-schema#"};
    const MetricDefinition* u1 = find_metric("U1");
    MetricValue v = eval_metric(*u1->expr, d, wide);
    CHECK(v.value == 2.0);  // r1 and r2 each count the single triple
  }
}

TEST_CASE("RC1 short URIs") {
  Dataset d = d1_dataset();
  SUBCASE("threshold 95 sees nothing in the fixture") {
    CHECK(value_of("RC1", d, d1_context()) == 0.0);
  }
  SUBCASE("threshold 10 flags every statement") {
    EvaluationContext tight = d1_context();
    tight.uri_length_threshold = 10;
    CHECK(value_of("RC1", d, tight) == 1.0);
  }
  SUBCASE("a single long subject forces ratio one") {
    std::string iri(120, 'a');
    Dataset one = from_lines("<http://" + iri + "/x> <http://ex.org/p> \"v\" .\n");
    CHECK(value_of("RC1", one, d1_context()) == 1.0);
  }
}

TEST_CASE("SV3 malformed typed literals") {
  EvaluationContext ctx = d1_context();
  CHECK(value_of("SV3", d1_dataset(), ctx) == 1.0);  // "abc"^^xsd:int
  Dataset good = from_lines(
      "<http://ex.org/a> <http://ex.org/p> "
      "\"12\"^^<http://www.w3.org/2001/XMLSchema#int> .\n");
  CHECK(value_of("SV3", good, ctx) == 0.0);
  Dataset plain = from_lines("<http://ex.org/a> <http://ex.org/p> \"abc\" .\n");
  CHECK(value_of("SV3", plain, ctx) == 0.0);
  SUBCASE("unknown datatypes are not counted") {
    Dataset unknown = from_lines(
        "<http://ex.org/a> <http://ex.org/p> "
        "\"zzz\"^^<http://ex.org/madeUpType> .\n");
    CHECK(value_of("SV3", unknown, ctx) == 0.0);
  }
  SUBCASE("per-datatype failures sum") {
    Dataset multi = from_lines(
        "<http://ex.org/a> <http://ex.org/p> "
        "\"x\"^^<http://www.w3.org/2001/XMLSchema#int> .\n"
        "<http://ex.org/a> <http://ex.org/p> "
        "\"y\"^^<http://www.w3.org/2001/XMLSchema#boolean> .\n"
        "<http://ex.org/a> <http://ex.org/p> "
        "\"2021-99-99\"^^<http://www.w3.org/2001/XMLSchema#date> .\n"
        "<http://ex.org/a> <http://ex.org/p> "
        "\"7\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n");
    CHECK(value_of("SV3", multi, ctx) == 3.0);
  }
}

TEST_CASE("CN2 extensional conciseness") {
  EvaluationContext ctx = d1_context();
  SUBCASE("all literal objects") {
    Dataset d = from_lines(
        "<http://ex.org/a> <http://ex.org/p> \"1\" .\n"
        "<http://ex.org/b> <http://ex.org/p> \"2\" .\n");
    CHECK(value_of("CN2", d, ctx) == 1.0);
  }
  SUBCASE("all URI to URI") {
    Dataset d = from_lines(
        "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .\n"
        "<http://ex.org/b> <http://ex.org/p> <http://ex.org/c> .\n");
    CHECK(value_of("CN2", d, ctx) == 0.0);
  }
}

TEST_CASE("registry") {
  CHECK(builtin_metrics().size() == 7);
  const MetricDefinition* l1 = find_metric("L1");
  REQUIRE(l1 != nullptr);
  CHECK(l1->dimension == "licensing");
  CHECK(l1->value_kind == ValueKind::Indicator);
  CHECK(find_metric("XX") == nullptr);

  const char* expected_order[] = {"L1", "L2", "I2", "U1", "RC1", "SV3", "CN2"};
  for (std::size_t i = 0; i < 7; ++i)
    CHECK(builtin_metrics()[i].id == expected_order[i]);
}

TEST_CASE("value ranges hold on random datasets") {
  EvaluationContext ctx = rdfqa_tests::random_dataset_context();
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    Dataset d = rdfqa_tests::random_dataset(seed, 300);
    CAPTURE(seed);
    for (const char* id : {"L1", "L2"}) {
      double v = value_of(id, d, ctx);
      CHECK((v == 0.0 || v == 1.0));
    }
    for (const char* id : {"I2", "RC1", "CN2"}) {
      double v = value_of(id, d, ctx);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
    double sv3 = value_of("SV3", d, ctx);
    CHECK(sv3 >= 0.0);
    CHECK(sv3 == static_cast<double>(static_cast<std::uint64_t>(sv3)));
  }
}
