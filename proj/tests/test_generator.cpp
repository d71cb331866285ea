#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rdfqa/engine.hpp"
#include "rdfqa/generator.hpp"
#include "test_util.hpp"

using namespace rdfqa;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path temp_dir() {
  fs::path dir = fs::temp_directory_path() / "rdfqa_gen_tests";
  fs::create_directories(dir);
  return dir;
}

double assess_one(const char* id, const Dataset& d) {
  const MetricDefinition* def = find_metric(id);
  AssessmentOutcome out = assess({{def->id, def->expr, def}}, d,
                                 generator_context(), AssessOptions{2});
  REQUIRE(out.ok());
  return out.results[0].value;
}

}  // namespace

TEST_CASE("exact class counts") {
  GeneratorProfile p;
  p.seed = 42;
  p.n_triples = 1000;
  p.fraction_external_links = 0.2;
  GeneratorOutput out = generate_dataset(p);
  CHECK(out.dataset.size() == 1000);
  CHECK(out.truth.external_link_triples == 200);
  CHECK(out.truth.expected_i2() == 0.2);

  std::size_t cross = 0;
  EvaluationContext ctx = generator_context();
  for (const Triple& t : out.dataset.triples) {
    bool s_int = ctx.is_internal_iri(t.subject.value());
    bool o_int = t.object.is_iri() && ctx.is_internal_iri(t.object.value());
    if (t.object.is_iri() && (s_int != o_int)) ++cross;
  }
  CHECK(cross == 200);
}

TEST_CASE("license switch drives L1") {
  GeneratorProfile p;
  p.n_triples = 50;
  p.include_license = false;
  CHECK(generate_dataset(p).truth.expected_l1() == 0.0);
  p.include_license = true;
  GeneratorOutput with = generate_dataset(p);
  CHECK(with.truth.expected_l1() == 1.0);
  CHECK(assess_one("L1", with.dataset) == 1.0);
}

TEST_CASE("same seed twice gives byte-identical output") {
  GeneratorProfile p;
  p.seed = 7;
  p.n_triples = 500;
  p.fraction_external_links = 0.3;
  p.fraction_literals = 0.25;
  p.fraction_malformed_typed_literals = 0.05;
  p.long_uri_fraction = 0.1;
  p.include_license = true;

  fs::path a = temp_dir() / "a.nt";
  fs::path b = temp_dir() / "b.nt";
  REQUIRE_FALSE(write_generated_file(p, a.string()).has_value());
  REQUIRE_FALSE(write_generated_file(p, b.string()).has_value());
  CHECK(read_file(a) == read_file(b));
  CHECK(read_file(a.string() + ".manifest.json") ==
        read_file(b.string() + ".manifest.json"));

  GeneratorProfile q = p;
  q.seed = 8;
  fs::path c = temp_dir() / "c.nt";
  REQUIRE_FALSE(write_generated_file(q, c.string()).has_value());
  CHECK(read_file(a) != read_file(c));
}

TEST_CASE("profile validation") {
  GeneratorProfile p;
  p.n_triples = 100;
  p.fraction_external_links = 1.2;
  CHECK(validate_profile(p).has_value());

  p.fraction_external_links = 0.6;
  p.fraction_literals = 0.5;
  CHECK(validate_profile(p).has_value());  // 0.6 + 0.5 > 1

  p.fraction_literals = 0.2;
  p.fraction_malformed_typed_literals = 0.3;  // malformed > literals
  CHECK(validate_profile(p).has_value());

  p.fraction_malformed_typed_literals = 0.1;
  CHECK_FALSE(validate_profile(p).has_value());

  GeneratorProfile license_only;
  license_only.n_triples = 0;
  license_only.include_license = true;
  CHECK(validate_profile(license_only).has_value());
}

TEST_CASE("closed loop on a mixed profile") {
  GeneratorProfile p;
  p.seed = 99;
  p.n_triples = 2000;
  p.fraction_external_links = 0.15;
  p.fraction_literals = 0.3;
  p.fraction_malformed_typed_literals = 0.06;
  p.long_uri_fraction = 0.02;
  p.include_license = true;
  GeneratorOutput out = generate_dataset(p);

  CHECK(assess_one("I2", out.dataset) == out.truth.expected_i2());
  CHECK(assess_one("L1", out.dataset) == out.truth.expected_l1());
  CHECK(assess_one("RC1", out.dataset) == out.truth.expected_rc1());
  CHECK(assess_one("SV3", out.dataset) == out.truth.expected_sv3());
  CHECK(assess_one("CN2", out.dataset) == out.truth.expected_cn2());
}

TEST_CASE("generated files reparse losslessly") {
  GeneratorProfile p;
  p.seed = 3;
  p.n_triples = 300;
  p.fraction_literals = 0.4;
  p.fraction_malformed_typed_literals = 0.1;
  fs::path path = temp_dir() / "roundtrip.nt";
  REQUIRE_FALSE(write_generated_file(p, path.string()).has_value());
  DatasetResult parsed =
      parse_dataset_file(path.string(), ErrorPolicy::Strict);
  REQUIRE(parsed.ok());
  CHECK(parsed.dataset.size() == 300);

  GeneratorOutput direct = generate_dataset(p);
  REQUIRE(direct.dataset.size() == parsed.dataset.size());
  for (std::size_t i = 0; i < direct.dataset.size(); ++i)
    CHECK(parsed.dataset.triples[i] == direct.dataset.triples[i]);
}

TEST_CASE("manifest json round trip") {
  GeneratorProfile p;
  p.seed = 11;
  p.n_triples = 777;
  p.fraction_external_links = 1.0 / 3.0;
  p.include_license = true;
  GeneratorOutput out = generate_dataset(p);
  std::string text = manifest_json(p, out.truth);
  std::optional<Manifest> m = parse_manifest_json(text);
  REQUIRE(m.has_value());
  CHECK(m->profile.seed == 11);
  CHECK(m->profile.n_triples == 777);
  CHECK(m->profile.fraction_external_links == p.fraction_external_links);
  CHECK(m->truth.external_link_triples == out.truth.external_link_triples);
  CHECK(m->truth.expected_i2() == out.truth.expected_i2());
  CHECK_FALSE(parse_manifest_json("not json").has_value());
}

TEST_CASE("empty dataset profile") {
  GeneratorProfile p;
  p.n_triples = 0;
  GeneratorOutput out = generate_dataset(p);
  CHECK(out.dataset.empty());
  CHECK(out.truth.expected_i2() == 0.0);
  CHECK(out.truth.expected_cn2() == 0.0);
}
