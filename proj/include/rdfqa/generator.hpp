#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdfqa/context.hpp"
#include "rdfqa/ntriples.hpp"

namespace rdfqa {

// splitmix64; fully specified so generated fixtures are reproducible across
// platforms and toolchains.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Modulo-reduced; the slight bias is irrelevant here, determinism is not.
  std::uint64_t below(std::uint64_t bound) {
    return bound == 0 ? 0 : next() % bound;
  }

 private:
  std::uint64_t state_;
};

// Synthetic workload shape. Same (seed, profile) always produces
// byte-identical output. Fractions are of the total triple count;
// malformed literals are a sub-class of the literal triples.
struct GeneratorProfile {
  std::uint64_t seed = 42;
  std::uint64_t n_triples = 0;
  double fraction_external_links = 0.0;
  double fraction_literals = 0.0;
  double fraction_malformed_typed_literals = 0.0;
  bool include_license = false;
  double long_uri_fraction = 0.0;
};

// Exact per-class counts and the metric values they force. Construction
// makes these closed-loop: assessing the generated data with
// generator_context() reproduces them exactly.
struct GroundTruth {
  std::uint64_t n = 0;
  std::uint64_t external_link_triples = 0;
  std::uint64_t literal_triples = 0;
  std::uint64_t malformed_typed_literals = 0;
  std::uint64_t long_uri_triples = 0;
  std::uint64_t license_triples = 0;

  double expected_l1() const { return license_triples > 0 ? 1.0 : 0.0; }
  double expected_i2() const {
    return n == 0 ? 0.0
                  : static_cast<double>(external_link_triples) /
                        static_cast<double>(n);
  }
  double expected_rc1() const {
    return n == 0 ? 0.0
                  : static_cast<double>(long_uri_triples) /
                        static_cast<double>(n);
  }
  double expected_sv3() const {
    return static_cast<double>(malformed_typed_literals);
  }
  double expected_cn2() const {
    // Every non-literal object in the stream is an IRI, so the URI-to-URI
    // count is n minus the literal triples.
    return n == 0 ? 0.0
                  : static_cast<double>(literal_triples) /
                        static_cast<double>(n);
  }
};

// Empty optional when the profile is valid; otherwise the reason.
std::optional<std::string> validate_profile(const GeneratorProfile& profile);

struct GeneratorOutput {
  Dataset dataset;
  GroundTruth truth;
};

GeneratorOutput generate_dataset(const GeneratorProfile& profile);

// Streams the N-Triples file plus "<path>.manifest.json" carrying the
// profile, class counts, assessment context, and expected metric values.
// Returns an error message on I/O or profile problems.
std::optional<std::string> write_generated_file(const GeneratorProfile& profile,
                                                const std::string& path);

std::string manifest_json(const GeneratorProfile& profile,
                          const GroundTruth& truth);

struct Manifest {
  GeneratorProfile profile;
  GroundTruth truth;
};

std::optional<Manifest> parse_manifest_json(const std::string& text);

// The context the ground truth is valid under: internal prefix
// http://example.org/, threshold 95, default vocabulary.
EvaluationContext generator_context();

}  // namespace rdfqa
