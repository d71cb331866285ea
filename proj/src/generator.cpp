#include "rdfqa/generator.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

namespace rdfqa {

namespace {

constexpr std::string_view kInternalNs = "http://example.org/";
constexpr std::string_view kExternalNs = "http://external-data.net/";

enum class TripleClass : std::uint8_t {
  Filler,
  ExternalLink,
  Literal,
  LongUri,
  License,
};

struct ClassCounts {
  std::uint64_t external_links = 0;
  std::uint64_t literals = 0;
  std::uint64_t malformed = 0;
  std::uint64_t long_uris = 0;
  std::uint64_t license = 0;
  std::uint64_t filler = 0;
};

std::uint64_t scaled(double fraction, std::uint64_t n) {
  return static_cast<std::uint64_t>(std::llround(fraction * static_cast<double>(n)));
}

std::optional<ClassCounts> compute_counts(const GeneratorProfile& p,
                                          std::string* error) {
  auto fail = [&](std::string msg) {
    if (error) *error = std::move(msg);
    return std::nullopt;
  };
  for (double f :
       {p.fraction_external_links, p.fraction_literals,
        p.fraction_malformed_typed_literals, p.long_uri_fraction})
    if (f < 0.0 || f > 1.0) return fail("fractions must be within [0, 1]");

  ClassCounts c;
  c.external_links = scaled(p.fraction_external_links, p.n_triples);
  c.literals = scaled(p.fraction_literals, p.n_triples);
  c.malformed = scaled(p.fraction_malformed_typed_literals, p.n_triples);
  c.long_uris = scaled(p.long_uri_fraction, p.n_triples);
  c.license = p.include_license ? 1 : 0;
  if (c.malformed > c.literals)
    return fail(
        "fraction_malformed_typed_literals cannot exceed fraction_literals");
  std::uint64_t reserved =
      c.external_links + c.literals + c.long_uris + c.license;
  if (reserved > p.n_triples)
    return fail("profile fractions plus the license triple exceed n_triples");
  c.filler = p.n_triples - reserved;
  return c;
}

Term internal_resource(std::uint64_t i) {
  return Term::iri(std::string(kInternalNs) + "resource/r" + std::to_string(i));
}

Term external_resource(std::uint64_t i) {
  return Term::iri(std::string(kExternalNs) + "resource/e" + std::to_string(i));
}

Term long_internal_resource(std::uint64_t i) {
  // 33 chars of prefix + 90 padding chars pushes past any threshold <= 120.
  std::string iri = std::string(kInternalNs) + "resource/long/";
  iri.append(90, 'x');
  iri += std::to_string(i);
  return Term::iri(std::move(iri));
}

const std::string kLinkPred = std::string(kInternalNs) + "vocab/linksTo";
const std::string kValuePred = std::string(kInternalNs) + "vocab/value";
const std::string kRelatedPred = std::string(kInternalNs) + "vocab/related";
const std::string kLicensePred = "http://purl.org/dc/terms/license";

Term well_formed_literal(std::uint64_t i) {
  auto xsd = [](const char* local) {
    return std::string(vocab::xsd_ns) + local;
  };
  switch (i % 8) {
    case 0: return Term::literal("value " + std::to_string(i));
    case 1: return Term::lang_literal("name " + std::to_string(i), "en");
    case 2: return Term::literal(std::to_string(i), xsd("integer"));
    case 3: return Term::literal(std::to_string(i) + ".25", xsd("decimal"));
    case 4: return Term::literal(i % 2 ? "true" : "false", xsd("boolean"));
    case 5:
      return Term::literal("2021-03-04T05:06:0" + std::to_string(i % 10) + "Z",
                           xsd("dateTime"));
    case 6: return Term::literal("2021-03-04", xsd("date"));
    default: return Term::literal(std::to_string(i % 97) + ".5E2", xsd("double"));
  }
}

Term malformed_literal(std::uint64_t i) {
  auto xsd = [](const char* local) {
    return std::string(vocab::xsd_ns) + local;
  };
  switch (i % 6) {
    case 0: return Term::literal("12.5", xsd("integer"));
    case 1: return Term::literal("not-a-number-" + std::to_string(i), xsd("int"));
    case 2: return Term::literal("maybe", xsd("boolean"));
    case 3: return Term::literal("2021-13-45", xsd("date"));
    case 4: return Term::literal("yesterday", xsd("dateTime"));
    default: return Term::literal("1.2.3", xsd("decimal"));
  }
}

class TripleStream {
 public:
  TripleStream(const GeneratorProfile& profile, const ClassCounts& counts)
      : rng_(profile.seed), counts_(counts), n_(profile.n_triples) {
    tags_.reserve(n_);
    append_tags(TripleClass::ExternalLink, counts.external_links);
    append_tags(TripleClass::Literal, counts.literals);
    append_tags(TripleClass::LongUri, counts.long_uris);
    append_tags(TripleClass::License, counts.license);
    append_tags(TripleClass::Filler, counts.filler);
    // Fisher-Yates over the class tags interleaves the classes evenly.
    for (std::uint64_t i = n_; i > 1; --i) {
      std::uint64_t j = rng_.below(i);
      std::swap(tags_[i - 1], tags_[j]);
    }
  }

  bool next(Triple& out) {
    if (index_ >= n_) return false;
    out = make(tags_[index_]);
    ++index_;
    return true;
  }

 private:
  SplitMix64 rng_;
  ClassCounts counts_;
  std::uint64_t n_;
  std::vector<TripleClass> tags_;
  std::uint64_t index_ = 0;
  std::uint64_t ext_i_ = 0, lit_i_ = 0, long_i_ = 0, filler_i_ = 0;

  void append_tags(TripleClass c, std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i) tags_.push_back(c);
  }

  Triple make(TripleClass c) {
    switch (c) {
      case TripleClass::ExternalLink: {
        std::uint64_t i = ext_i_++;
        // Alternate direction so both inbound and outbound links appear.
        if (i % 2 == 0)
          return {internal_resource(i), Term::iri(kLinkPred),
                  external_resource(i)};
        return {external_resource(i), Term::iri(kLinkPred),
                internal_resource(i)};
      }
      case TripleClass::Literal: {
        std::uint64_t i = lit_i_++;
        Term object = i < counts_.malformed ? malformed_literal(i)
                                            : well_formed_literal(i);
        return {internal_resource(i), Term::iri(kValuePred), std::move(object)};
      }
      case TripleClass::LongUri: {
        std::uint64_t i = long_i_++;
        return {long_internal_resource(i), Term::iri(kRelatedPred),
                internal_resource(i)};
      }
      case TripleClass::License:
        return {Term::iri(std::string(kInternalNs) + "dataset"),
                Term::iri(kLicensePred),
                Term::iri(std::string(kInternalNs) + "ns/license/terms")};
      case TripleClass::Filler: {
        std::uint64_t i = filler_i_++;
        return {internal_resource(i), Term::iri(kRelatedPred),
                internal_resource(i + 1)};
      }
    }
    return {};
  }
};

GroundTruth truth_from(const ClassCounts& c, std::uint64_t n) {
  GroundTruth t;
  t.n = n;
  t.external_link_triples = c.external_links;
  t.literal_triples = c.literals;
  t.malformed_typed_literals = c.malformed;
  t.long_uri_triples = c.long_uris;
  t.license_triples = c.license;
  return t;
}

}  // namespace

std::optional<std::string> validate_profile(const GeneratorProfile& profile) {
  std::string error;
  if (!compute_counts(profile, &error)) return error;
  return std::nullopt;
}

GeneratorOutput generate_dataset(const GeneratorProfile& profile) {
  std::string error;
  auto counts = compute_counts(profile, &error);
  if (!counts) throw std::invalid_argument(error);

  GeneratorOutput out;
  out.truth = truth_from(*counts, profile.n_triples);
  out.dataset.origin = "generated:seed=" + std::to_string(profile.seed) +
                       ",n=" + std::to_string(profile.n_triples);
  out.dataset.triples.reserve(profile.n_triples);
  TripleStream stream(profile, *counts);
  Triple t;
  while (stream.next(t)) out.dataset.triples.push_back(std::move(t));
  out.dataset.parse_report.lines_total = profile.n_triples;
  out.dataset.parse_report.triples_ok = profile.n_triples;
  return out;
}

std::optional<std::string> write_generated_file(const GeneratorProfile& profile,
                                                const std::string& path) {
  std::string error;
  auto counts = compute_counts(profile, &error);
  if (!counts) return error;

  std::ofstream out(path, std::ios::binary);
  if (!out.is_open()) return "cannot open " + path + " for writing";
  TripleStream stream(profile, *counts);
  Triple t;
  while (stream.next(t)) out << serialize_triple(t) << '\n';
  out.flush();
  if (!out) return "write failure on " + path;

  GroundTruth truth = truth_from(*counts, profile.n_triples);
  std::ofstream mout(path + ".manifest.json", std::ios::binary);
  if (!mout.is_open()) return "cannot open " + path + ".manifest.json";
  mout << manifest_json(profile, truth) << '\n';
  if (!mout) return "write failure on " + path + ".manifest.json";
  return std::nullopt;
}

std::string manifest_json(const GeneratorProfile& profile,
                          const GroundTruth& truth) {
  nlohmann::json j;
  j["profile"] = {
      {"seed", profile.seed},
      {"n_triples", profile.n_triples},
      {"fraction_external_links", profile.fraction_external_links},
      {"fraction_literals", profile.fraction_literals},
      {"fraction_malformed_typed_literals",
       profile.fraction_malformed_typed_literals},
      {"include_license", profile.include_license},
      {"long_uri_fraction", profile.long_uri_fraction},
  };
  j["counts"] = {
      {"triples", truth.n},
      {"external_link_triples", truth.external_link_triples},
      {"literal_triples", truth.literal_triples},
      {"malformed_typed_literals", truth.malformed_typed_literals},
      {"long_uri_triples", truth.long_uri_triples},
      {"license_triples", truth.license_triples},
  };
  j["context"] = {
      {"internal_prefixes", {std::string(kInternalNs)}},
      {"uri_length_threshold", 95},
  };
  j["expected"] = {
      {"L1", truth.expected_l1()},   {"I2", truth.expected_i2()},
      {"RC1", truth.expected_rc1()}, {"SV3", truth.expected_sv3()},
      {"CN2", truth.expected_cn2()},
  };
  return j.dump(2);
}

std::optional<Manifest> parse_manifest_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  try {
    Manifest m;
    const auto& p = j.at("profile");
    m.profile.seed = p.at("seed").get<std::uint64_t>();
    m.profile.n_triples = p.at("n_triples").get<std::uint64_t>();
    m.profile.fraction_external_links =
        p.at("fraction_external_links").get<double>();
    m.profile.fraction_literals = p.at("fraction_literals").get<double>();
    m.profile.fraction_malformed_typed_literals =
        p.at("fraction_malformed_typed_literals").get<double>();
    m.profile.include_license = p.at("include_license").get<bool>();
    m.profile.long_uri_fraction = p.at("long_uri_fraction").get<double>();
    const auto& c = j.at("counts");
    m.truth.n = c.at("triples").get<std::uint64_t>();
    m.truth.external_link_triples =
        c.at("external_link_triples").get<std::uint64_t>();
    m.truth.literal_triples = c.at("literal_triples").get<std::uint64_t>();
    m.truth.malformed_typed_literals =
        c.at("malformed_typed_literals").get<std::uint64_t>();
    m.truth.long_uri_triples = c.at("long_uri_triples").get<std::uint64_t>();
    m.truth.license_triples = c.at("license_triples").get<std::uint64_t>();
    return m;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

EvaluationContext generator_context() {
  EvaluationContext ctx = EvaluationContext::defaults();
  ctx.internal_prefixes = {std::string(kInternalNs)};
  return ctx;
}

}  // namespace rdfqa
