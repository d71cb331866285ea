// Shared helpers for the unit and acceptance suites: the five-triple fixture
// used across modules, its evaluation context, and a seeded random dataset
// generator for property-style checks.
#pragma once

#include <string>
#include <vector>

#include "rdfqa/context.hpp"
#include "rdfqa/generator.hpp"
#include "rdfqa/ntriples.hpp"
#include "rdfqa/term.hpp"

namespace rdfqa_tests {

inline const char* kD1Text =
    "<http://ex.org/a> <http://purl.org/dc/terms/license> <http://ex.org/lic> .\n"
    "<http://ex.org/a> <http://www.w3.org/2000/01/rdf-schema#label> \"Alpha\" .\n"
    "<http://ex.org/a> <http://ex.org/p> <http://other.org/b> .\n"
    "<http://other.org/b> <http://ex.org/p> <http://ex.org/a> .\n"
    "<http://ex.org/a> <http://ex.org/age> "
    "\"abc\"^^<http://www.w3.org/2001/XMLSchema#int> .\n";

inline rdfqa::Dataset d1_dataset() {
  rdfqa::DatasetResult r = rdfqa::parse_dataset_string(
      kD1Text, rdfqa::ErrorPolicy::Strict, "fixture:d1");
  return r.dataset;
}

inline rdfqa::EvaluationContext d1_context() {
  rdfqa::EvaluationContext ctx = rdfqa::EvaluationContext::defaults();
  ctx.internal_prefixes = {"http://ex.org/"};
  return ctx;
}

// Random datasets covering the behaviors the metrics react to: internal and
// external IRIs, blanks, plain/lang/typed literals (valid, invalid, unknown
// datatype), license and label predicates, over-long IRIs, duplicates, and
// the occasional empty dataset.
inline rdfqa::Dataset random_dataset(std::uint64_t seed,
                                     std::size_t max_triples) {
  using rdfqa::Term;
  rdfqa::SplitMix64 rng(seed);
  rdfqa::Dataset d;
  d.origin = "random:" + std::to_string(seed);
  std::size_t n = rng.below(max_triples + 1);

  auto internal_iri = [&](std::uint64_t i) {
    return Term::iri("http://ex.org/r" + std::to_string(i % 23));
  };
  auto external_iri = [&](std::uint64_t i) {
    return Term::iri("http://other.org/e" + std::to_string(i % 17));
  };
  auto long_iri = [&] {
    std::string iri = "http://ex.org/very-long/";
    iri.append(96, 'y');
    return Term::iri(iri);
  };

  const std::vector<std::string> predicates = {
      "http://ex.org/p",
      "http://ex.org/q",
      "http://purl.org/dc/terms/license",
      "http://purl.org/dc/terms/rights",
      "http://www.w3.org/2000/01/rdf-schema#label",
      "http://www.w3.org/2004/02/skos/core#prefLabel",
      "http://www.w3.org/1999/02/22-rdf-syntax-ns#type",
      "http://other.org/p",
  };
  const std::string xsd = std::string(rdfqa::vocab::xsd_ns);

  d.triples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && rng.below(10) == 0) {  // duplicate statements stay in the bag
      d.triples.push_back(d.triples[rng.below(d.triples.size())]);
      continue;
    }
    rdfqa::Triple t;
    switch (rng.below(8)) {
      case 0: t.subject = external_iri(rng.next()); break;
      case 1: t.subject = Term::blank("b" + std::to_string(rng.below(7))); break;
      case 2: t.subject = long_iri(); break;
      default: t.subject = internal_iri(rng.next()); break;
    }
    t.predicate = Term::iri(predicates[rng.below(predicates.size())]);
    switch (rng.below(12)) {
      case 0: t.object = Term::blank("b" + std::to_string(rng.below(7))); break;
      case 1: t.object = external_iri(rng.next()); break;
      case 2: t.object = long_iri(); break;
      case 3: t.object = Term::literal("plain " + std::to_string(rng.below(5))); break;
      case 4: t.object = Term::lang_literal("hallo", "de"); break;
      case 5:
        t.object = Term::literal(std::to_string(rng.below(100)), xsd + "integer");
        break;
      case 6: t.object = Term::literal("oops", xsd + "int"); break;
      case 7:
        t.object = Term::literal("2020-02-0" + std::to_string(1 + rng.below(9)),
                                 xsd + "date");
        break;
      case 8:
        t.object = Term::literal("x", "http://ex.org/unknownType");
        break;
      case 9:
        t.object = Term::literal("All Rights Reserved for " +
                                 std::to_string(rng.below(3)));
        break;
      default: t.object = internal_iri(rng.next()); break;
    }
    d.triples.push_back(std::move(t));
  }
  d.parse_report.lines_total = d.triples.size();
  d.parse_report.triples_ok = d.triples.size();
  return d;
}

inline rdfqa::EvaluationContext random_dataset_context() {
  rdfqa::EvaluationContext ctx = rdfqa::EvaluationContext::defaults();
  ctx.internal_prefixes = {"http://ex.org/"};
  return ctx;
}

}  // namespace rdfqa_tests
