#include "rdfqa/context.hpp"

namespace rdfqa {

void EvaluationContext::compile_patterns() {
  compiled_patterns_.clear();
  compiled_patterns_.reserve(license_phrase_patterns.size());
  for (const std::string& p : license_phrase_patterns)
    compiled_patterns_.emplace_back(p, std::regex::ECMAScript | std::regex::icase);
}

bool EvaluationContext::matches_license_phrase(std::string_view lexical) const {
  for (const std::regex& re : compiled_patterns_)
    if (std::regex_search(lexical.begin(), lexical.end(), re)) return true;
  return false;
}

bool EvaluationContext::is_internal_iri(std::string_view iri) const {
  for (const std::string& prefix : internal_prefixes)
    if (iri.starts_with(prefix)) return true;
  return false;
}

EvaluationContext EvaluationContext::defaults() {
  EvaluationContext ctx;
  ctx.license_predicates = {
      "http://purl.org/dc/terms/license",
      "http://purl.org/dc/terms/rights",
      "http://creativecommons.org/ns#license",
      "http://www.w3.org/1999/xhtml/vocab#license",
      "http://schema.org/license",
  };
  ctx.license_indication_predicates = {
      "http://purl.org/dc/terms/rights",
      "http://purl.org/dc/elements/1.1/rights",
      "http://purl.org/dc/terms/licenseDocument",
  };
  ctx.license_phrase_patterns = {
      "licen[sc]e",
      "copyright",
      "all rights reserved",
  };
  ctx.label_predicates = {
      "http://www.w3.org/2000/01/rdf-schema#label",
      "http://www.w3.org/2004/02/skos/core#prefLabel",
      "http://www.w3.org/2004/02/skos/core#altLabel",
      "http://xmlns.com/foaf/0.1/name",
      "http://purl.org/dc/terms/title",
  };
  ctx.type_predicates = {
      "http://www.w3.org/1999/02/22-rdf-syntax-ns#type",
  };
  ctx.uri_length_threshold = 95;
  ctx.datatype_validators = xsd::default_validators();
  ctx.compile_patterns();
  return ctx;
}

}  // namespace rdfqa
