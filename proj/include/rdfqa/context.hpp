#pragma once

#include <memory>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rdfqa/xsd.hpp"

namespace rdfqa {

// All assessment parameters the metric rules depend on. Immutable once built;
// safe to share across worker threads.
class EvaluationContext {
 public:
  std::vector<std::string> internal_prefixes;
  std::set<std::string, std::less<>> license_predicates;
  std::set<std::string, std::less<>> license_indication_predicates;
  std::vector<std::string> license_phrase_patterns;
  std::set<std::string, std::less<>> label_predicates;
  std::set<std::string, std::less<>> type_predicates;
  std::size_t uri_length_threshold = 95;
  xsd::ValidatorMap datatype_validators;

  // Compiles license_phrase_patterns; must be called after any mutation and
  // before evaluation. Throws std::regex_error on a bad pattern.
  void compile_patterns();

  bool matches_license_phrase(std::string_view lexical) const;
  bool is_internal_iri(std::string_view iri) const;

  // Baseline configuration: common linked-data vocabulary for licenses,
  // labels and types, threshold 95, full XSD validator set. Internal
  // prefixes are intentionally left empty; metrics that need them fail
  // configuration validation until the caller provides some.
  static EvaluationContext defaults();

 private:
  std::vector<std::regex> compiled_patterns_;
};

}  // namespace rdfqa
