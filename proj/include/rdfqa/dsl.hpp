#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rdfqa/ast.hpp"
#include "rdfqa/context.hpp"

namespace rdfqa::dsl {

struct SourceSpan {
  std::size_t start = 0;  // byte offsets, start <= end
  std::size_t end = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string message;
  SourceSpan span;
};

std::string format_diagnostic(const Diagnostic& d);

struct ParseOutcome {
  MetricPtr expr;  // null when parsing failed
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return expr != nullptr; }
};

// Parses one metric expression. Concrete syntax: count(...), distinct(...),
// positive(...), position tokens ?s ?p ?o, rule names as in the algebra,
// AND/OR (aliases for the set operators, which are also accepted as such)
// between transformations, && and || between filters, and + - * / between
// actions. Rule application binds tighter than AND, AND tighter than OR;
// * and / bind tighter than + and -; everything is left-associative.
ParseOutcome parse_metric_text(std::string_view src);

// Plan-legality plus context requirements, as diagnostics. Empty result
// means the metric can be planned.
std::vector<Diagnostic> validate(const MetricExpr& m,
                                 const EvaluationContext& ctx,
                                 SourceSpan span = {});

// Canonical text with minimal parentheses; parse(pretty_print(m)) == m.
std::string pretty_print(const MetricExpr& m);

// A named stanza from a metric definition file:
//   metric <name> "<description>" := <expr>
struct NamedMetric {
  std::string name;
  std::string description;
  MetricPtr expr;
  SourceSpan span;
};

struct FileOutcome {
  std::vector<NamedMetric> metrics;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

FileOutcome parse_metric_file_text(std::string_view src);

}  // namespace rdfqa::dsl
