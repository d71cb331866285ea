#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdfqa/term.hpp"

namespace rdfqa {

enum class ParseErrorKind {
  BadIri,
  BadBlankNode,
  BadLiteral,
  BadEscape,
  BadLang,
  MissingTerminal,
  BadStructure,
  Io,
};

std::string_view to_string(ParseErrorKind kind);

struct ParseError {
  ParseErrorKind kind = ParseErrorKind::BadStructure;
  std::size_t line_no = 0;      // 1-based
  std::size_t byte_offset = 0;  // 0-based offset within the line
  std::string message;
};

// Per-source accounting. lines_blank counts blank and comment-only lines, so
// triples_ok + lines_skipped + lines_blank == lines_total always holds.
struct ParseReport {
  std::size_t lines_total = 0;
  std::size_t triples_ok = 0;
  std::size_t lines_skipped = 0;
  std::size_t lines_blank = 0;
  std::vector<ParseError> errors;  // capped at kMaxStoredErrors

  static constexpr std::size_t kMaxStoredErrors = 1000;
};

// Parsed triples in input order. Bag semantics: duplicate statements are
// retained; deduplication happens only under explicit distinct projections.
struct Dataset {
  std::vector<Triple> triples;
  std::string origin;
  ParseReport parse_report;

  std::size_t size() const { return triples.size(); }
  bool empty() const { return triples.empty(); }
};

enum class ErrorPolicy { Strict, SkipAndCount };

// Outcome of parsing one physical line: a triple, a blank/comment line, or an
// error. Never throws on arbitrary bytes.
struct LineResult {
  enum class Kind { TripleLine, NoTriple, Error };
  Kind kind = Kind::NoTriple;
  Triple triple;
  ParseError error;

  bool is_triple() const { return kind == Kind::TripleLine; }
  bool is_error() const { return kind == Kind::Error; }
};

LineResult parse_ntriples_line(std::string_view line, std::size_t line_no);

struct DatasetResult {
  Dataset dataset;
  std::optional<ParseError> error;  // set iff strict-mode abort or I/O failure

  bool ok() const { return !error.has_value(); }
};

DatasetResult parse_dataset_string(std::string_view text, ErrorPolicy policy,
                                   std::string origin = "<string>");
DatasetResult parse_dataset_file(const std::string& path, ErrorPolicy policy);
DatasetResult parse_dataset_stream(std::istream& in, ErrorPolicy policy,
                                   std::string origin);

// Canonical N-Triples rendering: minimal escapes, xsd:string datatype left
// implicit, terminal " ." without newline. parse(serialize(t)) == t.
std::string serialize_term(const Term& term);
std::string serialize_triple(const Triple& triple);

void write_ntriples(const Dataset& dataset, std::ostream& out);

}  // namespace rdfqa
