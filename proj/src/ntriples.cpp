#include "rdfqa/ntriples.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace rdfqa {

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::BadIri: return "bad-iri";
    case ParseErrorKind::BadBlankNode: return "bad-blank-node";
    case ParseErrorKind::BadLiteral: return "bad-literal";
    case ParseErrorKind::BadEscape: return "bad-escape";
    case ParseErrorKind::BadLang: return "bad-lang-tag";
    case ParseErrorKind::MissingTerminal: return "missing-terminal-dot";
    case ParseErrorKind::BadStructure: return "bad-structure";
    case ParseErrorKind::Io: return "io-error";
  }
  return "unknown";
}

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool is_hex(char c) {
  return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}
int hex_value(char c) {
  if (is_digit(c)) return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return c - 'A' + 10;
}

// Characters excluded from IRIREF by the N-Triples grammar.
bool iri_char_forbidden(unsigned char c) {
  if (c <= 0x20) return true;
  switch (c) {
    case '<':
    case '>':
    case '"':
    case '{':
    case '}':
    case '|':
    case '^':
    case '`':
    case '\\':
      return true;
    default:
      return false;
  }
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Scheme must precede the first ':' for the IRI to count as absolute.
bool looks_absolute(std::string_view iri) {
  std::size_t colon = iri.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  if (!is_alpha(iri[0])) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    char c = iri[i];
    if (!is_alpha(c) && !is_digit(c) && c != '+' && c != '-' && c != '.')
      return false;
  }
  return true;
}

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no)
      : line_(line), line_no_(line_no) {}

  LineResult run() {
    skip_ws();
    if (at_end() || peek() == '#') return no_triple();

    Triple t;
    if (!parse_subject(t.subject)) return error_result();
    skip_ws();
    if (!parse_predicate(t.predicate)) return error_result();
    skip_ws();
    if (!parse_object(t.object)) return error_result();
    skip_ws();
    if (at_end() || peek() != '.')
      return fail(ParseErrorKind::MissingTerminal, "expected '.' after object");
    ++pos_;
    skip_ws();
    if (!at_end() && peek() != '#')
      return fail(ParseErrorKind::BadStructure,
                  "unexpected content after terminal '.'");
    LineResult r;
    r.kind = LineResult::Kind::TripleLine;
    r.triple = std::move(t);
    return r;
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
  ParseError err_;
  bool failed_ = false;

  bool at_end() const { return pos_ >= line_.size(); }
  char peek() const { return line_[pos_]; }
  void skip_ws() {
    while (!at_end() && is_ws(peek())) ++pos_;
  }

  LineResult no_triple() {
    LineResult r;
    r.kind = LineResult::Kind::NoTriple;
    return r;
  }

  LineResult error_result() {
    LineResult r;
    r.kind = LineResult::Kind::Error;
    r.error = err_;
    return r;
  }

  LineResult fail(ParseErrorKind kind, std::string message) {
    set_error(kind, std::move(message));
    return error_result();
  }

  bool set_error(ParseErrorKind kind, std::string message) {
    if (!failed_) {
      failed_ = true;
      err_.kind = kind;
      err_.line_no = line_no_;
      err_.byte_offset = pos_;
      err_.message = std::move(message);
    }
    return false;
  }

  bool parse_subject(Term& out) {
    if (at_end())
      return set_error(ParseErrorKind::BadStructure, "empty statement");
    if (peek() == '<') return parse_iri_term(out);
    if (peek() == '_') return parse_blank(out);
    return set_error(ParseErrorKind::BadStructure,
                     "subject must be an IRI or blank node");
  }

  bool parse_predicate(Term& out) {
    if (at_end() || peek() != '<')
      return set_error(ParseErrorKind::BadStructure, "predicate must be an IRI");
    return parse_iri_term(out);
  }

  bool parse_object(Term& out) {
    if (at_end())
      return set_error(ParseErrorKind::BadStructure, "missing object");
    if (peek() == '<') return parse_iri_term(out);
    if (peek() == '_') return parse_blank(out);
    if (peek() == '"') return parse_literal(out);
    return set_error(ParseErrorKind::BadStructure,
                     "object must be an IRI, blank node, or literal");
  }

  bool parse_iri_term(Term& out) {
    std::string iri;
    if (!parse_iriref(iri)) return false;
    out = Term::iri(std::move(iri));
    return true;
  }

  // '<' ([^control <>"{}|^`\] | \uXXXX | \UXXXXXXXX)* '>', absolute.
  bool parse_iriref(std::string& out) {
    std::size_t start = pos_;
    ++pos_;  // consume '<'
    out.clear();
    while (true) {
      if (at_end())
        return set_error(ParseErrorKind::BadIri, "unterminated IRI");
      unsigned char c = static_cast<unsigned char>(peek());
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '\\') {
        std::uint32_t cp = 0;
        if (!parse_uchar(cp)) return false;
        std::string decoded;
        append_utf8(decoded, cp);
        for (unsigned char d : decoded)
          if (d < 0x80 && iri_char_forbidden(d)) {
            pos_ = start;
            return set_error(ParseErrorKind::BadIri,
                             "escape decodes to a character forbidden in IRIs");
          }
        out += decoded;
        continue;
      }
      if (c < 0x80 && iri_char_forbidden(c)) {
        return set_error(ParseErrorKind::BadIri,
                         "character not allowed in IRI");
      }
      out += static_cast<char>(c);
      ++pos_;
    }
    if (!looks_absolute(out)) {
      pos_ = start;
      return set_error(ParseErrorKind::BadIri,
                       "relative IRIs are not allowed in N-Triples");
    }
    return true;
  }

  // \uXXXX or \UXXXXXXXX; pos_ is at the backslash.
  bool parse_uchar(std::uint32_t& cp) {
    std::size_t start = pos_;
    ++pos_;
    if (at_end())
      return set_error(ParseErrorKind::BadEscape, "dangling backslash");
    char kind = peek();
    int len;
    if (kind == 'u')
      len = 4;
    else if (kind == 'U')
      len = 8;
    else {
      pos_ = start;
      return set_error(ParseErrorKind::BadEscape,
                       "only \\u/\\U escapes are allowed here");
    }
    ++pos_;
    cp = 0;
    for (int i = 0; i < len; ++i) {
      if (at_end() || !is_hex(peek())) {
        pos_ = start;
        return set_error(ParseErrorKind::BadEscape, "bad hex digit in escape");
      }
      cp = (cp << 4) | static_cast<std::uint32_t>(hex_value(peek()));
      ++pos_;
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      pos_ = start;
      return set_error(ParseErrorKind::BadEscape,
                       "escape is not a Unicode scalar value");
    }
    return true;
  }

  bool parse_blank(Term& out) {
    std::size_t start = pos_;
    if (line_.size() - pos_ < 2 || line_[pos_ + 1] != ':')
      return set_error(ParseErrorKind::BadBlankNode, "expected '_:'");
    pos_ += 2;
    std::size_t label_start = pos_;
    // ASCII classes of PN_CHARS; bytes >= 0x80 are accepted leniently.
    auto first_ok = [](unsigned char c) {
      return is_alpha(static_cast<char>(c)) || is_digit(static_cast<char>(c)) ||
             c == '_' || c >= 0x80;
    };
    auto mid_ok = [&](unsigned char c) {
      return first_ok(c) || c == '-' || c == '.';
    };
    if (at_end() || !first_ok(static_cast<unsigned char>(peek()))) {
      pos_ = start;
      return set_error(ParseErrorKind::BadBlankNode,
                       "bad first character in blank node label");
    }
    ++pos_;
    while (!at_end() && mid_ok(static_cast<unsigned char>(peek()))) ++pos_;
    // '.' may appear inside a label but not end one; give trailing dots back.
    std::size_t end = pos_;
    while (end > label_start + 1 && line_[end - 1] == '.') --end;
    pos_ = end;
    out = Term::blank(std::string(line_.substr(label_start, end - label_start)));
    return true;
  }

  bool parse_literal(Term& out) {
    ++pos_;  // consume '"'
    std::string lexical;
    while (true) {
      if (at_end())
        return set_error(ParseErrorKind::BadLiteral, "unterminated literal");
      unsigned char c = static_cast<unsigned char>(peek());
      if (c == '"') {
        ++pos_;
        break;
      }
      if (c == '\\') {
        if (!parse_literal_escape(lexical)) return false;
        continue;
      }
      if (c == '\n' || c == '\r')
        return set_error(ParseErrorKind::BadLiteral,
                         "raw line break inside literal");
      lexical += static_cast<char>(c);
      ++pos_;
    }
    if (!at_end() && peek() == '@') {
      std::string lang;
      if (!parse_langtag(lang)) return false;
      out = Term::lang_literal(std::move(lexical), std::move(lang));
      return true;
    }
    if (line_.size() - pos_ >= 2 && peek() == '^' && line_[pos_ + 1] == '^') {
      pos_ += 2;
      if (at_end() || peek() != '<')
        return set_error(ParseErrorKind::BadLiteral,
                         "expected IRI after '^^'");
      std::string dt;
      if (!parse_iriref(dt)) return false;
      out = Term::literal(std::move(lexical), std::move(dt));
      return true;
    }
    out = Term::literal(std::move(lexical));
    return true;
  }

  bool parse_literal_escape(std::string& lexical) {
    std::size_t start = pos_;
    if (line_.size() - pos_ < 2) {
      return set_error(ParseErrorKind::BadEscape, "dangling backslash");
    }
    char c = line_[pos_ + 1];
    switch (c) {
      case 't': lexical += '\t'; pos_ += 2; return true;
      case 'b': lexical += '\b'; pos_ += 2; return true;
      case 'n': lexical += '\n'; pos_ += 2; return true;
      case 'r': lexical += '\r'; pos_ += 2; return true;
      case 'f': lexical += '\f'; pos_ += 2; return true;
      case '"': lexical += '"'; pos_ += 2; return true;
      case '\'': lexical += '\''; pos_ += 2; return true;
      case '\\': lexical += '\\'; pos_ += 2; return true;
      case 'u':
      case 'U': {
        std::uint32_t cp = 0;
        if (!parse_uchar(cp)) return false;
        append_utf8(lexical, cp);
        return true;
      }
      default:
        pos_ = start;
        return set_error(ParseErrorKind::BadEscape,
                         "unknown escape sequence in literal");
    }
  }

  bool parse_langtag(std::string& lang) {
    ++pos_;  // consume '@'
    std::size_t start = pos_;
    while (!at_end() && is_alpha(peek())) ++pos_;
    if (pos_ == start)
      return set_error(ParseErrorKind::BadLang, "empty language tag");
    while (!at_end() && peek() == '-') {
      ++pos_;
      std::size_t sub = pos_;
      while (!at_end() && (is_alpha(peek()) || is_digit(peek()))) ++pos_;
      if (pos_ == sub)
        return set_error(ParseErrorKind::BadLang, "empty language subtag");
    }
    lang = std::string(line_.substr(start, pos_ - start));
    return true;
  }
};

void account_line(Dataset& ds, const LineResult& r) {
  ds.parse_report.lines_total += 1;
  switch (r.kind) {
    case LineResult::Kind::TripleLine:
      ds.parse_report.triples_ok += 1;
      break;
    case LineResult::Kind::NoTriple:
      ds.parse_report.lines_blank += 1;
      break;
    case LineResult::Kind::Error:
      ds.parse_report.lines_skipped += 1;
      if (ds.parse_report.errors.size() < ParseReport::kMaxStoredErrors)
        ds.parse_report.errors.push_back(r.error);
      break;
  }
}

}  // namespace

LineResult parse_ntriples_line(std::string_view line, std::size_t line_no) {
  // A trailing carriage return (CRLF input) is not part of the statement.
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return LineParser(line, line_no).run();
}

DatasetResult parse_dataset_stream(std::istream& in, ErrorPolicy policy,
                                   std::string origin) {
  DatasetResult result;
  result.dataset.origin = std::move(origin);
  Dataset& ds = result.dataset;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    LineResult r = parse_ntriples_line(line, line_no);
    account_line(ds, r);
    if (r.is_triple()) {
      ds.triples.push_back(std::move(r.triple));
    } else if (r.is_error() && policy == ErrorPolicy::Strict) {
      result.error = r.error;
      return result;
    }
  }
  if (in.bad()) {
    ParseError e;
    e.kind = ParseErrorKind::Io;
    e.line_no = line_no;
    e.message = "read failure on " + ds.origin;
    result.error = e;
  }
  return result;
}

DatasetResult parse_dataset_string(std::string_view text, ErrorPolicy policy,
                                   std::string origin) {
  std::istringstream in{std::string(text)};
  return parse_dataset_stream(in, policy, std::move(origin));
}

DatasetResult parse_dataset_file(const std::string& path, ErrorPolicy policy) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) {
    DatasetResult result;
    result.dataset.origin = path;
    ParseError e;
    e.kind = ParseErrorKind::Io;
    e.message = "cannot open " + path;
    result.error = e;
    return result;
  }
  return parse_dataset_stream(in, policy, path);
}

namespace {

void append_escaped_lexical(std::string& out, std::string_view lexical) {
  for (unsigned char c : lexical) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04X", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
}

}  // namespace

std::string serialize_term(const Term& term) {
  std::string out;
  switch (term.kind()) {
    case TermKind::Iri:
      out += '<';
      out += term.value();
      out += '>';
      break;
    case TermKind::BlankNode:
      out += "_:";
      out += term.value();
      break;
    case TermKind::Literal:
      out += '"';
      append_escaped_lexical(out, term.value());
      out += '"';
      if (term.has_lang()) {
        out += '@';
        out += term.lang();
      } else if (term.datatype() != vocab::xsd_string) {
        out += "^^<";
        out += term.datatype();
        out += '>';
      }
      break;
  }
  return out;
}

std::string serialize_triple(const Triple& triple) {
  std::string out = serialize_term(triple.subject);
  out += ' ';
  out += serialize_term(triple.predicate);
  out += ' ';
  out += serialize_term(triple.object);
  out += " .";
  return out;
}

void write_ntriples(const Dataset& dataset, std::ostream& out) {
  for (const Triple& t : dataset.triples) out << serialize_triple(t) << '\n';
}

}  // namespace rdfqa
