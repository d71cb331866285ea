#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace rdfqa {

// Well-known vocabulary IRIs used across the library.
namespace vocab {
inline constexpr std::string_view xsd_ns = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view xsd_string = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view rdf_lang_string =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr std::string_view rdf_type =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view dqv_ns = "http://www.w3.org/ns/dqv#";
inline constexpr std::string_view prov_ns = "http://www.w3.org/ns/prov#";
}  // namespace vocab

enum class TermKind : std::uint8_t { Iri, BlankNode, Literal };

// An RDF node. Immutable after construction; exactly one kind's fields are
// meaningful. Literals always carry a datatype IRI: rdf:langString when a
// language tag is present, xsd:string when none was given (RDF 1.1).
class Term {
 public:
  Term() : kind_(TermKind::Iri) {}

  static Term iri(std::string value) {
    Term t;
    t.kind_ = TermKind::Iri;
    t.value_ = std::move(value);
    return t;
  }

  static Term blank(std::string label) {
    Term t;
    t.kind_ = TermKind::BlankNode;
    t.value_ = std::move(label);
    return t;
  }

  static Term literal(std::string lexical) {
    return literal(std::move(lexical), std::string(vocab::xsd_string));
  }

  static Term literal(std::string lexical, std::string datatype) {
    Term t;
    t.kind_ = TermKind::Literal;
    t.value_ = std::move(lexical);
    t.datatype_ = std::move(datatype);
    return t;
  }

  static Term lang_literal(std::string lexical, std::string lang) {
    Term t;
    t.kind_ = TermKind::Literal;
    t.value_ = std::move(lexical);
    t.datatype_ = std::string(vocab::rdf_lang_string);
    t.lang_ = std::move(lang);
    return t;
  }

  TermKind kind() const { return kind_; }
  bool is_iri() const { return kind_ == TermKind::Iri; }
  bool is_blank() const { return kind_ == TermKind::BlankNode; }
  bool is_literal() const { return kind_ == TermKind::Literal; }

  // IRI string, blank-node label, or literal lexical form depending on kind.
  const std::string& value() const { return value_; }
  const std::string& datatype() const { return datatype_; }
  const std::string& lang() const { return lang_; }
  bool has_lang() const { return !lang_.empty(); }

  bool operator==(const Term& other) const {
    return kind_ == other.kind_ && value_ == other.value_ &&
           datatype_ == other.datatype_ && lang_ == other.lang_;
  }
  bool operator!=(const Term& other) const { return !(*this == other); }

 private:
  TermKind kind_;
  std::string value_;
  std::string datatype_;
  std::string lang_;
};

// One RDF statement. Subject is an IRI or blank node, predicate an IRI.
struct Triple {
  Term subject;
  Term predicate;
  Term object;

  bool operator==(const Triple& other) const {
    return subject == other.subject && predicate == other.predicate &&
           object == other.object;
  }
  bool operator!=(const Triple& other) const { return !(*this == other); }
};

// Number of Unicode code points in a UTF-8 string (continuation bytes are
// not counted). Used for IRI length thresholds.
inline std::size_t codepoint_length(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

}  // namespace rdfqa
