#pragma once

#include <map>
#include <string>
#include <string_view>

namespace rdfqa::xsd {

using Validator = bool (*)(std::string_view);

// Lexical-form checks for the supported XSD datatypes. Each returns true iff
// the string is in the datatype's lexical space (whitespace is significant;
// callers pass the raw lexical form).
bool valid_string(std::string_view s);
bool valid_boolean(std::string_view s);
bool valid_decimal(std::string_view s);
bool valid_double(std::string_view s);
bool valid_integer(std::string_view s);
bool valid_long(std::string_view s);
bool valid_int(std::string_view s);
bool valid_short(std::string_view s);
bool valid_byte(std::string_view s);
bool valid_non_negative_integer(std::string_view s);
bool valid_non_positive_integer(std::string_view s);
bool valid_positive_integer(std::string_view s);
bool valid_negative_integer(std::string_view s);
bool valid_unsigned_long(std::string_view s);
bool valid_unsigned_int(std::string_view s);
bool valid_unsigned_short(std::string_view s);
bool valid_unsigned_byte(std::string_view s);
bool valid_date_time(std::string_view s);
bool valid_date(std::string_view s);
bool valid_any_uri(std::string_view s);

using ValidatorMap = std::map<std::string, Validator, std::less<>>;

// Datatype IRI -> validator for every supported datatype, including
// xsd:string and rdf:langString (always valid). Datatypes absent from the
// map are "unknown" and excluded from malformedness counting.
const ValidatorMap& default_validators();

}  // namespace rdfqa::xsd
