#include "rdfqa/xsd.hpp"

#include <cstdint>

#include "rdfqa/term.hpp"

namespace rdfqa::xsd {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!is_digit(c)) return false;
  return true;
}

struct IntegerLexical {
  bool negative = false;
  std::string_view magnitude;  // digits with leading zeros stripped; "0" for zero
  bool is_zero = false;
};

bool split_integer(std::string_view s, IntegerLexical& out) {
  if (s.empty()) return false;
  if (s[0] == '+' || s[0] == '-') {
    out.negative = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) return false;
  std::size_t nz = s.find_first_not_of('0');
  if (nz == std::string_view::npos) {
    out.magnitude = "0";
    out.is_zero = true;
    out.negative = false;
  } else {
    out.magnitude = s.substr(nz);
  }
  return true;
}

// |value| <= bound, both as digit strings without leading zeros.
bool magnitude_leq(std::string_view magnitude, std::string_view bound) {
  if (magnitude.size() != bound.size()) return magnitude.size() < bound.size();
  return magnitude <= bound;
}

bool bounded_integer(std::string_view s, std::string_view neg_bound,
                     std::string_view pos_bound) {
  IntegerLexical lex;
  if (!split_integer(s, lex)) return false;
  if (lex.is_zero) return true;
  return magnitude_leq(lex.magnitude, lex.negative ? neg_bound : pos_bound);
}

// Year leapness from decimal digits; works for arbitrarily long years.
bool leap_year_digits(std::string_view year_digits) {
  unsigned mod400 = 0;
  for (char c : year_digits) mod400 = (mod400 * 10 + (c - '0')) % 400;
  if (mod400 % 4 != 0) return false;
  if (mod400 % 100 != 0) return true;
  return mod400 == 0;  // divisible by 400
}

constexpr int kDaysInMonth[13] = {0, 31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};

// -? yyyy(y*)-MM-dd; returns the index just past the day, or npos.
std::size_t parse_date_part(std::string_view s) {
  std::size_t pos = 0;
  if (pos < s.size() && s[pos] == '-') ++pos;
  std::size_t year_start = pos;
  while (pos < s.size() && is_digit(s[pos])) ++pos;
  std::size_t year_len = pos - year_start;
  if (year_len < 4) return std::string_view::npos;
  if (year_len > 4 && s[year_start] == '0') return std::string_view::npos;
  std::string_view year_digits = s.substr(year_start, year_len);

  if (pos + 6 > s.size() || s[pos] != '-') return std::string_view::npos;
  ++pos;
  if (!is_digit(s[pos]) || !is_digit(s[pos + 1])) return std::string_view::npos;
  int month = (s[pos] - '0') * 10 + (s[pos + 1] - '0');
  pos += 2;
  if (s[pos] != '-') return std::string_view::npos;
  ++pos;
  if (pos + 2 > s.size() || !is_digit(s[pos]) || !is_digit(s[pos + 1]))
    return std::string_view::npos;
  int day = (s[pos] - '0') * 10 + (s[pos + 1] - '0');
  pos += 2;

  if (month < 1 || month > 12) return std::string_view::npos;
  int max_day = kDaysInMonth[month];
  if (month == 2 && leap_year_digits(year_digits)) max_day = 29;
  if (day < 1 || day > max_day) return std::string_view::npos;
  return pos;
}

// Z | (+|-)hh:mm with hh:mm <= 14:00. Consumes the whole remainder.
bool valid_timezone(std::string_view s) {
  if (s.empty()) return true;
  if (s == "Z") return true;
  if (s.size() != 6 || (s[0] != '+' && s[0] != '-')) return false;
  if (!is_digit(s[1]) || !is_digit(s[2]) || s[3] != ':' || !is_digit(s[4]) ||
      !is_digit(s[5]))
    return false;
  int hh = (s[1] - '0') * 10 + (s[2] - '0');
  int mm = (s[4] - '0') * 10 + (s[5] - '0');
  if (mm > 59) return false;
  if (hh > 14) return false;
  if (hh == 14 && mm != 0) return false;
  return true;
}

// hh:mm:ss(.s+)?; 24:00:00 is the only valid hour-24 form.
std::size_t parse_time_part(std::string_view s) {
  if (s.size() < 8) return std::string_view::npos;
  for (std::size_t i : {0u, 1u, 3u, 4u, 6u, 7u})
    if (!is_digit(s[i])) return std::string_view::npos;
  if (s[2] != ':' || s[5] != ':') return std::string_view::npos;
  int hh = (s[0] - '0') * 10 + (s[1] - '0');
  int mm = (s[3] - '0') * 10 + (s[4] - '0');
  int ss = (s[6] - '0') * 10 + (s[7] - '0');
  if (mm > 59 || ss > 59) return std::string_view::npos;
  std::size_t pos = 8;
  bool fraction = false;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    std::size_t frac_start = pos;
    while (pos < s.size() && is_digit(s[pos])) ++pos;
    if (pos == frac_start) return std::string_view::npos;
    for (std::size_t i = frac_start; i < pos; ++i)
      if (s[i] != '0') fraction = true;
  }
  if (hh > 24) return std::string_view::npos;
  if (hh == 24 && (mm != 0 || ss != 0 || fraction)) return std::string_view::npos;
  return pos;
}

}  // namespace

bool valid_string(std::string_view) { return true; }

bool valid_boolean(std::string_view s) {
  return s == "true" || s == "false" || s == "1" || s == "0";
}

bool valid_decimal(std::string_view s) {
  if (s.empty()) return false;
  if (s[0] == '+' || s[0] == '-') s.remove_prefix(1);
  std::size_t dot = s.find('.');
  if (dot == std::string_view::npos) return all_digits(s);
  std::string_view ipart = s.substr(0, dot);
  std::string_view fpart = s.substr(dot + 1);
  if (ipart.empty() && fpart.empty()) return false;
  if (!ipart.empty() && !all_digits(ipart)) return false;
  if (!fpart.empty() && !all_digits(fpart)) return false;
  return true;
}

bool valid_double(std::string_view s) {
  if (s == "INF" || s == "-INF" || s == "+INF" || s == "NaN") return true;
  std::size_t e = s.find_first_of("eE");
  std::string_view mantissa = e == std::string_view::npos ? s : s.substr(0, e);
  if (!valid_decimal(mantissa)) return false;
  if (e == std::string_view::npos) return true;
  std::string_view exponent = s.substr(e + 1);
  if (exponent.empty()) return false;
  if (exponent[0] == '+' || exponent[0] == '-') exponent.remove_prefix(1);
  return all_digits(exponent);
}

bool valid_integer(std::string_view s) {
  IntegerLexical lex;
  return split_integer(s, lex);
}

bool valid_long(std::string_view s) {
  return bounded_integer(s, "9223372036854775808", "9223372036854775807");
}

bool valid_int(std::string_view s) {
  return bounded_integer(s, "2147483648", "2147483647");
}

bool valid_short(std::string_view s) { return bounded_integer(s, "32768", "32767"); }

bool valid_byte(std::string_view s) { return bounded_integer(s, "128", "127"); }

bool valid_non_negative_integer(std::string_view s) {
  IntegerLexical lex;
  if (!split_integer(s, lex)) return false;
  return lex.is_zero || !lex.negative;
}

bool valid_non_positive_integer(std::string_view s) {
  IntegerLexical lex;
  if (!split_integer(s, lex)) return false;
  return lex.is_zero || lex.negative;
}

bool valid_positive_integer(std::string_view s) {
  IntegerLexical lex;
  if (!split_integer(s, lex)) return false;
  return !lex.is_zero && !lex.negative;
}

bool valid_negative_integer(std::string_view s) {
  IntegerLexical lex;
  if (!split_integer(s, lex)) return false;
  return !lex.is_zero && lex.negative;
}

bool valid_unsigned_long(std::string_view s) {
  IntegerLexical lex;
  if (!split_integer(s, lex) || (lex.negative && !lex.is_zero)) return false;
  return magnitude_leq(lex.magnitude, "18446744073709551615");
}

bool valid_unsigned_int(std::string_view s) {
  IntegerLexical lex;
  if (!split_integer(s, lex) || (lex.negative && !lex.is_zero)) return false;
  return magnitude_leq(lex.magnitude, "4294967295");
}

bool valid_unsigned_short(std::string_view s) {
  IntegerLexical lex;
  if (!split_integer(s, lex) || (lex.negative && !lex.is_zero)) return false;
  return magnitude_leq(lex.magnitude, "65535");
}

bool valid_unsigned_byte(std::string_view s) {
  IntegerLexical lex;
  if (!split_integer(s, lex) || (lex.negative && !lex.is_zero)) return false;
  return magnitude_leq(lex.magnitude, "255");
}

bool valid_date_time(std::string_view s) {
  std::size_t pos = parse_date_part(s);
  if (pos == std::string_view::npos) return false;
  if (pos >= s.size() || s[pos] != 'T') return false;
  std::string_view rest = s.substr(pos + 1);
  std::size_t time_end = parse_time_part(rest);
  if (time_end == std::string_view::npos) return false;
  return valid_timezone(rest.substr(time_end));
}

bool valid_date(std::string_view s) {
  std::size_t pos = parse_date_part(s);
  if (pos == std::string_view::npos) return false;
  return valid_timezone(s.substr(pos));
}

bool valid_any_uri(std::string_view s) {
  // XSD's anyURI lexical space is nearly unconstrained; flag only characters
  // that cannot appear in any IRI reference.
  for (unsigned char c : s)
    if (c <= 0x20) return false;
  return true;
}

const ValidatorMap& default_validators() {
  static const ValidatorMap map = [] {
    ValidatorMap m;
    auto xsd = [](std::string_view local) {
      return std::string(vocab::xsd_ns) + std::string(local);
    };
    m[std::string(vocab::xsd_string)] = valid_string;
    m[std::string(vocab::rdf_lang_string)] = valid_string;
    m[xsd("normalizedString")] = valid_string;
    m[xsd("boolean")] = valid_boolean;
    m[xsd("decimal")] = valid_decimal;
    m[xsd("double")] = valid_double;
    m[xsd("float")] = valid_double;
    m[xsd("integer")] = valid_integer;
    m[xsd("long")] = valid_long;
    m[xsd("int")] = valid_int;
    m[xsd("short")] = valid_short;
    m[xsd("byte")] = valid_byte;
    m[xsd("nonNegativeInteger")] = valid_non_negative_integer;
    m[xsd("nonPositiveInteger")] = valid_non_positive_integer;
    m[xsd("positiveInteger")] = valid_positive_integer;
    m[xsd("negativeInteger")] = valid_negative_integer;
    m[xsd("unsignedLong")] = valid_unsigned_long;
    m[xsd("unsignedInt")] = valid_unsigned_int;
    m[xsd("unsignedShort")] = valid_unsigned_short;
    m[xsd("unsignedByte")] = valid_unsigned_byte;
    m[xsd("dateTime")] = valid_date_time;
    m[xsd("date")] = valid_date;
    m[xsd("anyURI")] = valid_any_uri;
    return m;
  }();
  return map;
}

}  // namespace rdfqa::xsd
