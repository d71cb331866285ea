#include "rdfqa/dqv.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <stdexcept>

#include "rdfqa/xsd.hpp"

namespace rdfqa {

namespace {

constexpr std::string_view kDqvMeasurement =
    "http://www.w3.org/ns/dqv#QualityMeasurement";
constexpr std::string_view kDqvIsMeasurementOf =
    "http://www.w3.org/ns/dqv#isMeasurementOf";
constexpr std::string_view kDqvComputedOn =
    "http://www.w3.org/ns/dqv#computedOn";
constexpr std::string_view kDqvValue = "http://www.w3.org/ns/dqv#value";
constexpr std::string_view kProvGeneratedAtTime =
    "http://www.w3.org/ns/prov#generatedAtTime";

std::uint64_t fnv1a64(std::string_view data, std::uint64_t h) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::string content_hash(std::string_view origin, std::string_view timestamp) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  h = fnv1a64(origin, h);
  h = fnv1a64("\x1f", h);
  h = fnv1a64(timestamp, h);
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

void require_absolute_iri(const std::string& iri, const char* what) {
  bool has_scheme = false;
  for (std::size_t i = 0; i < iri.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(iri[i]);
    if (c <= 0x20 || c == '<' || c == '>' || c == '"')
      throw std::invalid_argument(std::string(what) +
                                  " contains characters not allowed in IRIs");
    if (iri[i] == ':' && i > 0 && !has_scheme) has_scheme = true;
  }
  if (iri.empty() || !has_scheme)
    throw std::invalid_argument(std::string(what) + " must be an absolute IRI");
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  std::string out(buf, ptr);
  if (out.find_first_of(".eE") == std::string::npos &&
      out.find_first_of("0123456789") != std::string::npos)
    out += ".0";
  return out;
}

std::string current_utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Dataset dqvify(const std::vector<MetricResult>& results,
               const std::string& dataset_iri, const std::string& base,
               const std::string& timestamp) {
  require_absolute_iri(dataset_iri, "dataset IRI");
  require_absolute_iri(base, "base namespace");
  std::string ts = timestamp.empty() ? current_utc_timestamp() : timestamp;
  if (!xsd::valid_date_time(ts))
    throw std::invalid_argument("timestamp is not a valid xsd:dateTime: " + ts);

  Dataset report;
  report.origin = "dqv-report";
  const std::string xsd_double =
      std::string(vocab::xsd_ns) + "double";
  const std::string xsd_integer =
      std::string(vocab::xsd_ns) + "integer";

  for (const MetricResult& r : results) {
    if (r.failed()) continue;
    const std::string measurement =
        base + r.id + "-" + content_hash(r.dataset_origin, ts);
    const std::string metric_iri = base + "metric/" + r.id;

    Term m = Term::iri(measurement);
    auto emit = [&](std::string_view p, Term o) {
      report.triples.push_back(
          Triple{m, Term::iri(std::string(p)), std::move(o)});
    };
    emit(vocab::rdf_type, Term::iri(std::string(kDqvMeasurement)));
    emit(kDqvIsMeasurementOf, Term::iri(metric_iri));
    emit(kDqvComputedOn, Term::iri(dataset_iri));
    if (r.value_kind == ValueKind::Count) {
      emit(kDqvValue,
           Term::literal(std::to_string(static_cast<long long>(r.value)),
                         xsd_integer));
    } else {
      emit(kDqvValue, Term::literal(format_double(r.value), xsd_double));
    }
    emit(kProvGeneratedAtTime,
         Term::literal(ts, std::string(vocab::xsd_ns) + "dateTime"));
  }
  report.parse_report.lines_total = report.triples.size();
  report.parse_report.triples_ok = report.triples.size();
  return report;
}

}  // namespace rdfqa
