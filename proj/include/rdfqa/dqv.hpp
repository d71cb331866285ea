#pragma once

#include <string>
#include <vector>

#include "rdfqa/engine.hpp"
#include "rdfqa/ntriples.hpp"

namespace rdfqa {

// Serializes assessment results as a DQV graph. Each successful result
// yields exactly five triples:
//   <m> rdf:type dqv:QualityMeasurement
//   <m> dqv:isMeasurementOf <base>metric/<id>
//   <m> dqv:computedOn <dataset_iri>
//   <m> dqv:value "<v>"^^xsd:double|xsd:integer
//   <m> prov:generatedAtTime "<t>"^^xsd:dateTime
//
// Measurement IRIs are <base><id>-<hash(origin, timestamp)>, so reruns with
// a pinned timestamp are byte-reproducible while separate runs stay
// distinguishable. Throws std::invalid_argument on bad IRI or timestamp
// inputs. Failed results are skipped.
Dataset dqvify(const std::vector<MetricResult>& results,
               const std::string& dataset_iri, const std::string& base,
               const std::string& timestamp);

// Current UTC time as xsd:dateTime (second resolution).
std::string current_utc_timestamp();

// Shortest round-trip decimal rendering; integral doubles gain a ".0" so
// the xsd:double lexical form is unambiguous.
std::string format_double(double value);

}  // namespace rdfqa
