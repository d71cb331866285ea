#include "rdfqa/metrics.hpp"

namespace rdfqa {

std::string_view to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::Indicator: return "indicator";
    case ValueKind::Ratio: return "ratio";
    case ValueKind::Count: return "count";
  }
  return "unknown";
}

namespace {

FilterPtr fs() { return FilterExpr::position(Position::Subject); }
FilterPtr fp() { return FilterExpr::position(Position::Predicate); }
FilterPtr fo() { return FilterExpr::position(Position::Object); }

TransformationPtr rule(RuleKind kind, FilterPtr f) {
  return TransformationExpr::rule_node(RuleExpr::make(kind, std::move(f)));
}

TransformationPtr res_too_long() {
  return TransformationExpr::rule_node(
      RuleExpr::make(RuleKind::ResTooLong, nullptr));
}

TransformationPtr and_(TransformationPtr l, TransformationPtr r) {
  return TransformationExpr::intersect(std::move(l), std::move(r));
}

TransformationPtr or_(TransformationPtr l, TransformationPtr r) {
  return TransformationExpr::unite(std::move(l), std::move(r));
}

MetricPtr count(TransformationPtr t) {
  return MetricExpr::action_leaf(ActionExpr::count(std::move(t)));
}

MetricPtr count_triples() {
  return MetricExpr::action_leaf(ActionExpr::count_all());
}

MetricPtr div(MetricPtr l, MetricPtr r) {
  return MetricExpr::arith(ArithOp::Div, std::move(l), std::move(r));
}

MetricPtr add(MetricPtr l, MetricPtr r) {
  return MetricExpr::arith(ArithOp::Add, std::move(l), std::move(r));
}

MetricPtr sub(MetricPtr l, MetricPtr r) {
  return MetricExpr::arith(ArithOp::Sub, std::move(l), std::move(r));
}

MetricDefinition make_l1() {
  MetricDefinition d;
  d.id = "L1";
  d.name = "Detection of a Machine Readable License";
  d.dimension = "licensing";
  d.value_kind = ValueKind::Indicator;
  d.expr = MetricExpr::indicator_positive(
      count(rule(RuleKind::HasLicenceAssociated, fp())));
  d.dsl_text = "positive(count(hasLicenceAssociated(?p)))";
  return d;
}

MetricDefinition make_l2() {
  MetricDefinition d;
  d.id = "L2";
  d.name = "Detection of a Human Readable License";
  d.dimension = "licensing";
  d.value_kind = ValueKind::Indicator;
  d.expr = MetricExpr::indicator_positive(count(
      and_(and_(and_(rule(RuleKind::IsUri, fs()),
                     rule(RuleKind::HasLicenceIndications, fp())),
                rule(RuleKind::IsLiteral, fo())),
           rule(RuleKind::IsLicenseStatement, fo()))));
  d.dsl_text =
      "positive(count(isURI(?s) AND hasLicenceIndications(?p) AND "
      "isLiteral(?o) AND isLicenseStatement(?o)))";
  return d;
}

MetricDefinition make_i2() {
  MetricDefinition d;
  d.id = "I2";
  d.name = "Linkage Degree of Linked External Data Providers";
  d.dimension = "interlinking";
  d.value_kind = ValueKind::Ratio;
  auto outbound = and_(and_(and_(rule(RuleKind::IsIri, fs()),
                                 rule(RuleKind::IsInternal, fs())),
                            rule(RuleKind::IsIri, fo())),
                       rule(RuleKind::IsExternal, fo()));
  auto inbound = and_(and_(and_(rule(RuleKind::IsIri, fs()),
                                rule(RuleKind::IsExternal, fs())),
                           rule(RuleKind::IsIri, fo())),
                      rule(RuleKind::IsInternal, fo()));
  d.expr = div(count(or_(std::move(outbound), std::move(inbound))),
               count_triples());
  d.dsl_text =
      "count(isIRI(?s) AND isInternal(?s) AND isIRI(?o) AND isExternal(?o) OR "
      "isIRI(?s) AND isExternal(?s) AND isIRI(?o) AND isInternal(?o)) / "
      "count(triples)";
  return d;
}

MetricDefinition make_u1() {
  MetricDefinition d;
  d.id = "U1";
  d.name = "Detection of Human Readable Labels";
  d.dimension = "understandability";
  d.value_kind = ValueKind::Ratio;
  auto labeled_subject = and_(and_(rule(RuleKind::IsUri, fs()),
                                   rule(RuleKind::IsInternal, fs())),
                              rule(RuleKind::IsLabeled, fp()));
  auto labeled_predicate = and_(rule(RuleKind::IsInternal, fp()),
                                rule(RuleKind::IsLabeled, fp()));
  auto labeled_object = and_(and_(rule(RuleKind::IsUri, fo()),
                                  rule(RuleKind::IsInternal, fo())),
                             rule(RuleKind::IsLabeled, fp()));
  d.expr = div(add(add(count(std::move(labeled_subject)),
                       count(std::move(labeled_predicate))),
                   count(std::move(labeled_object))),
               count_triples());
  d.dsl_text =
      "(count(isURI(?s) AND isInternal(?s) AND isLabeled(?p)) + "
      "count(isInternal(?p) AND isLabeled(?p)) + "
      "count(isURI(?o) AND isInternal(?o) AND isLabeled(?p))) / "
      "count(triples)";
  return d;
}

MetricDefinition make_rc1() {
  MetricDefinition d;
  d.id = "RC1";
  d.name = "Short URIs";
  d.dimension = "representational-conciseness";
  d.value_kind = ValueKind::Ratio;
  d.expr = div(count(res_too_long()), count_triples());
  d.dsl_text = "count(resTooLong(?s, ?p, ?o)) / count(triples)";
  return d;
}

MetricDefinition make_sv3() {
  MetricDefinition d;
  d.id = "SV3";
  d.name = "Identification of Literals with Malformed Datatypes";
  d.dimension = "syntactic-validity";
  d.value_kind = ValueKind::Count;
  auto typed = and_(rule(RuleKind::IsLiteral, fo()),
                    rule(RuleKind::GetDatatype, fo()));
  auto well_formed =
      and_(and_(rule(RuleKind::IsLiteral, fo()),
                rule(RuleKind::GetDatatype, fo())),
           rule(RuleKind::LexicalFormCompatibleWithDatatype, fo()));
  d.expr = sub(count(std::move(typed)), count(std::move(well_formed)));
  d.dsl_text =
      "count(isLiteral(?o) AND getDatatype(?o)) - count(isLiteral(?o) AND "
      "getDatatype(?o) AND lexicalFormCompatibleWithDatatype(?o))";
  return d;
}

MetricDefinition make_cn2() {
  MetricDefinition d;
  d.id = "CN2";
  d.name = "Extensional Conciseness";
  d.dimension = "conciseness";
  d.value_kind = ValueKind::Ratio;
  auto uri_to_uri =
      and_(rule(RuleKind::IsUri, fs()), rule(RuleKind::IsUri, fo()));
  d.expr = div(sub(count_triples(), count(std::move(uri_to_uri))),
               count_triples());
  d.dsl_text =
      "(count(triples) - count(isURI(?s) AND isURI(?o))) / count(triples)";
  return d;
}

}  // namespace

const std::vector<MetricDefinition>& builtin_metrics() {
  static const std::vector<MetricDefinition> defs = {
      make_l1(), make_l2(), make_i2(), make_u1(),
      make_rc1(), make_sv3(), make_cn2(),
  };
  return defs;
}

const MetricDefinition* find_metric(std::string_view id) {
  for (const MetricDefinition& d : builtin_metrics())
    if (d.id == id) return &d;
  return nullptr;
}

}  // namespace rdfqa
