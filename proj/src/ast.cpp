#include "rdfqa/ast.hpp"

namespace rdfqa {

std::string_view rule_name(RuleKind kind) {
  switch (kind) {
    case RuleKind::IsUri: return "isURI";
    case RuleKind::IsIri: return "isIRI";
    case RuleKind::IsInternal: return "isInternal";
    case RuleKind::IsExternal: return "isExternal";
    case RuleKind::IsLiteral: return "isLiteral";
    case RuleKind::IsLabeled: return "isLabeled";
    case RuleKind::HasLicenceAssociated: return "hasLicenceAssociated";
    case RuleKind::HasLicenceIndications: return "hasLicenceIndications";
    case RuleKind::IsLicenseStatement: return "isLicenseStatement";
    case RuleKind::HasType: return "hasType";
    case RuleKind::ResTooLong: return "resTooLong";
    case RuleKind::GetDatatype: return "getDatatype";
    case RuleKind::LexicalFormCompatibleWithDatatype:
      return "lexicalFormCompatibleWithDatatype";
    case RuleKind::IsBroken: return "isBroken";
    case RuleKind::HasPredicateP: return "hasPredicateP";
  }
  return "?";
}

FilterPtr FilterExpr::position(Position p) {
  auto f = std::make_shared<FilterExpr>();
  f->kind = Kind::Pos;
  f->pos = p;
  return f;
}

FilterPtr FilterExpr::distinct(FilterPtr inner) {
  auto f = std::make_shared<FilterExpr>();
  f->kind = Kind::Distinct;
  f->left = std::move(inner);
  return f;
}

FilterPtr FilterExpr::conj(FilterPtr l, FilterPtr r) {
  auto f = std::make_shared<FilterExpr>();
  f->kind = Kind::And;
  f->left = std::move(l);
  f->right = std::move(r);
  return f;
}

FilterPtr FilterExpr::disj(FilterPtr l, FilterPtr r) {
  auto f = std::make_shared<FilterExpr>();
  f->kind = Kind::Or;
  f->left = std::move(l);
  f->right = std::move(r);
  return f;
}

RulePtr RuleExpr::make(RuleKind kind, FilterPtr filter, bool negated) {
  auto r = std::make_shared<RuleExpr>();
  r->kind = kind;
  r->filter = std::move(filter);
  r->negated = negated;
  return r;
}

TransformationPtr TransformationExpr::rule_node(RulePtr r) {
  auto t = std::make_shared<TransformationExpr>();
  t->kind = Kind::Rule;
  t->filter = r ? r->filter : nullptr;
  t->rule = std::move(r);
  return t;
}

TransformationPtr TransformationExpr::select_node(FilterPtr bare_filter) {
  auto t = std::make_shared<TransformationExpr>();
  t->kind = Kind::Rule;
  t->filter = std::move(bare_filter);
  return t;
}

TransformationPtr TransformationExpr::intersect(TransformationPtr l,
                                                TransformationPtr r) {
  auto t = std::make_shared<TransformationExpr>();
  t->kind = Kind::Intersect;
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

TransformationPtr TransformationExpr::unite(TransformationPtr l,
                                            TransformationPtr r) {
  auto t = std::make_shared<TransformationExpr>();
  t->kind = Kind::Union;
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

TransformationPtr TransformationExpr::distinct(TransformationPtr inner) {
  auto t = std::make_shared<TransformationExpr>();
  t->kind = Kind::Distinct;
  t->left = std::move(inner);
  return t;
}

ActionPtr ActionExpr::count(TransformationPtr t) {
  auto a = std::make_shared<ActionExpr>();
  a->kind = Kind::Count;
  a->transformation = std::move(t);
  return a;
}

ActionPtr ActionExpr::count_all() {
  auto a = std::make_shared<ActionExpr>();
  a->kind = Kind::CountAllTriples;
  return a;
}

MetricPtr MetricExpr::action_leaf(ActionPtr a) {
  auto m = std::make_shared<MetricExpr>();
  m->kind = Kind::Action;
  m->action = std::move(a);
  return m;
}

MetricPtr MetricExpr::arith(ArithOp op, MetricPtr l, MetricPtr r) {
  auto m = std::make_shared<MetricExpr>();
  m->kind = Kind::Arith;
  m->op = op;
  m->left = std::move(l);
  m->right = std::move(r);
  return m;
}

MetricPtr MetricExpr::indicator_positive(MetricPtr inner) {
  auto m = std::make_shared<MetricExpr>();
  m->kind = Kind::IndicatorPositive;
  m->left = std::move(inner);
  return m;
}

bool ast_equal(const FilterExpr* a, const FilterExpr* b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FilterExpr::Kind::Pos:
      return a->pos == b->pos;
    case FilterExpr::Kind::Distinct:
      return ast_equal(a->left.get(), b->left.get());
    case FilterExpr::Kind::And:
    case FilterExpr::Kind::Or:
      return ast_equal(a->left.get(), b->left.get()) &&
             ast_equal(a->right.get(), b->right.get());
  }
  return false;
}

bool ast_equal(const RuleExpr* a, const RuleExpr* b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->kind == b->kind && a->negated == b->negated &&
         ast_equal(a->filter.get(), b->filter.get());
}

bool ast_equal(const TransformationExpr* a, const TransformationExpr* b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TransformationExpr::Kind::Rule:
      return ast_equal(a->rule.get(), b->rule.get()) &&
             ast_equal(a->filter.get(), b->filter.get());
    case TransformationExpr::Kind::Distinct:
      return ast_equal(a->left.get(), b->left.get());
    case TransformationExpr::Kind::Intersect:
    case TransformationExpr::Kind::Union:
      return ast_equal(a->left.get(), b->left.get()) &&
             ast_equal(a->right.get(), b->right.get());
  }
  return false;
}

namespace {

bool action_equal(const ActionExpr* a, const ActionExpr* b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  if (a->kind == ActionExpr::Kind::CountAllTriples) return true;
  return ast_equal(a->transformation.get(), b->transformation.get());
}

}  // namespace

bool ast_equal(const MetricExpr* a, const MetricExpr* b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case MetricExpr::Kind::Action:
      return action_equal(a->action.get(), b->action.get());
    case MetricExpr::Kind::Arith:
      return a->op == b->op && ast_equal(a->left.get(), b->left.get()) &&
             ast_equal(a->right.get(), b->right.get());
    case MetricExpr::Kind::IndicatorPositive:
      return ast_equal(a->left.get(), b->left.get());
  }
  return false;
}

namespace {

void collect_actions_into(const MetricExpr& m,
                          std::vector<const ActionExpr*>& out) {
  switch (m.kind) {
    case MetricExpr::Kind::Action:
      out.push_back(m.action.get());
      break;
    case MetricExpr::Kind::Arith:
      collect_actions_into(*m.left, out);
      collect_actions_into(*m.right, out);
      break;
    case MetricExpr::Kind::IndicatorPositive:
      collect_actions_into(*m.left, out);
      break;
  }
}

std::size_t rule_nodes_in(const TransformationExpr* t) {
  if (!t) return 0;
  switch (t->kind) {
    case TransformationExpr::Kind::Rule:
      return t->rule ? 1 : 0;
    case TransformationExpr::Kind::Distinct:
      return rule_nodes_in(t->left.get());
    case TransformationExpr::Kind::Intersect:
    case TransformationExpr::Kind::Union:
      return rule_nodes_in(t->left.get()) + rule_nodes_in(t->right.get());
  }
  return 0;
}

}  // namespace

std::vector<const ActionExpr*> collect_actions(const MetricExpr& m) {
  std::vector<const ActionExpr*> out;
  collect_actions_into(m, out);
  return out;
}

std::size_t count_rule_nodes(const MetricExpr& m) {
  std::size_t n = 0;
  for (const ActionExpr* a : collect_actions(m))
    if (a->kind == ActionExpr::Kind::Count)
      n += rule_nodes_in(a->transformation.get());
  return n;
}

}  // namespace rdfqa
