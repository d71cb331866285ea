#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace rdfqa {

enum class Position : int { Subject = 0, Predicate = 1, Object = 2 };

struct FilterExpr;
struct RuleExpr;
struct TransformationExpr;
struct ActionExpr;
struct MetricExpr;

using FilterPtr = std::shared_ptr<const FilterExpr>;
using RulePtr = std::shared_ptr<const RuleExpr>;
using TransformationPtr = std::shared_ptr<const TransformationExpr>;
using ActionPtr = std::shared_ptr<const ActionExpr>;
using MetricPtr = std::shared_ptr<const MetricExpr>;

// Position selector: ?s / ?p / ?o, combinable with && (And) and || (Or),
// optionally wrapped in a top-level distinct projection.
struct FilterExpr {
  enum class Kind { Pos, Distinct, And, Or };
  Kind kind = Kind::Pos;
  Position pos = Position::Subject;
  FilterPtr left;   // Distinct inner / And-Or left
  FilterPtr right;  // And-Or right

  static FilterPtr position(Position p);
  static FilterPtr distinct(FilterPtr inner);
  static FilterPtr conj(FilterPtr l, FilterPtr r);
  static FilterPtr disj(FilterPtr l, FilterPtr r);
};

enum class RuleKind {
  IsUri,
  IsIri,
  IsInternal,
  IsExternal,
  IsLiteral,
  IsLabeled,
  HasLicenceAssociated,
  HasLicenceIndications,
  IsLicenseStatement,
  HasType,
  ResTooLong,  // fixed (?s, ?p, ?o), no filter argument
  GetDatatype,
  LexicalFormCompatibleWithDatatype,
  IsBroken,      // representable, rejected at plan time
  HasPredicateP  // representable, rejected at plan time
};

std::string_view rule_name(RuleKind kind);

// A boolean criterion applied at the positions its filter selects.
struct RuleExpr {
  RuleKind kind = RuleKind::IsUri;
  bool negated = false;  // only the grammar's !isBroken form sets this
  FilterPtr filter;      // null for ResTooLong and HasPredicateP

  static RulePtr make(RuleKind kind, FilterPtr filter, bool negated = false);
};

// Dataset-to-subcollection operator. Rule nodes select matching statements;
// Intersect/Union combine selections; Distinct deduplicates whole statements
// of its operand. A rule node whose filter is a top-level distinct projects
// the filtered positions into a deduplicated tuple set instead.
struct TransformationExpr {
  enum class Kind { Rule, Intersect, Union, Distinct };
  Kind kind = Kind::Rule;
  RulePtr rule;      // Rule kind; null rule keeps every statement
  FilterPtr filter;  // Rule kind: the rule's filter, or the bare selection
  TransformationPtr left;   // set ops / Distinct inner
  TransformationPtr right;  // set ops

  static TransformationPtr rule_node(RulePtr r);
  static TransformationPtr select_node(FilterPtr bare_filter);  // no rule
  static TransformationPtr intersect(TransformationPtr l, TransformationPtr r);
  static TransformationPtr unite(TransformationPtr l, TransformationPtr r);
  static TransformationPtr distinct(TransformationPtr inner);
};

struct ActionExpr {
  enum class Kind { Count, CountAllTriples };
  Kind kind = Kind::Count;
  TransformationPtr transformation;  // null for CountAllTriples

  static ActionPtr count(TransformationPtr t);
  static ActionPtr count_all();
};

enum class ArithOp : char { Add = '+', Sub = '-', Mul = '*', Div = '/' };

// A metric: an action value or an arithmetic combination of them, plus the
// 0/1 indicator used by threshold-style metrics.
struct MetricExpr {
  enum class Kind { Action, Arith, IndicatorPositive };
  Kind kind = Kind::Action;
  ActionPtr action;
  ArithOp op = ArithOp::Add;
  MetricPtr left;   // Arith left / IndicatorPositive inner
  MetricPtr right;  // Arith right

  static MetricPtr action_leaf(ActionPtr a);
  static MetricPtr arith(ArithOp op, MetricPtr l, MetricPtr r);
  static MetricPtr indicator_positive(MetricPtr inner);
};

// Deep structural equality.
bool ast_equal(const FilterExpr* a, const FilterExpr* b);
bool ast_equal(const RuleExpr* a, const RuleExpr* b);
bool ast_equal(const TransformationExpr* a, const TransformationExpr* b);
bool ast_equal(const MetricExpr* a, const MetricExpr* b);

// Actions in left-to-right AST order (labels a1, a2, ... follow this order).
std::vector<const ActionExpr*> collect_actions(const MetricExpr& m);

// Number of rule applications per statement scan, summed over all actions.
// Null-rule selection nodes contribute nothing.
std::size_t count_rule_nodes(const MetricExpr& m);

}  // namespace rdfqa
