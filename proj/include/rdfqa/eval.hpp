#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rdfqa/ast.hpp"
#include "rdfqa/context.hpp"
#include "rdfqa/ntriples.hpp"
#include "rdfqa/term.hpp"

namespace rdfqa {

enum class MetricFlag {
  ZeroDenominator,
  RatioAboveOne,
  UnknownDatatypesSkipped,
};

std::string_view to_string(MetricFlag flag);

// Structural plan legality: rejects the suspended isBroken rule,
// hasPredicateP, nested distinct, malformed filter shapes, and set
// operations over mismatched projections.
std::vector<std::string> validate_plan(const MetricExpr& m);

// Context requirements: internal prefixes must be configured when the plan
// tests internality; the URI length threshold must be positive for
// resTooLong.
std::vector<std::string> validate_config_requirements(
    const MetricExpr& m, const EvaluationContext& ctx);

bool plan_uses_datatype_rules(const MetricExpr& m);

// True iff the triple satisfies the rule at the positions named by the
// rule's filter (And across &&, Or across ||). Precondition: plan-legal.
bool eval_rule(const RuleExpr& rule, const Triple& triple,
               const EvaluationContext& ctx);

// Membership predicate for bag-mode transformations: every rule node is
// evaluated exactly once per call (no short-circuit), so rule_evals counts
// are partition-order independent.
bool transformation_matches(const TransformationExpr& t, const Triple& triple,
                            const EvaluationContext& ctx,
                            std::uint64_t* rule_evals);

// True when the transformation yields a deduplicated projection rather than
// a statement bag.
bool transformation_is_set_mode(const TransformationExpr& t);

// A distinct leaf inside a set-mode transformation tree: its membership
// condition plus the positions it projects. Leaf key strings use the
// canonical term serialization, so they are injective.
struct SetLeaf {
  const TransformationExpr* node = nullptr;
  std::vector<Position> projection;  // sorted, unique

  bool condition(const Triple& triple, const EvaluationContext& ctx,
                 std::uint64_t* rule_evals) const;
  std::string key(const Triple& triple) const;
};

std::vector<SetLeaf> collect_set_leaves(const TransformationExpr& t);

using KeySet = std::unordered_set<std::string>;

// Set algebra over merged leaf sets, applied after all partitions have been
// folded; intersection across partition-local sets would undercount.
KeySet eval_set_tree(const TransformationExpr& t,
                     std::vector<std::pair<const TransformationExpr*, KeySet>>& leaves);

// Materialized transformation output, for inspection and tests. Bag mode
// preserves input order; set mode lists projected tuples sorted by key.
struct TransformationResult {
  bool distinct = false;
  std::vector<Triple> triples;
  std::vector<std::vector<Term>> tuples;

  std::size_t size() const { return distinct ? tuples.size() : triples.size(); }
};

TransformationResult eval_transformation(const TransformationExpr& t,
                                         const Dataset& d,
                                         const EvaluationContext& ctx);

std::uint64_t eval_action(const ActionExpr& a, const Dataset& d,
                          const EvaluationContext& ctx,
                          std::uint64_t* rule_evals = nullptr);

struct MetricValue {
  double value = 0.0;
  std::set<MetricFlag> flags;
  // Action counts labeled a1, a2, ... in left-to-right AST order.
  std::vector<std::pair<std::string, std::uint64_t>> action_counts;
  std::uint64_t rule_evaluations = 0;
};

// Arithmetic layer shared by the sequential and the partition-parallel
// evaluators: action values come from the provider, so both paths combine
// identical integers identically.
using ActionCountProvider = std::function<std::uint64_t(const ActionExpr&)>;
MetricValue combine_metric(const MetricExpr& m, const ActionCountProvider& provider);

// Single-pass sequential evaluation (one partition).
MetricValue eval_metric(const MetricExpr& m, const Dataset& d,
                        const EvaluationContext& ctx);

}  // namespace rdfqa
