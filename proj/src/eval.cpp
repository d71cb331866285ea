#include "rdfqa/eval.hpp"

#include <algorithm>

namespace rdfqa {

std::string_view to_string(MetricFlag flag) {
  switch (flag) {
    case MetricFlag::ZeroDenominator: return "zero-denominator";
    case MetricFlag::RatioAboveOne: return "ratio-above-one";
    case MetricFlag::UnknownDatatypesSkipped: return "unknown-datatypes-skipped";
  }
  return "unknown";
}

namespace {

const Term& term_at(const Triple& t, Position p) {
  switch (p) {
    case Position::Subject: return t.subject;
    case Position::Predicate: return t.predicate;
    case Position::Object: return t.object;
  }
  return t.subject;
}

void collect_positions(const FilterExpr* f, std::vector<Position>& out) {
  if (!f) return;
  switch (f->kind) {
    case FilterExpr::Kind::Pos:
      out.push_back(f->pos);
      break;
    case FilterExpr::Kind::Distinct:
      collect_positions(f->left.get(), out);
      break;
    case FilterExpr::Kind::And:
    case FilterExpr::Kind::Or:
      collect_positions(f->left.get(), out);
      collect_positions(f->right.get(), out);
      break;
  }
}

std::vector<Position> projection_of(const FilterExpr* f) {
  std::vector<Position> positions;
  collect_positions(f, positions);
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()),
                  positions.end());
  return positions;
}

bool position_predicate(RuleKind kind, const Term& term,
                        const EvaluationContext& ctx) {
  switch (kind) {
    case RuleKind::IsUri:
    case RuleKind::IsIri:
      return term.is_iri();
    case RuleKind::IsInternal:
      return term.is_iri() && ctx.is_internal_iri(term.value());
    case RuleKind::IsExternal:
      return term.is_iri() && !ctx.is_internal_iri(term.value());
    case RuleKind::IsLiteral:
      return term.is_literal();
    case RuleKind::IsLabeled:
      return term.is_iri() && ctx.label_predicates.contains(term.value());
    case RuleKind::HasLicenceAssociated:
      return term.is_iri() && ctx.license_predicates.contains(term.value());
    case RuleKind::HasLicenceIndications:
      return term.is_iri() &&
             ctx.license_indication_predicates.contains(term.value());
    case RuleKind::IsLicenseStatement:
      return term.is_literal() && ctx.matches_license_phrase(term.value());
    case RuleKind::GetDatatype:
      return term.is_literal() &&
             ctx.datatype_validators.find(term.datatype()) !=
                 ctx.datatype_validators.end();
    case RuleKind::LexicalFormCompatibleWithDatatype: {
      if (!term.is_literal()) return false;
      auto it = ctx.datatype_validators.find(term.datatype());
      if (it == ctx.datatype_validators.end()) return false;
      return it->second(term.value());
    }
    default:
      return false;
  }
}

bool filter_predicate(RuleKind kind, const FilterExpr* f, const Triple& triple,
                      const EvaluationContext& ctx) {
  switch (f->kind) {
    case FilterExpr::Kind::Pos:
      return position_predicate(kind, term_at(triple, f->pos), ctx);
    case FilterExpr::Kind::Distinct:
      return filter_predicate(kind, f->left.get(), triple, ctx);
    case FilterExpr::Kind::And:
      return filter_predicate(kind, f->left.get(), triple, ctx) &&
             filter_predicate(kind, f->right.get(), triple, ctx);
    case FilterExpr::Kind::Or:
      return filter_predicate(kind, f->left.get(), triple, ctx) ||
             filter_predicate(kind, f->right.get(), triple, ctx);
  }
  return false;
}

}  // namespace

bool eval_rule(const RuleExpr& rule, const Triple& triple,
               const EvaluationContext& ctx) {
  switch (rule.kind) {
    case RuleKind::ResTooLong:
      for (Position p :
           {Position::Subject, Position::Predicate, Position::Object}) {
        const Term& term = term_at(triple, p);
        if (term.is_iri() &&
            codepoint_length(term.value()) > ctx.uri_length_threshold)
          return true;
      }
      return false;
    case RuleKind::HasType:
      // The filter argument names where the type sits; the test itself is on
      // the predicate.
      return ctx.type_predicates.contains(triple.predicate.value());
    case RuleKind::IsBroken:
    case RuleKind::HasPredicateP:
      return false;  // plan validation rejects these before evaluation
    default:
      return filter_predicate(rule.kind, rule.filter.get(), triple, ctx);
  }
}

bool transformation_matches(const TransformationExpr& t, const Triple& triple,
                            const EvaluationContext& ctx,
                            std::uint64_t* rule_evals) {
  switch (t.kind) {
    case TransformationExpr::Kind::Rule:
      if (!t.rule) return true;
      if (rule_evals) ++*rule_evals;
      return eval_rule(*t.rule, triple, ctx);
    case TransformationExpr::Kind::Intersect: {
      bool l = transformation_matches(*t.left, triple, ctx, rule_evals);
      bool r = transformation_matches(*t.right, triple, ctx, rule_evals);
      return l && r;
    }
    case TransformationExpr::Kind::Union: {
      bool l = transformation_matches(*t.left, triple, ctx, rule_evals);
      bool r = transformation_matches(*t.right, triple, ctx, rule_evals);
      return l || r;
    }
    case TransformationExpr::Kind::Distinct:
      return transformation_matches(*t.left, triple, ctx, rule_evals);
  }
  return false;
}

bool transformation_is_set_mode(const TransformationExpr& t) {
  switch (t.kind) {
    case TransformationExpr::Kind::Rule:
      return t.filter && t.filter->kind == FilterExpr::Kind::Distinct;
    case TransformationExpr::Kind::Distinct:
      return true;
    case TransformationExpr::Kind::Intersect:
    case TransformationExpr::Kind::Union:
      return transformation_is_set_mode(*t.left);  // validation ensures both
  }
  return false;
}

bool SetLeaf::condition(const Triple& triple, const EvaluationContext& ctx,
                        std::uint64_t* rule_evals) const {
  if (node->kind == TransformationExpr::Kind::Distinct)
    return transformation_matches(*node->left, triple, ctx, rule_evals);
  if (!node->rule) return true;
  if (rule_evals) ++*rule_evals;
  return eval_rule(*node->rule, triple, ctx);
}

std::string SetLeaf::key(const Triple& triple) const {
  std::string k;
  for (Position p : projection) {
    k += serialize_term(term_at(triple, p));
    k += '\x1f';  // cannot occur: the serializer escapes control characters
  }
  return k;
}

namespace {

void collect_set_leaves_into(const TransformationExpr& t,
                             std::vector<SetLeaf>& out) {
  switch (t.kind) {
    case TransformationExpr::Kind::Rule: {
      SetLeaf leaf;
      leaf.node = &t;
      leaf.projection = projection_of(t.filter.get());
      out.push_back(std::move(leaf));
      break;
    }
    case TransformationExpr::Kind::Distinct: {
      SetLeaf leaf;
      leaf.node = &t;
      leaf.projection = {Position::Subject, Position::Predicate,
                         Position::Object};
      out.push_back(std::move(leaf));
      break;
    }
    case TransformationExpr::Kind::Intersect:
    case TransformationExpr::Kind::Union:
      collect_set_leaves_into(*t.left, out);
      collect_set_leaves_into(*t.right, out);
      break;
  }
}

}  // namespace

std::vector<SetLeaf> collect_set_leaves(const TransformationExpr& t) {
  std::vector<SetLeaf> out;
  collect_set_leaves_into(t, out);
  return out;
}

namespace {

// Leaves are consumed in DFS order, matching collect_set_leaves; a shared
// subtree (e.g. Intersect(t, t)) therefore picks up its own accumulated set.
KeySet eval_set_tree_at(
    const TransformationExpr& t,
    std::vector<std::pair<const TransformationExpr*, KeySet>>& leaves,
    std::size_t& cursor) {
  switch (t.kind) {
    case TransformationExpr::Kind::Rule:
    case TransformationExpr::Kind::Distinct:
      return std::move(leaves[cursor++].second);
    case TransformationExpr::Kind::Intersect: {
      KeySet l = eval_set_tree_at(*t.left, leaves, cursor);
      KeySet r = eval_set_tree_at(*t.right, leaves, cursor);
      const KeySet& small = l.size() <= r.size() ? l : r;
      const KeySet& large = l.size() <= r.size() ? r : l;
      KeySet out;
      for (const std::string& k : small)
        if (large.contains(k)) out.insert(k);
      return out;
    }
    case TransformationExpr::Kind::Union: {
      KeySet l = eval_set_tree_at(*t.left, leaves, cursor);
      KeySet r = eval_set_tree_at(*t.right, leaves, cursor);
      if (r.size() > l.size()) std::swap(l, r);
      for (const std::string& k : r) l.insert(k);
      return l;
    }
  }
  return {};
}

}  // namespace

KeySet eval_set_tree(
    const TransformationExpr& t,
    std::vector<std::pair<const TransformationExpr*, KeySet>>& leaves) {
  std::size_t cursor = 0;
  return eval_set_tree_at(t, leaves, cursor);
}

// --- validation -------------------------------------------------------------

namespace {

void validate_filter(const FilterExpr* f, bool distinct_allowed,
                     std::vector<std::string>& errs) {
  if (!f) return;
  switch (f->kind) {
    case FilterExpr::Kind::Pos:
      return;
    case FilterExpr::Kind::Distinct:
      if (!distinct_allowed)
        errs.push_back("distinct is only allowed at the top level of a filter");
      validate_filter(f->left.get(), false, errs);
      return;
    case FilterExpr::Kind::And:
    case FilterExpr::Kind::Or:
      validate_filter(f->left.get(), false, errs);
      validate_filter(f->right.get(), false, errs);
      return;
  }
}

void validate_rule(const RuleExpr& r, std::vector<std::string>& errs) {
  switch (r.kind) {
    case RuleKind::IsBroken:
      errs.push_back("network rule 'isBroken' is suspended and cannot be planned");
      return;
    case RuleKind::HasPredicateP:
      errs.push_back("'hasPredicateP' has no evaluation semantics and cannot be planned");
      return;
    case RuleKind::ResTooLong:
      if (r.filter) errs.push_back("resTooLong takes no filter argument");
      return;
    default:
      if (!r.filter) {
        errs.push_back(std::string("rule '") + std::string(rule_name(r.kind)) +
                       "' requires a filter argument");
        return;
      }
      validate_filter(r.filter.get(), true, errs);
  }
}

// Projection signature of a set-mode transformation, for operand matching.
std::vector<Position> set_projection(const TransformationExpr& t) {
  switch (t.kind) {
    case TransformationExpr::Kind::Rule:
      return projection_of(t.filter.get());
    case TransformationExpr::Kind::Distinct:
      return {Position::Subject, Position::Predicate, Position::Object};
    case TransformationExpr::Kind::Intersect:
    case TransformationExpr::Kind::Union:
      return set_projection(*t.left);
  }
  return {};
}

void validate_transformation(const TransformationExpr& t,
                             std::vector<std::string>& errs) {
  switch (t.kind) {
    case TransformationExpr::Kind::Rule:
      if (t.rule) {
        validate_rule(*t.rule, errs);
      } else if (t.filter) {
        validate_filter(t.filter.get(), true, errs);
        if (t.filter->kind != FilterExpr::Kind::Distinct)
          errs.push_back(
              "a bare filter selection must be a distinct projection");
      } else {
        errs.push_back("empty transformation node");
      }
      return;
    case TransformationExpr::Kind::Distinct:
      validate_transformation(*t.left, errs);
      if (transformation_is_set_mode(*t.left))
        errs.push_back("nested distinct has no defined counting semantics");
      return;
    case TransformationExpr::Kind::Intersect:
    case TransformationExpr::Kind::Union: {
      validate_transformation(*t.left, errs);
      validate_transformation(*t.right, errs);
      bool lset = transformation_is_set_mode(*t.left);
      bool rset = transformation_is_set_mode(*t.right);
      if (lset != rset) {
        errs.push_back(
            "set operation mixes a distinct projection with a statement bag");
      } else if (lset && set_projection(*t.left) != set_projection(*t.right)) {
        errs.push_back(
            "set operation combines distinct projections over different positions");
      }
      return;
    }
  }
}

void for_each_rule(const TransformationExpr* t,
                   const std::function<void(const RuleExpr&)>& fn) {
  if (!t) return;
  switch (t->kind) {
    case TransformationExpr::Kind::Rule:
      if (t->rule) fn(*t->rule);
      return;
    case TransformationExpr::Kind::Distinct:
      for_each_rule(t->left.get(), fn);
      return;
    case TransformationExpr::Kind::Intersect:
    case TransformationExpr::Kind::Union:
      for_each_rule(t->left.get(), fn);
      for_each_rule(t->right.get(), fn);
      return;
  }
}

void for_each_rule(const MetricExpr& m,
                   const std::function<void(const RuleExpr&)>& fn) {
  for (const ActionExpr* a : collect_actions(m))
    if (a->kind == ActionExpr::Kind::Count)
      for_each_rule(a->transformation.get(), fn);
}

}  // namespace

std::vector<std::string> validate_plan(const MetricExpr& m) {
  std::vector<std::string> errs;
  for (const ActionExpr* a : collect_actions(m)) {
    if (a->kind == ActionExpr::Kind::CountAllTriples) continue;
    if (!a->transformation) {
      errs.push_back("count action without a transformation");
      continue;
    }
    validate_transformation(*a->transformation, errs);
  }
  return errs;
}

std::vector<std::string> validate_config_requirements(
    const MetricExpr& m, const EvaluationContext& ctx) {
  std::vector<std::string> errs;
  bool needs_prefixes = false;
  bool uses_res_too_long = false;
  for_each_rule(m, [&](const RuleExpr& r) {
    if (r.kind == RuleKind::IsInternal || r.kind == RuleKind::IsExternal)
      needs_prefixes = true;
    if (r.kind == RuleKind::ResTooLong) uses_res_too_long = true;
  });
  if (needs_prefixes && ctx.internal_prefixes.empty())
    errs.push_back(
        "metric tests internality but no internal namespace prefixes are configured");
  if (uses_res_too_long && ctx.uri_length_threshold == 0)
    errs.push_back("uri_length_threshold must be positive");
  return errs;
}

bool plan_uses_datatype_rules(const MetricExpr& m) {
  bool uses = false;
  for_each_rule(m, [&](const RuleExpr& r) {
    if (r.kind == RuleKind::GetDatatype ||
        r.kind == RuleKind::LexicalFormCompatibleWithDatatype)
      uses = true;
  });
  return uses;
}

// --- materializing evaluation ------------------------------------------------

TransformationResult eval_transformation(const TransformationExpr& t,
                                         const Dataset& d,
                                         const EvaluationContext& ctx) {
  TransformationResult result;
  if (!transformation_is_set_mode(t)) {
    for (const Triple& triple : d.triples)
      if (transformation_matches(t, triple, ctx, nullptr))
        result.triples.push_back(triple);
    return result;
  }

  result.distinct = true;
  std::vector<SetLeaf> leaves = collect_set_leaves(t);
  std::vector<std::pair<const TransformationExpr*, KeySet>> leaf_sets;
  leaf_sets.reserve(leaves.size());
  for (const SetLeaf& leaf : leaves) leaf_sets.emplace_back(leaf.node, KeySet{});
  // Remember one representative tuple per key so tuples can be materialized.
  std::vector<std::pair<std::string, std::vector<Term>>> reps;
  for (const Triple& triple : d.triples) {
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      if (!leaves[i].condition(triple, ctx, nullptr)) continue;
      std::string key = leaves[i].key(triple);
      if (leaf_sets[i].second.insert(key).second) {
        std::vector<Term> tuple;
        for (Position p : leaves[i].projection)
          tuple.push_back(term_at(triple, p));
        reps.emplace_back(std::move(key), std::move(tuple));
      }
    }
  }
  KeySet final_keys = eval_set_tree(t, leaf_sets);
  std::sort(reps.begin(), reps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string last_key;
  for (auto& [key, tuple] : reps) {
    if (!final_keys.contains(key) || key == last_key) continue;
    result.tuples.push_back(std::move(tuple));
    last_key = key;
  }
  return result;
}

std::uint64_t eval_action(const ActionExpr& a, const Dataset& d,
                          const EvaluationContext& ctx,
                          std::uint64_t* rule_evals) {
  if (a.kind == ActionExpr::Kind::CountAllTriples) return d.size();
  const TransformationExpr& t = *a.transformation;
  if (!transformation_is_set_mode(t)) {
    std::uint64_t n = 0;
    for (const Triple& triple : d.triples)
      if (transformation_matches(t, triple, ctx, rule_evals)) ++n;
    return n;
  }
  std::vector<SetLeaf> leaves = collect_set_leaves(t);
  std::vector<std::pair<const TransformationExpr*, KeySet>> leaf_sets;
  leaf_sets.reserve(leaves.size());
  for (const SetLeaf& leaf : leaves) leaf_sets.emplace_back(leaf.node, KeySet{});
  for (const Triple& triple : d.triples)
    for (std::size_t i = 0; i < leaves.size(); ++i)
      if (leaves[i].condition(triple, ctx, rule_evals))
        leaf_sets[i].second.insert(leaves[i].key(triple));
  return eval_set_tree(t, leaf_sets).size();
}

// --- metric arithmetic --------------------------------------------------------

namespace {

double combine_node(const MetricExpr& m, const ActionCountProvider& provider,
                    MetricValue& out, std::size_t& action_index) {
  switch (m.kind) {
    case MetricExpr::Kind::Action: {
      std::uint64_t count = provider(*m.action);
      ++action_index;
      out.action_counts.emplace_back("a" + std::to_string(action_index), count);
      return static_cast<double>(count);
    }
    case MetricExpr::Kind::Arith: {
      double l = combine_node(*m.left, provider, out, action_index);
      double r = combine_node(*m.right, provider, out, action_index);
      switch (m.op) {
        case ArithOp::Add: return l + r;
        case ArithOp::Sub: return l - r;
        case ArithOp::Mul: return l * r;
        case ArithOp::Div:
          if (r == 0.0) {
            out.flags.insert(MetricFlag::ZeroDenominator);
            return 0.0;
          }
          return l / r;
      }
      return 0.0;
    }
    case MetricExpr::Kind::IndicatorPositive: {
      double inner = combine_node(*m.left, provider, out, action_index);
      return inner > 0.0 ? 1.0 : 0.0;
    }
  }
  return 0.0;
}

}  // namespace

MetricValue combine_metric(const MetricExpr& m,
                           const ActionCountProvider& provider) {
  MetricValue out;
  std::size_t action_index = 0;
  out.value = combine_node(m, provider, out, action_index);
  return out;
}

MetricValue eval_metric(const MetricExpr& m, const Dataset& d,
                        const EvaluationContext& ctx) {
  std::uint64_t rule_evals = 0;
  MetricValue v = combine_metric(m, [&](const ActionExpr& a) {
    return eval_action(a, d, ctx, &rule_evals);
  });
  v.rule_evaluations = rule_evals;
  return v;
}

}  // namespace rdfqa
