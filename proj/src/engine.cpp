#include "rdfqa/engine.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <thread>

namespace rdfqa {

std::string_view to_string(EngineMode mode) {
  return mode == EngineMode::PerMetric ? "per-metric" : "shared-scan";
}

PartitionedDataset partition(const Dataset& d, std::size_t p) {
  PartitionedDataset pd;
  pd.source = &d;
  std::size_t n = d.size();
  if (p < 1) p = 1;
  if (n > 0 && p > n) p = n;
  if (n == 0) {
    pd.partitions.emplace_back(d.triples.data(), std::size_t{0});
    return pd;
  }
  std::size_t base = n / p;
  std::size_t rem = n % p;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < p; ++i) {
    std::size_t len = base + (i < rem ? 1 : 0);
    pd.partitions.emplace_back(d.triples.data() + offset, len);
    offset += len;
  }
  return pd;
}

namespace {

// Each partition is processed by exactly one worker; workers pull the next
// unprocessed partition index. Results land in per-partition slots, so the
// fold over partitions is deterministic regardless of completion order.
void run_partitions(std::size_t nparts, std::size_t workers,
                    const std::function<void(std::size_t)>& body) {
  if (workers == 0) workers = nparts;
  workers = std::min(workers, nparts);
  if (workers <= 1) {
    for (std::size_t i = 0; i < nparts; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= nparts) return;
        body(i);
      }
    });
  }
  for (std::thread& t : pool) t.join();
}

std::uint64_t count_set_mode(const TransformationExpr& t,
                             const PartitionedDataset& pd,
                             const EvaluationContext& ctx, std::size_t workers,
                             std::uint64_t* rule_evals) {
  std::vector<SetLeaf> leaves = collect_set_leaves(t);
  std::size_t nparts = pd.partition_count();
  std::vector<std::vector<KeySet>> part_sets(nparts,
                                             std::vector<KeySet>(leaves.size()));
  std::vector<std::uint64_t> part_rules(nparts, 0);
  run_partitions(nparts, workers, [&](std::size_t i) {
    std::vector<KeySet>& sets = part_sets[i];
    std::uint64_t local_rules = 0;
    for (const Triple& triple : pd.partitions[i])
      for (std::size_t li = 0; li < leaves.size(); ++li)
        if (leaves[li].condition(triple, ctx, &local_rules))
          sets[li].insert(leaves[li].key(triple));
    part_rules[i] = local_rules;
  });

  std::vector<std::pair<const TransformationExpr*, KeySet>> merged;
  merged.reserve(leaves.size());
  for (std::size_t li = 0; li < leaves.size(); ++li) {
    KeySet all;
    for (std::size_t i = 0; i < nparts; ++i) all.merge(part_sets[i][li]);
    merged.emplace_back(leaves[li].node, std::move(all));
  }
  if (rule_evals)
    for (std::uint64_t r : part_rules) *rule_evals += r;
  return eval_set_tree(t, merged).size();
}

}  // namespace

std::uint64_t evaluate_count_parallel(const TransformationExpr& t,
                                      const PartitionedDataset& pd,
                                      const EvaluationContext& ctx,
                                      std::size_t workers,
                                      std::uint64_t* rule_evals) {
  if (transformation_is_set_mode(t))
    return count_set_mode(t, pd, ctx, workers, rule_evals);

  std::size_t nparts = pd.partition_count();
  std::vector<std::uint64_t> counts(nparts, 0);
  std::vector<std::uint64_t> rules(nparts, 0);
  run_partitions(nparts, workers, [&](std::size_t i) {
    std::uint64_t local = 0;
    std::uint64_t local_rules = 0;
    for (const Triple& triple : pd.partitions[i])
      if (transformation_matches(t, triple, ctx, &local_rules)) ++local;
    counts[i] = local;
    rules[i] = local_rules;
  });
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < nparts; ++i) {
    total += counts[i];
    if (rule_evals) *rule_evals += rules[i];
  }
  return total;
}

namespace {

// Typed literals whose datatype has no registered validator. Reported on
// metrics that inspect datatypes, since those literals are excluded from
// their counts.
std::uint64_t count_unknown_datatype_literals(const PartitionedDataset& pd,
                                              const EvaluationContext& ctx,
                                              std::size_t workers) {
  std::size_t nparts = pd.partition_count();
  std::vector<std::uint64_t> counts(nparts, 0);
  run_partitions(nparts, workers, [&](std::size_t i) {
    std::uint64_t local = 0;
    for (const Triple& triple : pd.partitions[i]) {
      const Term& o = triple.object;
      if (o.is_literal() && ctx.datatype_validators.find(o.datatype()) ==
                                ctx.datatype_validators.end())
        ++local;
    }
    counts[i] = local;
  });
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  return total;
}

void finish_result(MetricResult& r, const NamedPlan& plan, MetricValue&& v,
                   std::uint64_t unknown_datatypes, bool uses_datatype_rules) {
  r.value = v.value;
  r.action_counts = std::move(v.action_counts);
  r.flags = std::move(v.flags);
  r.rule_evaluations = v.rule_evaluations;
  if (plan.definition) {
    r.value_kind = plan.definition->value_kind;
    if (plan.definition->value_kind == ValueKind::Ratio && r.value > 1.0)
      r.flags.insert(MetricFlag::RatioAboveOne);
  }
  if (uses_datatype_rules && unknown_datatypes > 0) {
    r.flags.insert(MetricFlag::UnknownDatatypesSkipped);
    r.unknown_datatype_literals = unknown_datatypes;
  }
}

struct SharedAction {
  const ActionExpr* action = nullptr;
  bool set_mode = false;
  std::vector<SetLeaf> leaves;  // set mode only
  std::uint64_t count = 0;
  std::uint64_t rule_evals = 0;
};

// One pass over each partition evaluating every requested action at once.
void run_shared_scan(std::vector<SharedAction>& actions,
                     const PartitionedDataset& pd,
                     const EvaluationContext& ctx, std::size_t workers) {
  std::size_t nparts = pd.partition_count();
  std::size_t nactions = actions.size();

  struct PartSlot {
    std::vector<std::uint64_t> counts;
    std::vector<std::uint64_t> rules;
    std::vector<std::vector<KeySet>> leaf_sets;
  };
  std::vector<PartSlot> slots(nparts);
  run_partitions(nparts, workers, [&](std::size_t i) {
    PartSlot& slot = slots[i];
    slot.counts.assign(nactions, 0);
    slot.rules.assign(nactions, 0);
    slot.leaf_sets.resize(nactions);
    for (std::size_t ai = 0; ai < nactions; ++ai)
      slot.leaf_sets[ai].resize(actions[ai].leaves.size());
    for (const Triple& triple : pd.partitions[i]) {
      for (std::size_t ai = 0; ai < nactions; ++ai) {
        SharedAction& sa = actions[ai];
        if (sa.action->kind == ActionExpr::Kind::CountAllTriples) continue;
        if (!sa.set_mode) {
          if (transformation_matches(*sa.action->transformation, triple, ctx,
                                     &slot.rules[ai]))
            ++slot.counts[ai];
        } else {
          for (std::size_t li = 0; li < sa.leaves.size(); ++li)
            if (sa.leaves[li].condition(triple, ctx, &slot.rules[ai]))
              slot.leaf_sets[ai][li].insert(sa.leaves[li].key(triple));
        }
      }
    }
  });

  for (std::size_t ai = 0; ai < nactions; ++ai) {
    SharedAction& sa = actions[ai];
    if (sa.action->kind == ActionExpr::Kind::CountAllTriples) {
      sa.count = pd.source->size();
      continue;
    }
    for (std::size_t i = 0; i < nparts; ++i) sa.rule_evals += slots[i].rules[ai];
    if (!sa.set_mode) {
      for (std::size_t i = 0; i < nparts; ++i) sa.count += slots[i].counts[ai];
    } else {
      std::vector<std::pair<const TransformationExpr*, KeySet>> merged;
      merged.reserve(sa.leaves.size());
      for (std::size_t li = 0; li < sa.leaves.size(); ++li) {
        KeySet all;
        for (std::size_t i = 0; i < nparts; ++i)
          all.merge(slots[i].leaf_sets[ai][li]);
        merged.emplace_back(sa.leaves[li].node, std::move(all));
      }
      sa.count = eval_set_tree(*sa.action->transformation, merged).size();
    }
  }
}

}  // namespace

AssessmentOutcome assess(const std::vector<NamedPlan>& plans, const Dataset& d,
                         const EvaluationContext& ctx,
                         const AssessOptions& options) {
  AssessmentOutcome outcome;
  if (plans.empty()) {
    outcome.config_errors.push_back("no metrics requested");
    return outcome;
  }
  for (const NamedPlan& plan : plans) {
    if (!plan.expr) {
      outcome.config_errors.push_back("metric '" + plan.id + "' has no plan");
      continue;
    }
    for (const std::string& e : validate_config_requirements(*plan.expr, ctx))
      outcome.config_errors.push_back("metric '" + plan.id + "': " + e);
  }
  if (!outcome.ok()) return outcome;

  std::size_t nparts =
      options.partitions > 0 ? options.partitions : std::max<std::size_t>(1, options.workers);
  PartitionedDataset pd = partition(d, nparts);

  // Plan errors are isolated per metric; the remaining metrics still run.
  std::vector<const NamedPlan*> runnable;
  for (const NamedPlan& plan : plans) {
    MetricResult r;
    r.id = plan.id;
    r.dataset_origin = d.origin;
    std::vector<std::string> errs = validate_plan(*plan.expr);
    if (!errs.empty()) {
      r.error = errs.front();
      for (std::size_t i = 1; i < errs.size(); ++i) r.error += "; " + errs[i];
    } else {
      runnable.push_back(&plan);
    }
    outcome.results.push_back(std::move(r));
  }

  bool any_datatype_rules = false;
  for (const NamedPlan* plan : runnable)
    if (plan_uses_datatype_rules(*plan->expr)) any_datatype_rules = true;
  std::uint64_t unknown_datatypes =
      any_datatype_rules
          ? count_unknown_datatype_literals(pd, ctx, options.workers)
          : 0;

  auto result_for = [&](const NamedPlan& plan) -> MetricResult& {
    for (MetricResult& r : outcome.results)
      if (r.id == plan.id && !r.failed() && r.action_counts.empty()) return r;
    return outcome.results.front();  // unreachable for well-formed input
  };

  if (options.mode == EngineMode::PerMetric) {
    for (const NamedPlan* plan : runnable) {
      MetricResult& r = result_for(*plan);
      auto t0 = std::chrono::steady_clock::now();
      std::uint64_t rule_evals = 0;
      MetricValue v = combine_metric(*plan->expr, [&](const ActionExpr& a) {
        if (a.kind == ActionExpr::Kind::CountAllTriples) return static_cast<std::uint64_t>(d.size());
        return evaluate_count_parallel(*a.transformation, pd, ctx,
                                       options.workers, &rule_evals);
      });
      v.rule_evaluations = rule_evals;
      auto t1 = std::chrono::steady_clock::now();
      finish_result(r, *plan, std::move(v), unknown_datatypes,
                    plan_uses_datatype_rules(*plan->expr));
      r.wall_time = t1 - t0;
    }
    return outcome;
  }

  // Shared scan: every runnable plan's actions accumulate in one pass.
  std::vector<SharedAction> actions;
  std::vector<std::vector<std::size_t>> plan_action_indices(runnable.size());
  for (std::size_t pi = 0; pi < runnable.size(); ++pi) {
    for (const ActionExpr* a : collect_actions(*runnable[pi]->expr)) {
      SharedAction sa;
      sa.action = a;
      if (a->kind == ActionExpr::Kind::Count) {
        sa.set_mode = transformation_is_set_mode(*a->transformation);
        if (sa.set_mode) sa.leaves = collect_set_leaves(*a->transformation);
      }
      plan_action_indices[pi].push_back(actions.size());
      actions.push_back(std::move(sa));
    }
  }
  auto t0 = std::chrono::steady_clock::now();
  run_shared_scan(actions, pd, ctx, options.workers);
  auto t1 = std::chrono::steady_clock::now();
  for (std::size_t pi = 0; pi < runnable.size(); ++pi) {
    const NamedPlan& plan = *runnable[pi];
    MetricResult& r = result_for(plan);
    std::size_t cursor = 0;
    const std::vector<std::size_t>& indices = plan_action_indices[pi];
    std::uint64_t rule_evals = 0;
    MetricValue v = combine_metric(*plan.expr, [&](const ActionExpr&) {
      const SharedAction& sa = actions[indices[cursor++]];
      rule_evals += sa.rule_evals;
      return sa.count;
    });
    v.rule_evaluations = rule_evals;
    finish_result(r, plan, std::move(v), unknown_datatypes,
                  plan_uses_datatype_rules(*plan.expr));
    r.wall_time = t1 - t0;  // one pass computed every metric
  }
  return outcome;
}

}  // namespace rdfqa
