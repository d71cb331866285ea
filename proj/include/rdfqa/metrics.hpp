#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rdfqa/ast.hpp"

namespace rdfqa {

enum class ValueKind { Indicator, Ratio, Count };

std::string_view to_string(ValueKind kind);

// A named, pre-built metric plan. The expr is the single source of truth:
// evaluation always goes through the generic engine, never a special-cased
// path.
struct MetricDefinition {
  std::string id;
  std::string name;
  std::string dimension;
  MetricPtr expr;
  ValueKind value_kind = ValueKind::Ratio;
  std::string dsl_text;  // canonical DSL rendering of expr
};

// The built-in catalog: L1, L2, I2, U1, RC1, SV3, CN2 in this order.
const std::vector<MetricDefinition>& builtin_metrics();

// nullptr when the id is unknown.
const MetricDefinition* find_metric(std::string_view id);

}  // namespace rdfqa
