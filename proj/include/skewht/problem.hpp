#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "skewht/ideals.hpp"

namespace skewht {

/// Batch input: ring data, q assignment, ordered generator strings, and an
/// ordering directive applied before certification.
struct ProblemFile {
  SkewContext ctx;
  std::vector<Monomial> generators;
  enum class Order { Given, Revlex, Search } order = Order::Given;
  std::optional<QSpecialization> qspec;  // absent means symbolic

  MonomialIdeal ideal() const { return MonomialIdeal(ctx, generators); }
};

ProblemFile problem_from_json(const nlohmann::json& j);
ProblemFile load_problem(const std::string& path);

/// Apply the ordering directive; Search throws when no order works.
std::vector<Monomial> apply_order(const ProblemFile& p);

/// Paper-scale worked example embedded as a hard regression gate: the
/// quartet ideal (x1x2, x1x3, x2x3, x2x4) in four variables.
struct GoldenReport {
  bool ok = true;
  std::vector<std::string> lines;       // one line per checked fact
  std::vector<std::string> mismatches;  // empty on success
};

GoldenReport golden_example();

}  // namespace skewht
