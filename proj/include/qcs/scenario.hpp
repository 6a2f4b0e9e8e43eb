// Copyright 2026 The qcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qcs/channels.hpp"
#include "qcs/measurement.hpp"
#include "qcs/states.hpp"

namespace qcs {

/// One pipeline operation. `args` holds op-specific references (value
/// names, region labels, outcome labels); `bind` names the result.
/// condition_on_outcome binds its posterior to `bind` and, when
/// `bind_raw` is set, the projected block of the conditional as well.
struct PipelineStep {
  std::string op;
  nlohmann::json args;
  std::string bind;
  std::string bind_raw;
};

/// A state supplied up front, with its matrix given on the listed factor
/// order. kind is "density", "conditional" (with `conditioned` and the
/// `causal` flag) or "operator" (no validation beyond shape).
struct DeclaredState {
  std::string name;
  std::vector<std::string> factors;
  std::string kind;
  std::vector<std::string> conditioned;
  bool causal = false;
  ComplexMatrix matrix;
};

struct DeclaredPovm {
  std::string name;
  std::string region_label;
  std::vector<PovmElement> elements;
};

struct DeclaredChannel {
  std::string name;
  std::string in_label;
  std::string out_label;
  std::vector<ComplexMatrix> kraus;
};

/// A declarative computation: regions, initial data, and a pipeline of
/// named operations over them.
struct Scenario {
  std::string name;
  std::vector<RegionSpec> regions;
  std::vector<DeclaredState> states;
  std::vector<DeclaredPovm> povms;
  std::vector<DeclaredChannel> channels;
  std::vector<PipelineStep> pipeline;
};

using Value = std::variant<DensityOperator, ConditionalState, ChoiState,
                           LabeledOperator, CptpReport>;

struct StepRecord {
  std::size_t index = 0;
  std::string op;
  std::string bind;
  std::string note;
  std::optional<double> probability;
};

struct RunResult {
  /// Bound names in creation order.
  std::vector<std::string> order;
  std::map<std::string, Value> values;
  std::vector<StepRecord> steps;
};

/// Execute the pipeline. Structural problems (unknown names, missing
/// arguments, unknown ops) raise ParseError; mathematical precondition
/// failures raise the validation errors of the underlying operations.
RunResult run_scenario(const Scenario& scenario,
                       const Tolerances& tol = Tolerances{});

Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const Scenario& scenario);

/// The bundled demonstration: an entangled pair, one side measured by a
/// two-outcome POVM, the far side inferred from the classical record.
/// The custom-effects overload rebuilds the outcome region and the
/// per-outcome steps around the supplied effects (which must act on a
/// two-dimensional region).
Scenario build_cat_scenario();
Scenario build_cat_scenario(const std::vector<PovmElement>& elements);

/// Names the cat pipeline binds for each outcome's posterior and raw
/// projected block (outcome labels are sanitized to identifier form).
std::string cat_posterior_name(const std::string& outcome_label);
std::string cat_raw_block_name(const std::string& outcome_label);

nlohmann::json value_to_json(const Value& value);
nlohmann::json run_result_to_json(const RunResult& result);
std::string run_result_to_text(const RunResult& result, int precision);

}  // namespace qcs
