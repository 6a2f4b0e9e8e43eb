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

#include <string>
#include <variant>
#include <vector>

#include "golden_cat.hpp"
#include "qcs/errors.hpp"
#include "qcs/scenario.hpp"
#include "qcs/serialization.hpp"
#include "test_support.hpp"

using qcs::Complex;
using qcs::ComplexMatrix;
using qcs::ConditionalState;
using qcs::DensityOperator;
using qcs::LabeledOperator;
using qcs::RunResult;
using qcs::Scenario;
using qcs_test::check_close;

namespace {

const DensityOperator& density(const RunResult& r, const std::string& name) {
  REQUIRE(r.values.count(name) == 1);
  const auto* d = std::get_if<DensityOperator>(&r.values.at(name));
  REQUIRE(d != nullptr);
  return *d;
}

const ConditionalState& conditional(const RunResult& r,
                                    const std::string& name) {
  REQUIRE(r.values.count(name) == 1);
  const auto* c = std::get_if<ConditionalState>(&r.values.at(name));
  REQUIRE(c != nullptr);
  return *c;
}

const LabeledOperator& raw_operator(const RunResult& r,
                                    const std::string& name) {
  REQUIRE(r.values.count(name) == 1);
  const auto* o = std::get_if<LabeledOperator>(&r.values.at(name));
  REQUIRE(o != nullptr);
  return *o;
}

}  // namespace

TEST_CASE("the bundled scenario reproduces every stage of the inference") {
  const Scenario scenario = qcs::build_cat_scenario();
  const RunResult result = qcs::run_scenario(scenario);

  check_close(density(result, "rho_A").matrix(),
              golden_cat::maximally_mixed_2(), 1e-12);
  check_close(density(result, "rho_B").matrix(),
              golden_cat::maximally_mixed_2(), 1e-12);
  check_close(conditional(result, "cond_B_given_A").matrix(),
              golden_cat::cond_B_given_A(), 1e-12);
  check_close(conditional(result, "hybrid_Y_given_B").matrix(),
              golden_cat::hybrid_Y_given_B(), 1e-12);
  check_close(conditional(result, "cond_Y_given_A").matrix(),
              golden_cat::cond_Y_given_A(), 1e-12);
  check_close(density(result, "rho_Y").matrix(),
              golden_cat::maximally_mixed_2(), 1e-12);
  check_close(conditional(result, "cond_A_given_Y").matrix(),
              golden_cat::cond_A_given_Y(), 1e-12);
  check_close(density(result, "consistency_rho_A").matrix(),
              golden_cat::maximally_mixed_2(), 1e-12);

  check_close(density(result, "posterior_decayed").matrix(),
              golden_cat::posterior_decayed(), 1e-12);
  check_close(density(result, "posterior_not_decayed").matrix(),
              golden_cat::posterior_not_decayed(), 1e-12);
  check_close(raw_operator(result, "raw_decayed").matrix,
              golden_cat::raw_block_decayed(), 1e-12);
  check_close(raw_operator(result, "raw_not_decayed").matrix,
              golden_cat::raw_block_not_decayed(), 1e-12);

  CHECK(qcs::cat_posterior_name("not-decayed") == "posterior_not_decayed");
  CHECK(qcs::cat_raw_block_name("decayed") == "raw_decayed");

  // Declared states are bound first, then one record per pipeline step.
  REQUIRE(!result.order.empty());
  CHECK(result.order.front() == "joint");
  CHECK(result.steps.size() == scenario.pipeline.size());
  bool saw_probability = false;
  for (const qcs::StepRecord& s : result.steps) {
    if (s.op == "condition_on_outcome") {
      REQUIRE(s.probability.has_value());
      CHECK(*s.probability == doctest::Approx(0.5));
      saw_probability = true;
    }
  }
  CHECK(saw_probability);

  // Both causal directions carry the right tag.
  CHECK(conditional(result, "cond_B_given_A").tag() ==
        qcs::CausalTag::Acausal);
  CHECK(conditional(result, "hybrid_Y_given_B").tag() ==
        qcs::CausalTag::Causal);
  CHECK(conditional(result, "cond_Y_given_A").tag() ==
        qcs::CausalTag::Acausal);
}

TEST_CASE("an unsharp readout yields the classically mixed posteriors") {
  std::vector<qcs::PovmElement> elements;
  elements.push_back(
      {"low",
       ComplexMatrix::diagonal({Complex(0.7, 0.0), Complex(0.2, 0.0)})});
  elements.push_back(
      {"high",
       ComplexMatrix::diagonal({Complex(0.3, 0.0), Complex(0.8, 0.0)})});
  const RunResult result =
      qcs::run_scenario(qcs::build_cat_scenario(elements));

  // p(y|A): dead correlates with the decayed arm, alive with the excited
  // arm, so p(low|dead) = 0.2 and p(low|alive) = 0.7.
  check_close(conditional(result, "cond_Y_given_A").matrix(),
              ComplexMatrix::diagonal({Complex(0.2, 0.0), Complex(0.8, 0.0),
                                       Complex(0.7, 0.0), Complex(0.3, 0.0)}),
              1e-12);
  check_close(density(result, "rho_Y").matrix(),
              ComplexMatrix::diagonal({Complex(0.45, 0.0),
                                       Complex(0.55, 0.0)}),
              1e-12);

  // Bayes: p(dead|low) = 0.2 * 0.5 / 0.45.
  check_close(density(result, "posterior_low").matrix(),
              ComplexMatrix::diagonal(
                  {Complex(0.1 / 0.45, 0.0), Complex(0.35 / 0.45, 0.0)}),
              1e-12);
  check_close(density(result, "posterior_high").matrix(),
              ComplexMatrix::diagonal(
                  {Complex(0.4 / 0.55, 0.0), Complex(0.15 / 0.55, 0.0)}),
              1e-12);
  check_close(density(result, "consistency_rho_A").matrix(),
              golden_cat::maximally_mixed_2(), 1e-12);

  for (const qcs::StepRecord& s : result.steps) {
    if (s.op != "condition_on_outcome") continue;
    REQUIRE(s.probability.has_value());
    CHECK(*s.probability ==
          doctest::Approx(s.bind == "posterior_low" ? 0.45 : 0.55));
  }
}

TEST_CASE("scenarios survive a json round trip") {
  const Scenario scenario = qcs::build_cat_scenario();
  const nlohmann::json j = qcs::scenario_to_json(scenario);
  const Scenario reparsed = qcs::scenario_from_json(j);
  CHECK(qcs::scenario_to_json(reparsed) == j);

  const RunResult result = qcs::run_scenario(reparsed);
  check_close(density(result, "posterior_decayed").matrix(),
              golden_cat::posterior_decayed(), 1e-12);
  check_close(conditional(result, "cond_A_given_Y").matrix(),
              golden_cat::cond_A_given_Y(), 1e-12);
}

TEST_CASE("the shipped scenario file matches the built-in pipeline") {
  const nlohmann::json j =
      qcs::load_json_file(std::string(QCS_SCENARIO_DIR) + "/cat.json");
  const Scenario scenario = qcs::scenario_from_json(j);
  CHECK(scenario.name == qcs::build_cat_scenario().name);

  const RunResult from_file = qcs::run_scenario(scenario);
  const RunResult built_in = qcs::run_scenario(qcs::build_cat_scenario());
  REQUIRE(from_file.order == built_in.order);
  check_close(density(from_file, "posterior_decayed").matrix(),
              golden_cat::posterior_decayed(), 1e-12);
  check_close(density(from_file, "rho_Y").matrix(),
              density(built_in, "rho_Y").matrix(), 1e-15);
}

TEST_CASE("declared conditionals and operators participate in pipelines") {
  Scenario s;
  s.name = "declared-inputs";
  s.regions = {qcs_test::quantum("A", 2), qcs_test::quantum("B", 2)};

  ComplexMatrix swap(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = Complex(1.0, 0.0);
  s.states.push_back(qcs::DeclaredState{
      "wire", {"A", "B"}, "conditional", {"A"}, true, swap});
  s.states.push_back(qcs::DeclaredState{
      "rho", {"A"},
      "density", {}, false,
      ComplexMatrix::diagonal({Complex(0.25, 0.0), Complex(0.75, 0.0)})});

  qcs::PipelineStep step;
  step.op = "propagate";
  step.args = {{"conditional", "wire"}, {"input", "rho"}};
  step.bind = "pushed";
  s.pipeline.push_back(step);

  const RunResult result = qcs::run_scenario(s);
  // The swap conditional is the identity evolution from A to B.
  check_close(density(result, "pushed").matrix(),
              ComplexMatrix::diagonal({Complex(0.25, 0.0),
                                       Complex(0.75, 0.0)}),
              1e-12);
  CHECK(conditional(result, "wire").tag() == qcs::CausalTag::Causal);
}

TEST_CASE("structural mistakes raise parse errors") {
  Scenario s;
  s.name = "broken";
  s.regions = {qcs_test::quantum("A", 2)};
  s.states.push_back(qcs::DeclaredState{
      "rho", {"A"}, "density", {}, false, golden_cat::maximally_mixed_2()});

  SUBCASE("unknown op") {
    qcs::PipelineStep step;
    step.op = "teleport";
    step.bind = "x";
    s.pipeline.push_back(step);
    CHECK_THROWS_AS(qcs::run_scenario(s), qcs::ParseError);
  }
  SUBCASE("unknown value") {
    qcs::PipelineStep step;
    step.op = "marginalize";
    step.args = {{"state", "ghost"}, {"keep", nlohmann::json::array({"A"})}};
    step.bind = "x";
    s.pipeline.push_back(step);
    CHECK_THROWS_AS(qcs::run_scenario(s), qcs::ParseError);
  }
  SUBCASE("missing argument") {
    qcs::PipelineStep step;
    step.op = "marginalize";
    step.args = {{"state", "rho"}};
    step.bind = "x";
    s.pipeline.push_back(step);
    CHECK_THROWS_AS(qcs::run_scenario(s), qcs::ParseError);
  }
  SUBCASE("duplicate bind") {
    qcs::PipelineStep step;
    step.op = "marginalize";
    step.args = {{"state", "rho"}, {"keep", nlohmann::json::array({"A"})}};
    step.bind = "rho";
    s.pipeline.push_back(step);
    CHECK_THROWS_AS(qcs::run_scenario(s), qcs::ParseError);
  }
  SUBCASE("type misuse is a validation error") {
    qcs::PipelineStep step;
    step.op = "propagate";
    step.args = {{"conditional", "rho"}, {"input", "rho"}};
    step.bind = "x";
    s.pipeline.push_back(step);
    CHECK_THROWS_AS(qcs::run_scenario(s), qcs::ValidationError);
  }
}

TEST_CASE("malformed scenario json is rejected") {
  CHECK_THROWS_AS(qcs::scenario_from_json(nlohmann::json::array()),
                  qcs::ParseError);

  nlohmann::json missing_op = {
      {"name", "x"},
      {"regions", nlohmann::json::array()},
      {"pipeline", nlohmann::json::array({{{"bind", "y"}}})}};
  CHECK_THROWS_AS(qcs::scenario_from_json(missing_op), qcs::ParseError);

  CHECK_THROWS_AS(qcs::parse_json_text("{not json"), qcs::ParseError);
  CHECK_THROWS_AS(qcs::load_json_file("/nonexistent/path.json"),
                  qcs::ParseError);
}

TEST_CASE("run results serialize with one record per step") {
  const RunResult result = qcs::run_scenario(qcs::build_cat_scenario());
  const nlohmann::json j = qcs::run_result_to_json(result);
  REQUIRE(j.contains("steps"));
  REQUIRE(j.contains("order"));
  REQUIRE(j.contains("results"));
  CHECK(j.at("steps").size() == result.steps.size());
  CHECK(j.at("order").size() == result.order.size());
  CHECK(j.at("results").at("posterior_decayed").at("type") == "density");
  CHECK(j.at("results").at("cond_A_given_Y").at("type") == "conditional");
  CHECK(j.at("results").at("cond_A_given_Y").at("causal") == false);

  const std::string text = qcs::run_result_to_text(result, 6);
  CHECK(text.find("posterior_decayed") != std::string::npos);
  CHECK(text.find("condition_on_outcome") != std::string::npos);
}
