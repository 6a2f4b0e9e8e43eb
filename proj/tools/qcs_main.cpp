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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcs/errors.hpp"
#include "qcs/scenario.hpp"
#include "qcs/serialization.hpp"

namespace {

qcs::Tolerances tolerances_from_flag(double tolerance) {
  qcs::Tolerances tol;
  if (tolerance > 0.0) {
    tol.hermiticity = tolerance;
    tol.psd = tolerance;
    tol.reconstruction = tolerance;
    tol.trace = tolerance;
  }
  return tol;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw qcs::Error("cannot write to '" + out_path + "'");
  }
  out << text;
  if (!text.empty() && text.back() != '\n') out << "\n";
}

int do_run(const std::string& scenario_path, bool json_output,
           const std::string& out_path, double tolerance, int precision) {
  const qcs::Tolerances tol = tolerances_from_flag(tolerance);
  const qcs::Scenario scenario =
      qcs::scenario_from_json(qcs::load_json_file(scenario_path));
  const qcs::RunResult result = qcs::run_scenario(scenario, tol);
  if (json_output) {
    emit(qcs::run_result_to_json(result).dump(2), out_path);
  } else {
    std::ostringstream text;
    if (!scenario.name.empty()) text << "scenario: " << scenario.name << "\n";
    text << qcs::run_result_to_text(result, precision);
    emit(text.str(), out_path);
  }
  return 0;
}

nlohmann::json outcome_to_json(const qcs::RunResult& result,
                               const std::string& label) {
  const std::string bind = qcs::cat_posterior_name(label);
  const auto it = result.values.find(bind);
  if (it == result.values.end()) {
    throw qcs::ValidationError("unknown outcome '" + label + "'");
  }
  const auto& posterior = std::get<qcs::DensityOperator>(it->second);

  nlohmann::json j;
  j["outcome"] = label;
  for (const qcs::StepRecord& step : result.steps) {
    if (step.bind == bind && step.probability.has_value()) {
      j["probability"] = *step.probability;
    }
  }
  j["posterior"] = qcs::labeled_operator_to_json(posterior.labeled());
  return j;
}

void print_outcome_text(std::ostringstream& text, const qcs::RunResult& result,
                        const std::string& label, int precision) {
  const nlohmann::json j = outcome_to_json(result, label);
  text << "outcome '" << label << "'  (probability "
       << j.at("probability").get<double>() << ")\n";
  const auto& posterior = std::get<qcs::DensityOperator>(
      result.values.at(qcs::cat_posterior_name(label)));
  text << "posterior state of the far system:\n"
       << qcs::format_matrix(posterior.matrix(), precision);
}

int do_cat(const std::string& outcome, const std::string& povm_path,
           bool json_output, double tolerance, int precision) {
  const qcs::Tolerances tol = tolerances_from_flag(tolerance);

  qcs::Scenario scenario = qcs::build_cat_scenario();
  if (!povm_path.empty()) {
    const qcs::Povm povm =
        qcs::povm_from_json(qcs::load_json_file(povm_path), tol);
    if (povm.region().label != "B" || povm.region().dim != 2) {
      throw qcs::ValidationError(
          "cat: the POVM must act on region 'B' of dimension 2");
    }
    scenario = qcs::build_cat_scenario(povm.elements());
  }

  const qcs::RunResult result = qcs::run_scenario(scenario, tol);
  const std::vector<qcs::PovmElement>& elements = scenario.povms.front().elements;

  if (!outcome.empty()) {
    const nlohmann::json j = outcome_to_json(result, outcome);
    if (json_output) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::ostringstream text;
      print_outcome_text(text, result, outcome, precision);
      std::cout << text.str();
    }
    return 0;
  }

  if (json_output) {
    nlohmann::json j;
    j["scenario"] = scenario.name;
    j["outcomes"] = nlohmann::json::array();
    for (const qcs::PovmElement& e : elements) {
      j["outcomes"].push_back(outcome_to_json(result, e.label));
    }
    j["consistency_check"] =
        qcs::labeled_operator_to_json(std::get<qcs::DensityOperator>(
                                          result.values.at("consistency_rho_A"))
                                          .labeled());
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::ostringstream text;
  text << "scenario: " << scenario.name << "\n\n";
  text << "A far system and a measured system share an entangled pair; a\n"
          "classical outcome on the measured side conditions the far side.\n\n";
  const auto& rho_a = std::get<qcs::DensityOperator>(result.values.at("rho_A"));
  text << "reduced state of the far system before the readout:\n"
       << qcs::format_matrix(rho_a.matrix(), precision) << "\n";
  for (const qcs::PovmElement& e : elements) {
    print_outcome_text(text, result, e.label, precision);
    text << "\n";
  }
  const auto& consistency =
      std::get<qcs::DensityOperator>(result.values.at("consistency_rho_A"));
  text << "averaging the posteriors over the outcome distribution returns\n"
          "the prior (deviation "
       << qcs::max_abs_diff(consistency.matrix(), rho_a.matrix()) << ").\n";
  std::cout << text.str();
  return 0;
}

int do_verify(const std::string& choi_path, bool json_output,
              double tolerance) {
  const qcs::Tolerances tol = tolerances_from_flag(tolerance);
  const qcs::ChoiState state =
      qcs::choi_from_json(qcs::load_json_file(choi_path));
  const qcs::CptpReport report = qcs::verify_cptp(state, tol);

  if (json_output) {
    std::cout << qcs::value_to_json(qcs::Value(report)).dump(2) << "\n";
  } else {
    std::cout << "hermitian: " << (report.hermitian ? "yes" : "no")
              << " (deviation " << report.hermiticity_deviation << ")\n"
              << "completely positive: " << (report.cp ? "yes" : "no")
              << " (min eigenvalue " << report.min_eigenvalue << ")\n"
              << "trace preserving: " << (report.tp ? "yes" : "no")
              << " (deviation " << report.tp_deviation << ")\n"
              << "verdict: " << (report.cptp() ? "CPTP" : "not CPTP") << "\n";
  }
  return report.cptp() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"calculus of conditional states over labeled regions"};
  app.require_subcommand(1);

  std::string scenario_path;
  bool run_json = false;
  std::string run_out;
  double run_tolerance = -1.0;
  int run_precision = 6;
  CLI::App* run_cmd = app.add_subcommand("run", "execute a scenario file");
  run_cmd->add_option("scenario", scenario_path, "scenario JSON file")
      ->required();
  run_cmd->add_flag("--json", run_json, "emit JSON instead of text");
  run_cmd->add_option("--out", run_out, "write the report to a file");
  run_cmd->add_option("--tolerance", run_tolerance,
                      "override the validation tolerances");
  run_cmd->add_option("--precision", run_precision,
                      "significant digits in text output");

  std::string cat_outcome;
  std::string cat_povm;
  bool cat_json = false;
  double cat_tolerance = -1.0;
  int cat_precision = 6;
  CLI::App* cat_cmd = app.add_subcommand(
      "cat", "run the bundled entangled-pair measurement demonstration");
  cat_cmd->add_option("--outcome", cat_outcome,
                      "report a single outcome (e.g. decayed, not-decayed)");
  cat_cmd->add_option("--povm", cat_povm,
                      "replace the readout with a POVM from a JSON file");
  cat_cmd->add_flag("--json", cat_json, "emit JSON instead of text");
  cat_cmd->add_option("--tolerance", cat_tolerance,
                      "override the validation tolerances");
  cat_cmd->add_option("--precision", cat_precision,
                      "significant digits in text output");

  std::string choi_path;
  bool choi_json = false;
  double choi_tolerance = -1.0;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify-choi", "check a stored channel for complete positivity and "
                     "trace preservation (exit 0 iff CPTP)");
  verify_cmd->add_option("file", choi_path, "channel-state JSON file")
      ->required();
  verify_cmd->add_flag("--json", choi_json, "emit JSON instead of text");
  verify_cmd->add_option("--tolerance", choi_tolerance,
                         "override the validation tolerances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run_cmd->parsed()) {
      return do_run(scenario_path, run_json, run_out, run_tolerance,
                    run_precision);
    }
    if (cat_cmd->parsed()) {
      return do_cat(cat_outcome, cat_povm, cat_json, cat_tolerance,
                    cat_precision);
    }
    if (verify_cmd->parsed()) {
      return do_verify(choi_path, choi_json, choi_tolerance);
    }
  } catch (const qcs::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qcs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
