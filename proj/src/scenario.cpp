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

#include "qcs/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <utility>

#include "qcs/errors.hpp"
#include "qcs/serialization.hpp"

namespace qcs {

namespace {

std::string step_context(std::size_t index, const PipelineStep& step) {
  return "step " + std::to_string(index + 1) + " (" + step.op + ")";
}

class Executor {
 public:
  Executor(const Scenario& scenario, const Tolerances& tol)
      : scenario_(scenario), tol_(tol) {
    for (const RegionSpec& r : scenario.regions) {
      r.validate();
      if (!regions_.emplace(r.label, r).second) {
        throw ParseError("duplicate region '" + r.label + "'");
      }
    }
    for (const DeclaredChannel& c : scenario.channels) {
      const RegionSpec& in = region(c.in_label);
      const RegionSpec& out = region(c.out_label);
      if (!channels_
               .emplace(c.name, KrausChannel(c.in_label, c.out_label, in.dim,
                                             out.dim, c.kraus))
               .second) {
        throw ParseError("duplicate channel '" + c.name + "'");
      }
    }
    for (const DeclaredPovm& p : scenario.povms) {
      if (!povms_.emplace(p.name, Povm(region(p.region_label), p.elements, tol_))
               .second) {
        throw ParseError("duplicate POVM '" + p.name + "'");
      }
    }
    for (const DeclaredState& d : scenario.states) {
      bind(d.name, declared_value(d));
    }
  }

  RunResult run() {
    for (std::size_t i = 0; i < scenario_.pipeline.size(); ++i) {
      execute(i, scenario_.pipeline[i]);
    }
    return std::move(result_);
  }

 private:
  const RegionSpec& region(const std::string& label) const {
    const auto it = regions_.find(label);
    if (it == regions_.end()) {
      throw ParseError("unknown region '" + label + "'");
    }
    return it->second;
  }

  CompositeRegion composite(const std::vector<std::string>& labels) const {
    std::vector<RegionSpec> specs;
    specs.reserve(labels.size());
    for (const std::string& l : labels) specs.push_back(region(l));
    return CompositeRegion(std::move(specs));
  }

  Value declared_value(const DeclaredState& d) const {
    LabeledOperator op(composite(d.factors), d.matrix);
    if (d.kind == "density") {
      return DensityOperator(std::move(op), tol_);
    }
    if (d.kind == "conditional") {
      return ConditionalState(std::move(op), d.conditioned,
                              d.causal ? CausalTag::Causal : CausalTag::Acausal,
                              tol_);
    }
    if (d.kind == "operator") {
      return op;
    }
    throw ParseError("state '" + d.name + "': unknown kind '" + d.kind + "'");
  }

  void bind(const std::string& name, Value value) {
    if (name.empty()) throw ParseError("result must be bound to a name");
    if (result_.values.count(name) != 0) {
      throw ParseError("name '" + name + "' is bound twice");
    }
    result_.order.push_back(name);
    result_.values.emplace(name, std::move(value));
  }

  const Value& value(const std::string& name, const std::string& ctx) const {
    const auto it = result_.values.find(name);
    if (it == result_.values.end()) {
      throw ParseError(ctx + ": unknown value '" + name + "'");
    }
    return it->second;
  }

  const nlohmann::json& arg(const PipelineStep& step, const std::string& ctx,
                            const char* key) const {
    if (!step.args.is_object() || !step.args.contains(key)) {
      throw ParseError(ctx + ": missing argument '" + key + "'");
    }
    return step.args.at(key);
  }

  std::string arg_string(const PipelineStep& step, const std::string& ctx,
                         const char* key) const {
    const nlohmann::json& j = arg(step, ctx, key);
    if (!j.is_string()) {
      throw ParseError(ctx + ": argument '" + key + "' must be a string");
    }
    return j.get<std::string>();
  }

  std::vector<std::string> arg_labels(const PipelineStep& step,
                                      const std::string& ctx,
                                      const char* key) const {
    const nlohmann::json& j = arg(step, ctx, key);
    if (!j.is_array() || j.empty()) {
      throw ParseError(ctx + ": argument '" + key +
                       "' must be a nonempty array of labels");
    }
    std::vector<std::string> out;
    for (const nlohmann::json& l : j) {
      if (!l.is_string()) {
        throw ParseError(ctx + ": argument '" + key +
                         "' must contain only strings");
      }
      out.push_back(l.get<std::string>());
    }
    return out;
  }

  const DensityOperator& as_density(const std::string& name,
                                    const std::string& ctx) const {
    const Value& v = value(name, ctx);
    if (const auto* d = std::get_if<DensityOperator>(&v)) return *d;
    throw ValidationError(ctx + ": '" + name + "' is not a density operator");
  }

  const ConditionalState& as_conditional(const std::string& name,
                                         const std::string& ctx) const {
    const Value& v = value(name, ctx);
    if (const auto* c = std::get_if<ConditionalState>(&v)) return *c;
    throw ValidationError(ctx + ": '" + name + "' is not a conditional state");
  }

  const ChoiState& as_choi(const std::string& name,
                           const std::string& ctx) const {
    const Value& v = value(name, ctx);
    if (const auto* c = std::get_if<ChoiState>(&v)) return *c;
    throw ValidationError(ctx + ": '" + name + "' is not a channel state");
  }

  LabeledOperator as_operator(const std::string& name,
                              const std::string& ctx) const {
    const Value& v = value(name, ctx);
    if (const auto* d = std::get_if<DensityOperator>(&v)) return d->labeled();
    if (const auto* c = std::get_if<ConditionalState>(&v)) return c->labeled();
    if (const auto* o = std::get_if<LabeledOperator>(&v)) return *o;
    throw ValidationError(ctx + ": '" + name + "' has no operator form");
  }

  const KrausChannel& channel(const std::string& name,
                              const std::string& ctx) const {
    const auto it = channels_.find(name);
    if (it == channels_.end()) {
      throw ParseError(ctx + ": unknown channel '" + name + "'");
    }
    return it->second;
  }

  const Povm& povm(const std::string& name, const std::string& ctx) const {
    const auto it = povms_.find(name);
    if (it == povms_.end()) {
      throw ParseError(ctx + ": unknown POVM '" + name + "'");
    }
    return it->second;
  }

  RegionSpec out_region_spec(const std::string& label, std::size_t dim) const {
    const auto it = regions_.find(label);
    if (it != regions_.end()) return it->second;
    return RegionSpec{label, dim, RegionKind::Quantum, {}};
  }

  void execute(std::size_t index, const PipelineStep& step) {
    const std::string ctx = step_context(index, step);
    StepRecord record;
    record.index = index + 1;
    record.op = step.op;
    record.bind = step.bind;

    if (step.op == "marginalize") {
      const std::string state = arg_string(step, ctx, "state");
      const std::vector<std::string> keep = arg_labels(step, ctx, "keep");
      bind(step.bind, marginalize(as_density(state, ctx), keep, tol_));
      record.note = "kept " + join(keep);
    } else if (step.op == "conditional_from_joint") {
      const std::string state = arg_string(step, ctx, "state");
      const std::vector<std::string> conditioned =
          arg_labels(step, ctx, "conditioned");
      bind(step.bind,
           conditional_from_joint(as_density(state, ctx), conditioned, tol_));
      record.note = "conditioned on " + join(conditioned);
    } else if (step.op == "joint_from_conditional") {
      bind(step.bind,
           joint_from_conditional(
               as_conditional(arg_string(step, ctx, "conditional"), ctx),
               as_density(arg_string(step, ctx, "marginal"), ctx), tol_));
    } else if (step.op == "propagate") {
      bind(step.bind,
           propagate(as_conditional(arg_string(step, ctx, "conditional"), ctx),
                     as_density(arg_string(step, ctx, "input"), ctx), tol_));
    } else if (step.op == "bayes_invert") {
      const ConditionalState& cond =
          as_conditional(arg_string(step, ctx, "conditional"), ctx);
      const DensityOperator& prior =
          as_density(arg_string(step, ctx, "prior"), ctx);
      if (step.args.contains("evidence")) {
        bind(step.bind,
             bayes_invert(cond, prior,
                          as_density(arg_string(step, ctx, "evidence"), ctx),
                          tol_));
      } else {
        bind(step.bind, bayes_invert(cond, prior, tol_));
      }
    } else if (step.op == "star") {
      bind(step.bind, star(as_operator(arg_string(step, ctx, "left"), ctx),
                           as_operator(arg_string(step, ctx, "right"), ctx),
                           tol_));
    } else if (step.op == "hybrid_state") {
      const Povm& p = povm(arg_string(step, ctx, "povm"), ctx);
      const RegionSpec& outcome =
          region(arg_string(step, ctx, "outcome_region"));
      bind(step.bind, hybrid_state(p, outcome, tol_));
      record.note = "outcome region " + outcome.label;
    } else if (step.op == "compose_states") {
      bind(step.bind,
           compose_states(as_conditional(arg_string(step, ctx, "outer"), ctx),
                          as_conditional(arg_string(step, ctx, "inner"), ctx),
                          tol_));
    } else if (step.op == "condition_on_outcome") {
      const std::string outcome = arg_string(step, ctx, "outcome");
      OutcomeResult r = condition_on_outcome(
          as_conditional(arg_string(step, ctx, "conditional"), ctx),
          as_density(arg_string(step, ctx, "marginal"), ctx), outcome, tol_);
      record.probability = r.probability;
      {
        std::ostringstream note;
        note << "p(" << outcome << ") = " << r.probability;
        record.note = note.str();
      }
      bind(step.bind, std::move(r.posterior));
      if (!step.bind_raw.empty()) {
        bind(step.bind_raw, std::move(r.raw_block));
      }
    } else if (step.op == "jamiolkowski") {
      bind(step.bind,
           jamiolkowski(channel(arg_string(step, ctx, "channel"), ctx)));
    } else if (step.op == "apply_channel") {
      const KrausChannel& ch = channel(arg_string(step, ctx, "channel"), ctx);
      const DensityOperator& input =
          as_density(arg_string(step, ctx, "input"), ctx);
      if (input.region().size() != 1 ||
          input.region().factor(0).label != ch.in_label) {
        throw RegionError(ctx + ": input must live on region '" + ch.in_label +
                          "'");
      }
      ComplexMatrix out = apply(ch, input.matrix());
      CompositeRegion out_region({out_region_spec(ch.out_label, ch.out_dim)});
      bind(step.bind, DensityOperator(
                          LabeledOperator(std::move(out_region), std::move(out)),
                          tol_));
    } else if (step.op == "channel_action") {
      const ChoiState& choi = as_choi(arg_string(step, ctx, "state"), ctx);
      const DensityOperator& input =
          as_density(arg_string(step, ctx, "input"), ctx);
      if (input.region().size() != 1 ||
          input.region().factor(0).label != choi.in().label) {
        throw RegionError(ctx + ": input must live on region '" +
                          choi.in().label + "'");
      }
      ComplexMatrix out = channel_action_from_state(choi, input.matrix());
      CompositeRegion out_region({choi.out()});
      bind(step.bind, DensityOperator(
                          LabeledOperator(std::move(out_region), std::move(out)),
                          tol_));
    } else if (step.op == "verify_cptp") {
      const CptpReport report =
          verify_cptp(as_choi(arg_string(step, ctx, "state"), ctx), tol_);
      {
        std::ostringstream note;
        note << (report.cp ? "cp" : "not cp") << ", "
             << (report.tp ? "tp" : "not tp");
        record.note = note.str();
      }
      bind(step.bind, report);
    } else if (step.op == "choi_to_conditional") {
      bind(step.bind, choi_to_conditional(
                          as_choi(arg_string(step, ctx, "state"), ctx), tol_));
    } else if (step.op == "conditional_to_choi") {
      bind(step.bind,
           conditional_to_choi(
               as_conditional(arg_string(step, ctx, "conditional"), ctx)));
    } else {
      throw ParseError(ctx + ": unknown operation");
    }

    result_.steps.push_back(std::move(record));
  }

  static std::string join(const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i > 0) out += ", ";
      out += labels[i];
    }
    return out;
  }

  const Scenario& scenario_;
  Tolerances tol_;
  std::map<std::string, RegionSpec> regions_;
  std::map<std::string, KrausChannel> channels_;
  std::map<std::string, Povm> povms_;
  RunResult result_;
};

}  // namespace

RunResult run_scenario(const Scenario& scenario, const Tolerances& tol) {
  Executor executor(scenario, tol);
  return executor.run();
}

namespace {

std::string sanitize_for_bind(const std::string& label) {
  std::string out;
  out.reserve(label.size());
  for (char c : label) {
    out += (std::isalnum(static_cast<unsigned char>(c)) != 0) ? c : '_';
  }
  return out;
}

}  // namespace

Scenario scenario_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("scenario: expected an object");
  Scenario s;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) {
      throw ParseError("scenario name must be a string");
    }
    s.name = j.at("name").get<std::string>();
  }

  if (!j.contains("regions") || !j.at("regions").is_array() ||
      j.at("regions").empty()) {
    throw ParseError("scenario: 'regions' must be a nonempty array");
  }
  for (const nlohmann::json& r : j.at("regions")) {
    s.regions.push_back(region_spec_from_json(r));
  }

  if (j.contains("states")) {
    if (!j.at("states").is_array()) {
      throw ParseError("scenario: 'states' must be an array");
    }
    for (const nlohmann::json& d : j.at("states")) {
      if (!d.is_object() || !d.contains("name") || !d.contains("factors") ||
          !d.contains("matrix")) {
        throw ParseError("state: expected {name, factors, matrix}");
      }
      DeclaredState state;
      state.name = d.at("name").get<std::string>();
      if (!d.at("factors").is_array() || d.at("factors").empty()) {
        throw ParseError("state '" + state.name +
                         "': 'factors' must be a nonempty array");
      }
      for (const nlohmann::json& f : d.at("factors")) {
        if (!f.is_string()) {
          throw ParseError("state '" + state.name +
                           "': factors must be strings");
        }
        state.factors.push_back(f.get<std::string>());
      }
      state.kind = d.contains("kind") ? d.at("kind").get<std::string>()
                                      : std::string("density");
      if (d.contains("conditioned")) {
        for (const nlohmann::json& c : d.at("conditioned")) {
          if (!c.is_string()) {
            throw ParseError("state '" + state.name +
                             "': conditioned labels must be strings");
          }
          state.conditioned.push_back(c.get<std::string>());
        }
      }
      if (d.contains("causal")) {
        if (!d.at("causal").is_boolean()) {
          throw ParseError("state '" + state.name +
                           "': 'causal' must be a boolean");
        }
        state.causal = d.at("causal").get<bool>();
      }
      state.matrix = matrix_from_json(d.at("matrix"));
      s.states.push_back(std::move(state));
    }
  }

  if (j.contains("povms")) {
    if (!j.at("povms").is_array()) {
      throw ParseError("scenario: 'povms' must be an array");
    }
    for (const nlohmann::json& p : j.at("povms")) {
      if (!p.is_object() || !p.contains("name") || !p.contains("region") ||
          !p.contains("elements")) {
        throw ParseError("POVM: expected {name, region, elements}");
      }
      DeclaredPovm povm;
      povm.name = p.at("name").get<std::string>();
      if (!p.at("region").is_string()) {
        throw ParseError("POVM '" + povm.name +
                         "': 'region' must be a region label");
      }
      povm.region_label = p.at("region").get<std::string>();
      if (!p.at("elements").is_array() || p.at("elements").empty()) {
        throw ParseError("POVM '" + povm.name +
                         "': 'elements' must be a nonempty array");
      }
      for (const nlohmann::json& e : p.at("elements")) {
        if (!e.is_object() || !e.contains("label") || !e.contains("matrix")) {
          throw ParseError("POVM element: expected {label, matrix}");
        }
        povm.elements.push_back(
            PovmElement{e.at("label").get<std::string>(),
                        matrix_from_json(e.at("matrix"))});
      }
      s.povms.push_back(std::move(povm));
    }
  }

  if (j.contains("channels")) {
    if (!j.at("channels").is_array()) {
      throw ParseError("scenario: 'channels' must be an array");
    }
    for (const nlohmann::json& c : j.at("channels")) {
      if (!c.is_object() || !c.contains("name") || !c.contains("in") ||
          !c.contains("out") || !c.contains("kraus")) {
        throw ParseError("channel: expected {name, in, out, kraus}");
      }
      DeclaredChannel channel;
      channel.name = c.at("name").get<std::string>();
      channel.in_label = c.at("in").get<std::string>();
      channel.out_label = c.at("out").get<std::string>();
      if (!c.at("kraus").is_array() || c.at("kraus").empty()) {
        throw ParseError("channel '" + channel.name +
                         "': 'kraus' must be a nonempty array");
      }
      for (const nlohmann::json& k : c.at("kraus")) {
        channel.kraus.push_back(matrix_from_json(k));
      }
      s.channels.push_back(std::move(channel));
    }
  }

  if (!j.contains("pipeline") || !j.at("pipeline").is_array()) {
    throw ParseError("scenario: 'pipeline' must be an array");
  }
  for (const nlohmann::json& p : j.at("pipeline")) {
    if (!p.is_object() || !p.contains("op")) {
      throw ParseError("pipeline step: expected an object with 'op'");
    }
    PipelineStep step;
    step.op = p.at("op").get<std::string>();
    step.args = nlohmann::json::object();
    for (auto it = p.begin(); it != p.end(); ++it) {
      if (it.key() == "op") continue;
      if (it.key() == "bind") {
        if (!it.value().is_string()) {
          throw ParseError("pipeline step: 'bind' must be a string");
        }
        step.bind = it.value().get<std::string>();
      } else if (it.key() == "bind_raw") {
        if (!it.value().is_string()) {
          throw ParseError("pipeline step: 'bind_raw' must be a string");
        }
        step.bind_raw = it.value().get<std::string>();
      } else {
        step.args[it.key()] = it.value();
      }
    }
    s.pipeline.push_back(std::move(step));
  }
  return s;
}

nlohmann::json scenario_to_json(const Scenario& scenario) {
  nlohmann::json j;
  if (!scenario.name.empty()) j["name"] = scenario.name;
  j["regions"] = nlohmann::json::array();
  for (const RegionSpec& r : scenario.regions) {
    j["regions"].push_back(region_spec_to_json(r));
  }
  if (!scenario.states.empty()) {
    j["states"] = nlohmann::json::array();
    for (const DeclaredState& d : scenario.states) {
      nlohmann::json state;
      state["name"] = d.name;
      state["factors"] = d.factors;
      state["kind"] = d.kind;
      if (!d.conditioned.empty()) {
        state["conditioned"] = d.conditioned;
        state["causal"] = d.causal;
      }
      state["matrix"] = matrix_to_json(d.matrix);
      j["states"].push_back(std::move(state));
    }
  }
  if (!scenario.povms.empty()) {
    j["povms"] = nlohmann::json::array();
    for (const DeclaredPovm& p : scenario.povms) {
      nlohmann::json povm;
      povm["name"] = p.name;
      povm["region"] = p.region_label;
      povm["elements"] = nlohmann::json::array();
      for (const PovmElement& e : p.elements) {
        povm["elements"].push_back(
            {{"label", e.label}, {"matrix", matrix_to_json(e.matrix)}});
      }
      j["povms"].push_back(std::move(povm));
    }
  }
  if (!scenario.channels.empty()) {
    j["channels"] = nlohmann::json::array();
    for (const DeclaredChannel& c : scenario.channels) {
      nlohmann::json channel;
      channel["name"] = c.name;
      channel["in"] = c.in_label;
      channel["out"] = c.out_label;
      channel["kraus"] = nlohmann::json::array();
      for (const ComplexMatrix& k : c.kraus) {
        channel["kraus"].push_back(matrix_to_json(k));
      }
      j["channels"].push_back(std::move(channel));
    }
  }
  j["pipeline"] = nlohmann::json::array();
  for (const PipelineStep& step : scenario.pipeline) {
    nlohmann::json p = step.args.is_object() ? step.args
                                             : nlohmann::json::object();
    p["op"] = step.op;
    if (!step.bind.empty()) p["bind"] = step.bind;
    if (!step.bind_raw.empty()) p["bind_raw"] = step.bind_raw;
    j["pipeline"].push_back(std::move(p));
  }
  return j;
}

Scenario build_cat_scenario() {
  const Complex one(1.0, 0.0);
  std::vector<PovmElement> elements;
  elements.push_back(PovmElement{
      "decayed", ComplexMatrix::diagonal({Complex(0.0, 0.0), one})});
  elements.push_back(PovmElement{
      "not-decayed", ComplexMatrix::diagonal({one, Complex(0.0, 0.0)})});
  return build_cat_scenario(elements);
}

Scenario build_cat_scenario(const std::vector<PovmElement>& elements) {
  if (elements.empty()) {
    throw ValidationError("cat scenario needs at least one POVM effect");
  }
  for (const PovmElement& e : elements) {
    if (e.matrix.rows() != 2 || e.matrix.cols() != 2) {
      throw ValidationError(
          "cat scenario: effects must act on the two-dimensional measured "
          "region");
    }
  }

  Scenario s;
  s.name = "entangled-pair-remote-measurement";

  RegionSpec a{"A", 2, RegionKind::Quantum, {"dead", "alive"}};
  RegionSpec b{"B", 2, RegionKind::Quantum, {"excited", "decayed"}};
  std::vector<std::string> outcome_labels;
  outcome_labels.reserve(elements.size());
  for (const PovmElement& e : elements) outcome_labels.push_back(e.label);
  RegionSpec y{"Y", elements.size(), RegionKind::Classical, outcome_labels};
  s.regions = {a, b, std::move(y)};

  // The maximally entangled pair (|dead, decayed> + |alive, excited>)/sqrt2.
  ComplexMatrix joint(4, 4);
  joint(1, 1) = Complex(0.5, 0.0);
  joint(1, 2) = Complex(0.5, 0.0);
  joint(2, 1) = Complex(0.5, 0.0);
  joint(2, 2) = Complex(0.5, 0.0);
  s.states.push_back(
      DeclaredState{"joint", {"A", "B"}, "density", {}, false, joint});

  s.povms.push_back(DeclaredPovm{"decay-check", "B", elements});

  auto step = [](std::string op, nlohmann::json args, std::string bind,
                 std::string bind_raw = "") {
    return PipelineStep{std::move(op), std::move(args), std::move(bind),
                        std::move(bind_raw)};
  };
  s.pipeline.push_back(step(
      "marginalize",
      {{"state", "joint"}, {"keep", nlohmann::json::array({"A"})}}, "rho_A"));
  s.pipeline.push_back(step(
      "marginalize",
      {{"state", "joint"}, {"keep", nlohmann::json::array({"B"})}}, "rho_B"));
  s.pipeline.push_back(
      step("conditional_from_joint",
           {{"state", "joint"}, {"conditioned", nlohmann::json::array({"A"})}},
           "cond_B_given_A"));
  s.pipeline.push_back(step("hybrid_state",
                            {{"povm", "decay-check"}, {"outcome_region", "Y"}},
                            "hybrid_Y_given_B"));
  s.pipeline.push_back(
      step("compose_states",
           {{"outer", "hybrid_Y_given_B"}, {"inner", "cond_B_given_A"}},
           "cond_Y_given_A"));
  s.pipeline.push_back(
      step("propagate",
           {{"conditional", "hybrid_Y_given_B"}, {"input", "rho_B"}},
           "rho_Y"));
  s.pipeline.push_back(step("bayes_invert",
                            {{"conditional", "cond_Y_given_A"},
                             {"prior", "rho_A"},
                             {"evidence", "rho_Y"}},
                            "cond_A_given_Y"));
  s.pipeline.push_back(
      step("propagate",
           {{"conditional", "cond_A_given_Y"}, {"input", "rho_Y"}},
           "consistency_rho_A"));
  for (const PovmElement& e : elements) {
    s.pipeline.push_back(step("condition_on_outcome",
                              {{"conditional", "cond_A_given_Y"},
                               {"marginal", "rho_Y"},
                               {"outcome", e.label}},
                              cat_posterior_name(e.label),
                              cat_raw_block_name(e.label)));
  }
  return s;
}

std::string cat_posterior_name(const std::string& outcome_label) {
  return "posterior_" + sanitize_for_bind(outcome_label);
}

std::string cat_raw_block_name(const std::string& outcome_label) {
  return "raw_" + sanitize_for_bind(outcome_label);
}

namespace {

struct ValueToJson {
  nlohmann::json operator()(const DensityOperator& d) const {
    nlohmann::json j = labeled_operator_to_json(d.labeled());
    j["type"] = "density";
    return j;
  }
  nlohmann::json operator()(const ConditionalState& c) const {
    nlohmann::json j = labeled_operator_to_json(c.labeled());
    j["type"] = "conditional";
    j["conditioned"] = c.conditioned_labels();
    j["causal"] = c.tag() == CausalTag::Causal;
    return j;
  }
  nlohmann::json operator()(const ChoiState& s) const {
    nlohmann::json j = choi_to_json(s);
    j["type"] = "channel-state";
    return j;
  }
  nlohmann::json operator()(const LabeledOperator& o) const {
    nlohmann::json j = labeled_operator_to_json(o);
    j["type"] = "operator";
    return j;
  }
  nlohmann::json operator()(const CptpReport& r) const {
    nlohmann::json j;
    j["type"] = "cptp-report";
    j["hermitian"] = r.hermitian;
    j["hermiticity_deviation"] = r.hermiticity_deviation;
    j["cp"] = r.cp;
    if (std::isnan(r.min_eigenvalue)) {
      j["min_eigenvalue"] = nullptr;
    } else {
      j["min_eigenvalue"] = r.min_eigenvalue;
    }
    j["tp"] = r.tp;
    j["tp_deviation"] = r.tp_deviation;
    j["cptp"] = r.cptp();
    return j;
  }
};

struct ValueTypeName {
  std::string operator()(const DensityOperator&) const { return "density"; }
  std::string operator()(const ConditionalState& c) const {
    return c.tag() == CausalTag::Causal ? "conditional (causal)"
                                        : "conditional (acausal)";
  }
  std::string operator()(const ChoiState&) const { return "channel state"; }
  std::string operator()(const LabeledOperator&) const { return "operator"; }
  std::string operator()(const CptpReport&) const { return "cptp report"; }
};

std::string factors_of(const Value& value) {
  const CompositeRegion* region = nullptr;
  if (const auto* d = std::get_if<DensityOperator>(&value)) {
    region = &d->region();
  } else if (const auto* c = std::get_if<ConditionalState>(&value)) {
    region = &c->region();
  } else if (const auto* o = std::get_if<LabeledOperator>(&value)) {
    region = &o->region;
  } else if (const auto* s = std::get_if<ChoiState>(&value)) {
    return s->in().label + " -> " + s->out().label;
  }
  if (region == nullptr) return "";
  std::string out;
  for (std::size_t i = 0; i < region->size(); ++i) {
    if (i > 0) out += ",";
    out += region->factor(i).label;
  }
  return out;
}

const ComplexMatrix* matrix_of(const Value& value) {
  if (const auto* d = std::get_if<DensityOperator>(&value)) {
    return &d->matrix();
  }
  if (const auto* c = std::get_if<ConditionalState>(&value)) {
    return &c->matrix();
  }
  if (const auto* o = std::get_if<LabeledOperator>(&value)) {
    return &o->matrix;
  }
  if (const auto* s = std::get_if<ChoiState>(&value)) {
    return &s->matrix();
  }
  return nullptr;
}

}  // namespace

nlohmann::json value_to_json(const Value& value) {
  return std::visit(ValueToJson{}, value);
}

nlohmann::json run_result_to_json(const RunResult& result) {
  nlohmann::json j;
  j["steps"] = nlohmann::json::array();
  for (const StepRecord& s : result.steps) {
    nlohmann::json record;
    record["index"] = s.index;
    record["op"] = s.op;
    record["bind"] = s.bind;
    if (!s.note.empty()) record["note"] = s.note;
    if (s.probability.has_value()) record["probability"] = *s.probability;
    j["steps"].push_back(std::move(record));
  }
  j["order"] = result.order;
  j["results"] = nlohmann::json::object();
  for (const auto& [name, value] : result.values) {
    j["results"][name] = value_to_json(value);
  }
  return j;
}

std::string run_result_to_text(const RunResult& result, int precision) {
  std::ostringstream out;
  for (const StepRecord& s : result.steps) {
    out << "step " << s.index << ": " << s.op;
    if (!s.bind.empty()) out << " -> " << s.bind;
    if (!s.note.empty()) out << "  [" << s.note << "]";
    out << "\n";
  }
  out << "\n";
  for (const std::string& name : result.order) {
    const Value& value = result.values.at(name);
    out << name << "  (" << std::visit(ValueTypeName{}, value);
    const std::string factors = factors_of(value);
    if (!factors.empty()) out << " on " << factors;
    out << ")\n";
    if (const ComplexMatrix* m = matrix_of(value)) {
      out << format_matrix(*m, precision);
    } else if (const auto* r = std::get_if<CptpReport>(&value)) {
      out << "  hermitian: " << (r->hermitian ? "yes" : "no")
          << " (deviation " << r->hermiticity_deviation << ")\n"
          << "  completely positive: " << (r->cp ? "yes" : "no")
          << " (min eigenvalue " << r->min_eigenvalue << ")\n"
          << "  trace preserving: " << (r->tp ? "yes" : "no")
          << " (deviation " << r->tp_deviation << ")\n";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace qcs
