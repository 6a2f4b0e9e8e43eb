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

#include "qcs/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "qcs/errors.hpp"

namespace qcs {

Povm::Povm(RegionSpec region, std::vector<PovmElement> elements,
           const Tolerances& tol)
    : region_(std::move(region)), elements_(std::move(elements)) {
  region_.validate();
  if (elements_.empty()) {
    throw ValidationError("POVM needs at least one effect");
  }
  std::set<std::string> seen;
  ComplexMatrix sum(region_.dim, region_.dim);
  for (const PovmElement& e : elements_) {
    if (e.label.empty() || !seen.insert(e.label).second) {
      throw ValidationError("POVM effect labels must be nonempty and distinct");
    }
    if (e.matrix.rows() != region_.dim || e.matrix.cols() != region_.dim) {
      throw ShapeError("POVM effect '" + e.label + "' is " +
                       std::to_string(e.matrix.rows()) + "x" +
                       std::to_string(e.matrix.cols()) + " on a region of dimension " +
                       std::to_string(region_.dim));
    }
    require_hermitian(e.matrix, tol);
    require_psd(e.matrix, tol);
    sum += e.matrix;
  }
  const double completeness =
      max_abs_diff(sum, ComplexMatrix::identity(region_.dim));
  if (completeness > tol.trace) {
    throw ValidationError("POVM effects sum away from the identity by " +
                          std::to_string(completeness));
  }
}

const PovmElement& Povm::element(const std::string& label) const {
  for (const PovmElement& e : elements_) {
    if (e.label == label) return e;
  }
  throw ValidationError("POVM has no effect labeled '" + label + "'");
}

ConditionalState hybrid_state(const Povm& povm, const RegionSpec& outcome,
                              const Tolerances& tol) {
  outcome.validate();
  if (outcome.kind != RegionKind::Classical) {
    throw RegionError("hybrid_state: outcome region must be classical");
  }
  if (outcome.label == povm.region().label) {
    throw RegionError("hybrid_state: outcome region must differ from the "
                      "measured region");
  }
  if (outcome.dim != povm.elements().size()) {
    throw RegionError("hybrid_state: outcome region dimension " +
                      std::to_string(outcome.dim) + " does not match " +
                      std::to_string(povm.elements().size()) + " effects");
  }
  const std::vector<std::string> basis = outcome.effective_basis_labels();
  {
    std::set<std::string> basis_set(basis.begin(), basis.end());
    for (const PovmElement& e : povm.elements()) {
      if (basis_set.count(e.label) == 0) {
        throw RegionError("hybrid_state: effect '" + e.label +
                          "' has no matching outcome basis label");
      }
    }
  }

  const std::size_t din = povm.region().dim;
  const std::size_t dy = outcome.dim;
  ComplexMatrix m(din * dy, din * dy);
  for (std::size_t y = 0; y < dy; ++y) {
    const ComplexMatrix& effect = povm.element(basis[y]).matrix;
    m += kron(effect, ComplexMatrix::unit(dy, y, y));
  }

  CompositeRegion region({povm.region(), outcome});
  return ConditionalState(LabeledOperator(std::move(region), std::move(m)),
                          {povm.region().label}, CausalTag::Causal, tol);
}

std::vector<std::pair<std::string, double>> outcome_distribution(
    const Povm& povm, const DensityOperator& state) {
  if (state.region().size() != 1 ||
      state.region().factor(0).label != povm.region().label ||
      state.region().factor(0).dim != povm.region().dim) {
    throw RegionError(
        "outcome_distribution: state does not live on the measured region");
  }
  std::vector<std::pair<std::string, double>> out;
  out.reserve(povm.elements().size());
  for (const PovmElement& e : povm.elements()) {
    out.emplace_back(e.label, (e.matrix * state.matrix()).trace().real());
  }
  return out;
}

std::vector<std::pair<std::string, double>> classical_distribution(
    const DensityOperator& state) {
  if (state.region().size() != 1 ||
      state.region().factor(0).kind != RegionKind::Classical) {
    throw RegionError(
        "classical_distribution: state must live on one classical region");
  }
  const std::vector<std::string> basis =
      state.region().factor(0).effective_basis_labels();
  std::vector<std::pair<std::string, double>> out;
  out.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out.emplace_back(basis[i], state.matrix()(i, i).real());
  }
  return out;
}

OutcomeResult condition_on_outcome(const ConditionalState& cond,
                                   const DensityOperator& outcome_marginal,
                                   const std::string& outcome_label,
                                   const Tolerances& tol) {
  if (cond.conditioned_labels().size() != 1) {
    throw RegionError(
        "condition_on_outcome: conditional must condition on exactly one "
        "region");
  }
  const std::string& y_label = cond.conditioned_labels().front();
  const RegionSpec& y_spec = cond.region().factor(cond.region().index_of(y_label));
  if (y_spec.kind != RegionKind::Classical) {
    throw RegionError("condition_on_outcome: conditioned region '" + y_label +
                      "' is not classical");
  }
  if (outcome_marginal.region().size() != 1 ||
      !(outcome_marginal.region().factor(0) == y_spec)) {
    throw RegionError(
        "condition_on_outcome: marginal does not live on the outcome region");
  }

  const std::vector<std::string> basis = y_spec.effective_basis_labels();
  const auto it = std::find(basis.begin(), basis.end(), outcome_label);
  if (it == basis.end()) {
    throw ValidationError("condition_on_outcome: unknown outcome '" +
                          outcome_label + "'");
  }
  const std::size_t y = static_cast<std::size_t>(it - basis.begin());

  const LabeledOperator projector(
      CompositeRegion({y_spec}), ComplexMatrix::unit(y_spec.dim, y, y));
  const LabeledOperator lifted = lift(projector, cond.region());

  LabeledOperator raw(cond.region(),
                      lifted.matrix * cond.matrix() * lifted.matrix);
  LabeledOperator reduced = trace_out(raw, {y_label});
  const double block_trace = reduced.matrix.trace().real();
  if (block_trace <= tol.psd_floor) {
    throw ValidationError("condition_on_outcome: outcome '" + outcome_label +
                          "' lies outside the support of the conditional");
  }
  reduced.matrix = reduced.matrix * Complex(1.0 / block_trace, 0.0);
  const double probability = outcome_marginal.matrix()(y, y).real();
  return OutcomeResult{outcome_label, probability, std::move(raw),
                       DensityOperator(std::move(reduced), tol)};
}

}  // namespace qcs
