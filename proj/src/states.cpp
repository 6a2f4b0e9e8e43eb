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

#include "qcs/states.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "qcs/errors.hpp"

namespace qcs {

namespace {

void check_label_set_equal(const CompositeRegion& region,
                           const std::vector<std::string>& labels,
                           const char* what) {
  const std::vector<std::string> region_labels = region.labels();
  std::set<std::string> have(region_labels.begin(), region_labels.end());
  std::set<std::string> want(labels.begin(), labels.end());
  if (have != want) {
    throw RegionError(std::string(what) +
                      ": operand does not live on the expected region");
  }
}

/// Tr over the target factors must leave a projector on the conditioned
/// factors (the identity when the conditioning marginal has full support).
void check_conditional_marginal(const LabeledOperator& op,
                                const std::vector<std::string>& target,
                                const Tolerances& tol) {
  const LabeledOperator p = trace_out(op, target);
  const double herm = hermiticity_residual(p.matrix);
  if (herm > tol.hermiticity) {
    throw ValidationError(
        "conditional state: marginal on the conditioned region is not "
        "Hermitian (residual " +
        std::to_string(herm) + ")");
  }
  const double idem = max_abs_diff(p.matrix * p.matrix, p.matrix);
  if (idem > tol.trace) {
    throw ValidationError(
        "conditional state: tracing out the target does not leave a "
        "projector (residual " +
        std::to_string(idem) + ")");
  }
}

}  // namespace

DensityOperator::DensityOperator(LabeledOperator op, const Tolerances& tol)
    : op_(std::move(op)) {
  require_hermitian(op_.matrix, tol);
  require_psd(op_.matrix, tol);
  const Complex tr = op_.matrix.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol.trace) {
    throw ValidationError("density operator trace deviates from 1 by " +
                          std::to_string(std::abs(tr - Complex(1.0, 0.0))));
  }
  require_classical_diagonal(op_, tol);
}

ConditionalState::ConditionalState(LabeledOperator op,
                                   std::vector<std::string> conditioned,
                                   CausalTag tag, const Tolerances& tol)
    : op_(std::move(op)), conditioned_(std::move(conditioned)), tag_(tag) {
  if (conditioned_.empty()) {
    throw RegionError("conditional state: conditioned region is empty");
  }
  std::set<std::string> seen;
  for (const std::string& l : conditioned_) {
    if (!op_.region.contains(l)) {
      throw RegionError("conditional state: conditioned region '" + l +
                        "' is not a factor");
    }
    if (!seen.insert(l).second) {
      throw RegionError("conditional state: duplicate conditioned label '" +
                        l + "'");
    }
  }
  if (conditioned_.size() == op_.region.size()) {
    throw RegionError("conditional state: no target region left");
  }

  require_hermitian(op_.matrix, tol);
  if (tag_ == CausalTag::Acausal) {
    require_psd(op_.matrix, tol);
  } else {
    // Causal states are positive after transposing the conditioned factors.
    require_psd(transpose_factors(op_, conditioned_).matrix, tol);
  }
  check_conditional_marginal(op_, target_labels(), tol);
  require_classical_diagonal(op_, tol);
}

std::vector<std::string> ConditionalState::target_labels() const {
  std::vector<std::string> out;
  for (const std::string& l : op_.region.labels()) {
    if (std::find(conditioned_.begin(), conditioned_.end(), l) ==
        conditioned_.end()) {
      out.push_back(l);
    }
  }
  return out;
}

LabeledOperator star(const LabeledOperator& m, const LabeledOperator& n,
                     const Tolerances& tol) {
  const CompositeRegion full = merge_regions(m.region, n.region);
  const LabeledOperator m_full = lift(m, full);
  const ComplexMatrix n_sqrt = psd_sqrt(n.matrix, tol);
  const LabeledOperator s = lift(LabeledOperator(n.region, n_sqrt), full);
  return LabeledOperator(full, s.matrix * m_full.matrix * s.matrix);
}

DensityOperator marginalize(const DensityOperator& state,
                            const std::vector<std::string>& kept,
                            const Tolerances& tol) {
  std::vector<std::string> dropped;
  for (const std::string& l : state.region().labels()) {
    if (std::find(kept.begin(), kept.end(), l) == kept.end()) {
      dropped.push_back(l);
    }
  }
  for (const std::string& l : kept) {
    if (!state.region().contains(l)) {
      throw RegionError("marginalize: region '" + l + "' is not a factor");
    }
  }
  if (dropped.empty()) return state;
  return DensityOperator(trace_out(state.labeled(), dropped), tol);
}

ConditionalState conditional_from_joint(
    const DensityOperator& joint, const std::vector<std::string>& conditioned,
    const Tolerances& tol) {
  const DensityOperator marg = marginalize(joint, conditioned, tol);
  const ComplexMatrix inv_sqrt = psd_inv_sqrt_on_support(marg.matrix(), tol);
  const LabeledOperator lifted =
      lift(LabeledOperator(marg.region(), inv_sqrt), joint.region());
  ComplexMatrix out = lifted.matrix * joint.matrix() * lifted.matrix;
  return ConditionalState(LabeledOperator(joint.region(), std::move(out)),
                          conditioned, CausalTag::Acausal, tol);
}

DensityOperator joint_from_conditional(const ConditionalState& cond,
                                       const DensityOperator& marginal,
                                       const Tolerances& tol) {
  if (cond.tag() != CausalTag::Acausal) {
    throw ConventionError(
        "joint_from_conditional: a causal conditional star its input is not "
        "a density operator; use star() for the raw product");
  }
  check_label_set_equal(marginal.region(), cond.conditioned_labels(),
                        "joint_from_conditional");
  return DensityOperator(star(cond.labeled(), marginal.labeled(), tol), tol);
}

DensityOperator propagate(const ConditionalState& cond,
                          const DensityOperator& input,
                          const Tolerances& tol) {
  check_label_set_equal(input.region(), cond.conditioned_labels(),
                        "propagate");
  const LabeledOperator lifted = lift(input.labeled(), cond.region());
  const LabeledOperator product(cond.region(),
                                cond.matrix() * lifted.matrix);
  return DensityOperator(trace_out(product, cond.conditioned_labels()), tol);
}

ConditionalState bayes_invert(const ConditionalState& cond,
                              const DensityOperator& prior,
                              const DensityOperator& evidence,
                              const Tolerances& tol) {
  check_label_set_equal(prior.region(), cond.conditioned_labels(),
                        "bayes_invert prior");
  check_label_set_equal(evidence.region(), cond.target_labels(),
                        "bayes_invert evidence");

  // rho * (prior x evidence^{-1}) with the square root factored per
  // region: the two lifts commute, so their product is the Hermitian
  // square root of the tensor factor.
  const ComplexMatrix prior_sqrt = psd_sqrt(prior.matrix(), tol);
  const ComplexMatrix evidence_inv_sqrt =
      psd_inv_sqrt_on_support(evidence.matrix(), tol);
  const LabeledOperator lp =
      lift(LabeledOperator(prior.region(), prior_sqrt), cond.region());
  const LabeledOperator le = lift(
      LabeledOperator(evidence.region(), evidence_inv_sqrt), cond.region());
  const ComplexMatrix l = lp.matrix * le.matrix;
  ComplexMatrix out = l * cond.matrix() * l;
  return ConditionalState(LabeledOperator(cond.region(), std::move(out)),
                          cond.target_labels(), cond.tag(), tol);
}

ConditionalState bayes_invert(const ConditionalState& cond,
                              const DensityOperator& prior,
                              const Tolerances& tol) {
  return bayes_invert(cond, prior, propagate(cond, prior, tol), tol);
}

}  // namespace qcs
