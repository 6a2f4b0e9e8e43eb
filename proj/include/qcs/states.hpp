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

#include <string>
#include <vector>

#include "qcs/linalg.hpp"
#include "qcs/regions.hpp"

namespace qcs {

/// How a conditional state relates its regions in time. Acausal states
/// (two marginals of one joint state) are positive semidefinite as stored.
/// Causal states (input conditions output across an evolution) are
/// positive only after transposing the conditioned factors; stored
/// directly they can carry negative eigenvalues.
enum class CausalTag { Causal, Acausal };

/// Unit-trace positive operator on a composite region. Classical factors
/// are checked diagonal in their preferred basis.
class DensityOperator {
 public:
  DensityOperator(LabeledOperator op, const Tolerances& tol = Tolerances{});

  const LabeledOperator& labeled() const { return op_; }
  const CompositeRegion& region() const { return op_.region; }
  const ComplexMatrix& matrix() const { return op_.matrix; }

 private:
  LabeledOperator op_;
};

/// Operator rho_{T|C} on the union of a conditioned region C and a target
/// region T. Tracing out the target leaves a projector on C (the identity
/// when rho_C has full support). Positivity is checked as stored for
/// acausal states and after transposing the conditioned factors for
/// causal ones.
class ConditionalState {
 public:
  ConditionalState(LabeledOperator op, std::vector<std::string> conditioned,
                   CausalTag tag, const Tolerances& tol = Tolerances{});

  const LabeledOperator& labeled() const { return op_; }
  const CompositeRegion& region() const { return op_.region; }
  const ComplexMatrix& matrix() const { return op_.matrix; }
  const std::vector<std::string>& conditioned_labels() const {
    return conditioned_;
  }
  std::vector<std::string> target_labels() const;
  CausalTag tag() const { return tag_; }

 private:
  LabeledOperator op_;
  std::vector<std::string> conditioned_;
  CausalTag tag_;
};

/// Star product m * n = sqrt(n) m sqrt(n) after lifting both operands to
/// the union of their regions (sorted order). n must be positive
/// semidefinite; the product is the noncommutative stand-in for classical
/// multiplication of probability distributions.
LabeledOperator star(const LabeledOperator& m, const LabeledOperator& n,
                     const Tolerances& tol = Tolerances{});

/// Keep only the named factors of a state, tracing out the rest.
DensityOperator marginalize(const DensityOperator& state,
                            const std::vector<std::string>& kept,
                            const Tolerances& tol = Tolerances{});

/// rho_{T|C} = rho * (rho_C^{-1} lifted), computed symmetrically with the
/// support inverse square root of the marginal on `conditioned`. The
/// result is acausal: both regions are read off one joint state.
ConditionalState conditional_from_joint(
    const DensityOperator& joint, const std::vector<std::string>& conditioned,
    const Tolerances& tol = Tolerances{});

/// Reassemble a joint state: rho = cond * marginal. The conditional must
/// be acausal (a causal conditional star its input marginal is generally
/// not positive, so it cannot be returned as a density operator).
DensityOperator joint_from_conditional(const ConditionalState& cond,
                                       const DensityOperator& marginal,
                                       const Tolerances& tol = Tolerances{});

/// Belief propagation: rho_T = Tr_C[rho_{T|C} (rho_C lifted)]. Valid for
/// causal and acausal conditionals alike; the marginal must live exactly
/// on the conditioned region.
DensityOperator propagate(const ConditionalState& cond,
                          const DensityOperator& input,
                          const Tolerances& tol = Tolerances{});

/// Bayesian inversion: rho_{C|T} = rho_{T|C} * (prior x evidence^{-1}).
/// `prior` lives on the conditioned region, `evidence` on the target
/// region; the inverse is taken on the support of the evidence. The
/// returned state conditions on the former target.
ConditionalState bayes_invert(const ConditionalState& cond,
                              const DensityOperator& prior,
                              const DensityOperator& evidence,
                              const Tolerances& tol = Tolerances{});

/// Bayesian inversion with the evidence computed by belief propagation of
/// the prior through the conditional.
ConditionalState bayes_invert(const ConditionalState& cond,
                              const DensityOperator& prior,
                              const Tolerances& tol = Tolerances{});

}  // namespace qcs
