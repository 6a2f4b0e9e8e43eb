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
#include <utility>
#include <vector>

#include "qcs/regions.hpp"
#include "qcs/states.hpp"

namespace qcs {

struct PovmElement {
  std::string label;
  ComplexMatrix matrix;
};

/// Positive operator-valued measure on a single region: labeled effects
/// that are Hermitian, positive and sum to the identity.
class Povm {
 public:
  Povm(RegionSpec region, std::vector<PovmElement> elements,
       const Tolerances& tol = Tolerances{});

  const RegionSpec& region() const { return region_; }
  const std::vector<PovmElement>& elements() const { return elements_; }
  const PovmElement& element(const std::string& label) const;

 private:
  RegionSpec region_;
  std::vector<PovmElement> elements_;
};

/// The measurement as a causal conditional state of a classical outcome
/// region given the measured region: sum_y E_y x |y><y|. The outcome
/// region must be classical with one basis label per effect (same names);
/// effects are matched to basis slots by label.
ConditionalState hybrid_state(const Povm& povm, const RegionSpec& outcome,
                              const Tolerances& tol = Tolerances{});

/// Born probabilities Tr[E_y rho] in element order. The state must live
/// exactly on the measured region.
std::vector<std::pair<std::string, double>> outcome_distribution(
    const Povm& povm, const DensityOperator& state);

/// Diagonal of a state on a single classical region, keyed by basis label.
std::vector<std::pair<std::string, double>> classical_distribution(
    const DensityOperator& state);

/// One branch of a conditional read at a definite classical outcome.
struct OutcomeResult {
  std::string outcome;
  /// Probability of the outcome under the supplied outcome marginal.
  double probability = 0.0;
  /// Conditional with the outcome factor projected onto |y><y|, still on
  /// the full region (the posterior tensor the outcome dyad).
  LabeledOperator raw_block;
  /// Normalized state of the target region given the outcome.
  DensityOperator posterior;
};

/// Read a conditional whose conditioned region is one classical factor at
/// a definite outcome. The marginal supplies the outcome probability and
/// must live on that classical region.
OutcomeResult condition_on_outcome(const ConditionalState& cond,
                                   const DensityOperator& outcome_marginal,
                                   const std::string& outcome_label,
                                   const Tolerances& tol = Tolerances{});

}  // namespace qcs
