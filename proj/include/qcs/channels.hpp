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

#include "qcs/complex_matrix.hpp"
#include "qcs/linalg.hpp"
#include "qcs/random.hpp"
#include "qcs/regions.hpp"
#include "qcs/states.hpp"

namespace qcs {

/// Operator-sum description of a channel from region `in` to region
/// `out`. Kraus blocks are out_dim x in_dim; the set need not be trace
/// preserving (trace_preservation_deviation reports the gap).
struct KrausChannel {
  std::string in_label;
  std::string out_label;
  std::size_t in_dim = 0;
  std::size_t out_dim = 0;
  std::vector<ComplexMatrix> kraus;

  KrausChannel(std::string in_label, std::string out_label, std::size_t in_dim,
               std::size_t out_dim, std::vector<ComplexMatrix> kraus);

  /// max |sum_k K^dagger K - identity| entry.
  double trace_preservation_deviation() const;
};

/// sum_k K sigma K^dagger; sigma must be in_dim square.
ComplexMatrix apply(const KrausChannel& channel, const ComplexMatrix& sigma);

/// Channel with the single Kraus block identity.
KrausChannel identity_channel(const std::string& in_label,
                              const std::string& out_label, std::size_t dim);

/// Two ways to store a channel as an operator on in x out.
///
/// Jamiolkowski: rho = sum_ij |i><j|_in x N(|j><i|)_out. Basis dependent
/// but acts without any transposition: N(sigma) = Tr_in[rho (sigma x 1)].
/// This is the canonical stored form; conditional states use it.
///
/// Choi: the positive form, rho transposed on the in factor. Complete
/// positivity of N is exactly positivity of this matrix.
enum class ChoiConvention { Jamiolkowski, Choi };

/// A channel stored as a matrix on [in, out] (in is the first tensor
/// factor). No positivity or trace structure is enforced on construction,
/// so invalid channels can be represented and then diagnosed.
class ChoiState {
 public:
  ChoiState(RegionSpec in, RegionSpec out, ComplexMatrix matrix,
            ChoiConvention convention);

  const RegionSpec& in() const { return in_; }
  const RegionSpec& out() const { return out_; }
  std::size_t in_dim() const { return in_.dim; }
  std::size_t out_dim() const { return out_.dim; }
  const ComplexMatrix& matrix() const { return matrix_; }
  ChoiConvention convention() const { return convention_; }

  /// Same channel in the requested convention (partial transpose on the
  /// in factor when switching).
  ChoiState to_convention(ChoiConvention target) const;

 private:
  RegionSpec in_;
  RegionSpec out_;
  ComplexMatrix matrix_;
  ChoiConvention convention_;
};

/// Channel-to-state isomorphism: the Jamiolkowski-convention image of the
/// operator-sum channel. The identity channel maps to the swap operator.
ChoiState jamiolkowski(const KrausChannel& channel);

/// Apply the stored channel to an input: N(sigma) = Tr_in[rho (sigma x 1)].
/// Exact only in the Jamiolkowski convention; throws ConventionError when
/// handed the Choi form, because silently producing the transposed action
/// is the classic convention bug.
ComplexMatrix channel_action_from_state(const ChoiState& state,
                                        const ComplexMatrix& sigma);

/// Outcome of a complete-positivity and trace-preservation check.
struct CptpReport {
  bool hermitian = false;
  double hermiticity_deviation = 0.0;
  bool cp = false;
  /// Smallest eigenvalue of the Choi-convention matrix; NaN when the
  /// matrix is too far from Hermitian to diagonalize.
  double min_eigenvalue = 0.0;
  bool tp = false;
  /// max |Tr_out rho - identity| entry.
  double tp_deviation = 0.0;

  bool cptp() const { return hermitian && cp && tp; }
};

/// Diagnose CPTP-ness in any stored convention. CP is positivity of the
/// Choi form; TP is Tr_out = identity on the in region.
CptpReport verify_cptp(const ChoiState& state,
                       const Tolerances& tol = Tolerances{});

/// Operator-sum form recovered from the spectral decomposition of the
/// Choi-convention matrix. Eigenvalues below the support cutoff are
/// dropped. Throws NotPsdError when the channel is not completely
/// positive.
KrausChannel kraus_from_choi(const ChoiState& state,
                             const Tolerances& tol = Tolerances{});

/// Operator-sum composition outer after inner: all pairwise products.
/// outer's in must chain with inner's out (same label and dimension).
KrausChannel kraus_compose(const KrausChannel& outer,
                           const KrausChannel& inner);

/// Random channel that is CPTP by construction: a Gaussian matrix is
/// orthonormalized into an isometry from in to out x env with env
/// dimension in*out, then sliced into Kraus blocks.
KrausChannel random_cptp(Prng& rng, const std::string& in_label,
                         const std::string& out_label, std::size_t in_dim,
                         std::size_t out_dim);

/// View a channel as a causal conditional state of out given in. The
/// state is validated, so a non-CPTP channel is rejected here.
ConditionalState choi_to_conditional(const ChoiState& state,
                                     const Tolerances& tol = Tolerances{});

/// Inverse view; the conditional must have exactly one conditioned and
/// one target factor.
ChoiState conditional_to_choi(const ConditionalState& cond);

/// Composition of conditional states along a shared region: outer's
/// conditioned region must equal inner's target region B, and
///   result = Tr_B[outer inner]   (both lifted to the union).
/// Conditions on inner's conditioned region. Causal only when both
/// inputs are causal.
ConditionalState compose_states(const ConditionalState& outer,
                                const ConditionalState& inner,
                                const Tolerances& tol = Tolerances{});

}  // namespace qcs
